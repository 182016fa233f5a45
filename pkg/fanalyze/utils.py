"""Shared utilities for fanalyze."""

from fractions import Fraction
from typing import Dict, Hashable, List, Sequence


class DisjointSet:
    """Union-find over hashable items with path halving."""

    def __init__(self, items: Sequence[Hashable] = ()):
        self._parent: Dict[Hashable, Hashable] = {}
        for item in items:
            self.add(item)

    def add(self, item: Hashable) -> None:
        self._parent.setdefault(item, item)

    def find(self, item: Hashable) -> Hashable:
        parent = self._parent
        while parent[item] != item:
            parent[item] = parent[parent[item]]
            item = parent[item]
        return item

    def union(self, a: Hashable, b: Hashable) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self._parent[rb] = ra

    def groups(self) -> List[List[Hashable]]:
        """Groups of items in insertion order, each group in insertion order."""
        by_root: Dict[Hashable, List[Hashable]] = {}
        for item in self._parent:
            by_root.setdefault(self.find(item), []).append(item)
        return list(by_root.values())


def format_fraction(value: Fraction) -> str:
    """Render a Fraction as 'p' or 'p/q'."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_vector(vector: Sequence) -> str:
    """Render a vector as '(a, b, c)'."""
    return "(" + ", ".join(format_fraction(x) for x in vector) + ")"


def format_box(title: str, width: int = 60) -> str:
    """Format a box title for CLI output."""
    return f"{'=' * width}\n{title.center(width)}\n{'=' * width}"
