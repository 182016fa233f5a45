"""
Input and output documents.

Fan document (JSON):
    {"rank": 2, "rays": [[1, 0], [0, 1]], "max_cones": [[0, 1]]}
An empty index list is the zero cone; faces are never written.

Laurent polynomial document (JSON):
    {"terms": [{"exponent": [1, -1], "coefficient": "1/2"}]}
Coefficients are integers or "p/q" strings. An optional "rank" field is
required only for the zero polynomial.
"""

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

from fanalyze.errors import ParseError
from fanalyze.geometry.cone import Cone, cone_from_rays
from fanalyze.geometry.fan import Fan, fan_from_max_cones
from fanalyze.services.charts import LaurentPoly
from fanalyze.utils import format_fraction

_FRACTION_PATTERN = re.compile(r"^\s*-?\d+(\s*/\s*\d+)?\s*$")


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass
class FanDocument:
    rank: int
    rays: List[List[int]] = field(default_factory=list)
    max_cones: List[List[int]] = field(default_factory=list)

    @classmethod
    def from_dict(cls, data: Any, path: Optional[str] = None) -> "FanDocument":
        """Check the document shape; fan validity is checked separately."""
        if not isinstance(data, dict):
            raise ParseError("fan document must be a JSON object", path)
        for key in ("rank", "rays", "max_cones"):
            if key not in data:
                raise ParseError(f"missing field '{key}'", path)
        rank = data["rank"]
        if not _is_int(rank) or rank < 1:
            raise ParseError(f"rank must be a positive integer, got {rank!r}", path)

        rays = data["rays"]
        if not isinstance(rays, list):
            raise ParseError("'rays' must be a list", path)
        seen_rays = set()
        for i, ray in enumerate(rays):
            if not isinstance(ray, list) or not all(_is_int(x) for x in ray):
                raise ParseError(f"ray {i} must be a list of integers", path)
            if len(ray) != rank:
                raise ParseError(f"ray {i} has length {len(ray)}, expected {rank}", path)
            if not any(ray):
                raise ParseError(f"ray {i} is the zero vector", path)
            if tuple(ray) in seen_rays:
                raise ParseError(f"ray {i} duplicates an earlier ray", path)
            seen_rays.add(tuple(ray))

        cones = data["max_cones"]
        if not isinstance(cones, list):
            raise ParseError("'max_cones' must be a list", path)
        seen_cones = set()
        for j, cone in enumerate(cones):
            if not isinstance(cone, list) or not all(_is_int(x) for x in cone):
                raise ParseError(f"cone {j} must be a list of ray indices", path)
            for idx in cone:
                if not 0 <= idx < len(rays):
                    raise ParseError(f"cone {j} refers to missing ray {idx}", path)
            if len(set(cone)) != len(cone):
                raise ParseError(f"cone {j} repeats a ray index", path)
            if frozenset(cone) in seen_cones:
                raise ParseError(f"cone {j} duplicates an earlier cone", path)
            seen_cones.add(frozenset(cone))
        return cls(rank=rank, rays=[list(r) for r in rays], max_cones=[list(c) for c in cones])

    def to_dict(self) -> Dict[str, Any]:
        return {"rank": self.rank, "rays": self.rays, "max_cones": self.max_cones}

    def to_fan(self) -> Fan:
        return fan_from_max_cones(self.rank, self.rays, self.max_cones)

    def cone(self, index: int) -> Cone:
        """The index-th max cone as listed in the document."""
        if not 0 <= index < len(self.max_cones):
            raise ParseError(f"cone index {index} out of range (0..{len(self.max_cones) - 1})")
        return cone_from_rays(self.rank, [self.rays[i] for i in self.max_cones[index]])

    def cones(self) -> List[Cone]:
        return [self.cone(i) for i in range(len(self.max_cones))]


def _read_json(path: str) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read file: {e.strerror or e}", path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno}: {e.msg}", path)


def load_fan_document(path: str) -> FanDocument:
    return FanDocument.from_dict(_read_json(path), path)


def parse_fan(path: str) -> Fan:
    """Read and validate a fan document.

    Raises:
        ParseError: unreadable file, bad JSON or malformed document
        InvalidFan: the cones do not form a fan
    """
    return load_fan_document(path).to_fan()


def fan_to_document(fan: Fan) -> FanDocument:
    return FanDocument(
        rank=fan.rank,
        rays=[list(r) for r in fan.ray_generators],
        max_cones=fan.max_cone_indices(),
    )


def dumps_json(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


def write_fan(fan: Fan, path: str) -> None:
    Path(path).write_text(dumps_json(fan_to_document(fan).to_dict()), encoding="utf-8")


# =============================================================================
# Laurent polynomials
# =============================================================================


def parse_coefficient(value: Any, where: str = "coefficient") -> Fraction:
    if _is_int(value):
        return Fraction(value)
    if isinstance(value, str) and _FRACTION_PATTERN.match(value):
        numerator, _, denominator = value.replace(" ", "").partition("/")
        if denominator and int(denominator) == 0:
            raise ParseError(f"{where} has a zero denominator: {value!r}")
        return Fraction(int(numerator), int(denominator or 1))
    raise ParseError(f"{where} must be an integer or a 'p/q' string, got {value!r}")


def poly_from_dict(data: Any, path: Optional[str] = None) -> LaurentPoly:
    if not isinstance(data, dict) or not isinstance(data.get("terms"), list):
        raise ParseError("polynomial document must be an object with a 'terms' list", path)
    rank = data.get("rank")
    if rank is not None and (not _is_int(rank) or rank < 1):
        raise ParseError(f"rank must be a positive integer, got {rank!r}", path)
    terms: Dict[tuple, Fraction] = {}
    for i, term in enumerate(data["terms"]):
        if not isinstance(term, dict) or "exponent" not in term or "coefficient" not in term:
            raise ParseError(f"term {i} needs 'exponent' and 'coefficient'", path)
        exponent = term["exponent"]
        if not isinstance(exponent, list) or not all(_is_int(x) for x in exponent):
            raise ParseError(f"term {i} exponent must be a list of integers", path)
        if rank is None:
            rank = len(exponent)
        if len(exponent) != rank:
            raise ParseError(f"term {i} exponent has length {len(exponent)}, expected {rank}", path)
        try:
            coeff = parse_coefficient(term["coefficient"], f"term {i} coefficient")
        except ParseError as e:
            raise ParseError(e.reason, path)
        key = tuple(exponent)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    if rank is None:
        raise ParseError("the zero polynomial needs an explicit 'rank'", path)
    return LaurentPoly(rank, terms)


def parse_poly(path: str) -> LaurentPoly:
    return poly_from_dict(_read_json(path), path)


def poly_to_dict(f: LaurentPoly) -> Dict[str, Any]:
    return {
        "rank": f.rank,
        "terms": [
            {"exponent": list(e), "coefficient": format_fraction(c)} for e, c in f.terms.items()
        ],
    }
