"""Base reporter interface."""

from abc import ABC, abstractmethod
from typing import Any, Dict


class BaseReporter(ABC):
    """Abstract base class for command output formats."""

    @property
    @abstractmethod
    def format_name(self) -> str:
        """Name used with --format."""
        pass

    @abstractmethod
    def render(self, payload: Dict[str, Any], title: str) -> str:
        """
        Render a command result.

        Args:
            payload: JSON-compatible result (dicts, lists, strings, numbers, booleans)
            title: Heading for human-readable formats

        Returns:
            The text to print, ending with a newline
        """
        pass
