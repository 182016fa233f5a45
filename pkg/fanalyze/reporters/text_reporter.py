"""Human-readable output."""

from typing import Any, Dict, List

from fanalyze.reporters.base import BaseReporter
from fanalyze.utils import format_box


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list) and all(isinstance(x, (int, str)) for x in value):
        return "(" + ", ".join(str(x) for x in value) + ")"
    return str(value)


def _is_scalar(value: Any) -> bool:
    if isinstance(value, dict):
        return False
    if isinstance(value, list):
        return all(isinstance(x, (int, str)) for x in value)
    return True


def _lines(value: Any, indent: int) -> List[str]:
    pad = "  " * indent
    out: List[str] = []
    if isinstance(value, dict):
        for key, item in value.items():
            label = key.replace("_", " ")
            if isinstance(item, list) and not item:
                out.append(f"{pad}{label}: (none)")
            elif _is_scalar(item):
                out.append(f"{pad}{label}: {_scalar(item)}")
            else:
                out.append(f"{pad}{label}:")
                out.extend(_lines(item, indent + 1))
    elif isinstance(value, list):
        for item in value:
            if _is_scalar(item):
                out.append(f"{pad}- {_scalar(item)}")
            else:
                nested = _lines(item, indent + 1)
                if nested:
                    nested[0] = f"{pad}- " + nested[0].lstrip()
                out.extend(nested)
    else:
        out.append(f"{pad}{_scalar(value)}")
    return out


class TextReporter(BaseReporter):
    @property
    def format_name(self) -> str:
        return "text"

    def render(self, payload: Dict[str, Any], title: str) -> str:
        return "\n".join([format_box(title)] + _lines(payload, 0)) + "\n"
