"""Arguments and output helpers shared by the subcommands."""

import sys
from typing import Any, Dict, List, Optional

from fanalyze.documents import FanDocument, load_fan_document
from fanalyze.geometry.cone import Cone
from fanalyze.reporters import REPORTERS, get_reporter


def add_fan_argument(parser) -> None:
    parser.add_argument("fan", metavar="FAN", help="Fan document (JSON)")


def add_format_argument(parser) -> None:
    parser.add_argument(
        "--format",
        choices=list(REPORTERS.keys()),
        default="json",
        help="Output format (default: json)",
    )


def add_cone_argument(
    parser, help_text: str = "Index of a max cone in the document (default: every max cone)"
) -> None:
    parser.add_argument("--cone", type=int, metavar="I", help=help_text)


def emit(args, payload: Dict[str, Any], title: str) -> None:
    """Print a command result in the requested format."""
    sys.stdout.write(get_reporter(getattr(args, "format", "json")).render(payload, title))


def load_checked(path: str) -> FanDocument:
    """Load a fan document and make sure it describes a valid fan."""
    document = load_fan_document(path)
    document.to_fan()
    return document


def selected_cones(document: FanDocument, index: Optional[int]) -> List[tuple]:
    """(index, cone) pairs for --cone, or every max cone of the document."""
    if index is not None:
        return [(index, document.cone(index))]
    return list(enumerate(document.cones()))


def vectors(items) -> List[List[int]]:
    return [list(v) for v in items]


def cone_payload(cone: Cone) -> Dict[str, Any]:
    return {
        "rays": vectors(cone.rays),
        "lineality": vectors(cone.lineality_basis),
        "facet_normals": vectors(cone.facet_normals),
        "span_equations": vectors(cone.span_equations),
        "dim": cone.dim,
    }
