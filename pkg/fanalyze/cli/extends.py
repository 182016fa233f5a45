"""Extends command: fanalyze extends"""

from fanalyze.cli.common import add_fan_argument, add_format_argument, emit, vectors
from fanalyze.documents import parse_fan, parse_poly
from fanalyze.errors import ParseError
from fanalyze.services.charts import extends_to_variety, support_dual


def register(subparsers):
    """Register the extends subcommand."""
    parser = subparsers.add_parser(
        "extends",
        help="Does a Laurent polynomial extend to the whole variety?",
        description=(
            "Decide whether a Laurent polynomial on the torus extends to a regular "
            "function on the toric variety, with its valuation along every ray."
        ),
    )
    add_fan_argument(parser)
    parser.add_argument(
        "--poly",
        metavar="FILE",
        required=True,
        help="Laurent polynomial document (JSON)",
    )
    add_format_argument(parser)
    parser.set_defaults(func=run)


def run(args):
    """Run the extends command."""
    fan = parse_fan(args.fan)
    poly = parse_poly(args.poly)
    if poly.rank != fan.rank:
        raise ParseError(
            f"polynomial has rank {poly.rank} but the fan has rank {fan.rank}", args.poly
        )
    result = extends_to_variety(fan, poly)
    cone = support_dual(fan)
    payload = {
        "extends": result.extends,
        "valuations": [
            {"ray": list(ray), "valuation": value} for ray, value in result.valuations.items()
        ],
        "support_dual": {"rays": vectors(cone.rays), "lineality": vectors(cone.lineality_basis)},
    }
    emit(args, payload, "EXTENSION")
    return 0
