"""Orbits command: fanalyze orbits"""

from fanalyze.cli.common import (
    add_cone_argument,
    add_fan_argument,
    add_format_argument,
    emit,
    vectors,
)
from fanalyze.documents import load_fan_document, parse_fan
from fanalyze.services.charts import chart_orbits, orbit_report


def register(subparsers):
    """Register the orbits subcommand."""
    parser = subparsers.add_parser(
        "orbits",
        help="Torus orbits of the toric variety",
        description="List one torus orbit per cone with its dimension and closure.",
    )
    add_fan_argument(parser)
    parser.add_argument(
        "--relative-to",
        metavar="FAN",
        help="Flag orbits whose cone lies outside the support of this fan",
    )
    add_cone_argument(parser, "Only list the orbits in the affine chart of this max cone")
    add_format_argument(parser)
    parser.set_defaults(func=run)


def run(args):
    """Run the orbits command."""
    document = load_fan_document(args.fan)
    fan = document.to_fan()
    reference = parse_fan(args.relative_to) if args.relative_to else None
    payload = {"rank": fan.rank}
    keep = None
    if args.cone is not None:
        keep = set(chart_orbits(fan, document.cone(args.cone)))
        payload["chart_cone"] = args.cone
    payload["orbits"] = [
        {
            "cone_id": record.cone_id,
            "rays": vectors(record.cone.rays),
            "orbit_dim": record.orbit_dim,
            "in_boundary": record.in_boundary,
            "closure_contains": list(record.closure_contains),
        }
        for record in orbit_report(fan, reference)
        if keep is None or record.cone_id in keep
    ]
    emit(args, payload, "TORUS ORBITS")
    return 0
