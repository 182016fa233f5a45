"""Dual command: fanalyze dual"""

from fanalyze.cli.common import (
    add_cone_argument,
    add_fan_argument,
    add_format_argument,
    cone_payload,
    emit,
    load_checked,
    selected_cones,
)
from fanalyze.geometry.cone import dual


def register(subparsers):
    """Register the dual subcommand."""
    parser = subparsers.add_parser(
        "dual",
        help="Dual cones of max cones",
        description="Print the dual cone of each selected max cone in both representations.",
    )
    add_fan_argument(parser)
    add_cone_argument(parser)
    add_format_argument(parser)
    parser.set_defaults(func=run)


def run(args):
    """Run the dual command."""
    document = load_checked(args.fan)
    results = [
        {"index": i, "cone": cone_payload(cone), "dual": cone_payload(dual(cone))}
        for i, cone in selected_cones(document, args.cone)
    ]
    emit(args, {"cones": results}, "DUAL CONES")
    return 0
