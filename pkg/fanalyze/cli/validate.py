"""Validate command: fanalyze validate"""

from fanalyze.cli.common import add_fan_argument, add_format_argument, emit, vectors
from fanalyze.documents import load_fan_document
from fanalyze.errors import InvalidFan


def register(subparsers):
    """Register the validate subcommand."""
    parser = subparsers.add_parser(
        "validate",
        help="Check that a document describes a fan",
        description="Validate a fan document and list every violation found.",
    )
    add_fan_argument(parser)
    add_format_argument(parser)
    parser.set_defaults(func=run)


def run(args):
    """Run the validate command."""
    document = load_fan_document(args.fan)
    try:
        fan = document.to_fan()
    except InvalidFan as e:
        emit(args, {"fan_valid": False, "diagnostics": e.diagnostics}, "FAN VALIDATION")
        return InvalidFan.exit_code

    emit(
        args,
        {
            "fan_valid": True,
            "diagnostics": [],
            "rank": fan.rank,
            "rays": vectors(fan.ray_generators),
            "max_cones": fan.max_cone_indices(),
            "cone_count": len(fan.all_cones),
        },
        "FAN VALIDATION",
    )
    return 0
