"""Complete command: fanalyze complete"""

from fanalyze.cli.common import add_fan_argument, add_format_argument, emit
from fanalyze.documents import fan_to_document, parse_fan, write_fan
from fanalyze.geometry.fan import complete_fan


def register(subparsers):
    """Register the complete subcommand."""
    parser = subparsers.add_parser(
        "complete",
        help="Complete fan containing the given one",
        description=(
            "Extend a fan to a complete fan. In rank 2 the gaps are filled without "
            "changing existing cones; in higher rank a subdivision is completed."
        ),
    )
    add_fan_argument(parser)
    parser.add_argument(
        "-o",
        "--output",
        metavar="FILE",
        help="Write the completed fan document here (default: include it in the output)",
    )
    add_format_argument(parser)
    parser.set_defaults(func=run)


def run(args):
    """Run the complete command."""
    fan = parse_fan(args.fan)
    completion = complete_fan(fan)
    payload = {
        "subdivided": completion.subdivided,
        "max_cone_count": len(completion.fan.max_cones),
    }
    if args.output:
        write_fan(completion.fan, args.output)
        payload["output"] = args.output
    else:
        payload["fan"] = fan_to_document(completion.fan).to_dict()
    emit(args, payload, "COMPLETION")
    return 0
