"""Resolve command: fanalyze resolve"""

from fanalyze.cli.common import add_fan_argument, add_format_argument, emit, vectors
from fanalyze.documents import fan_to_document, parse_fan, write_fan
from fanalyze.geometry.fan import is_smooth_fan, resolve


def register(subparsers):
    """Register the resolve subcommand."""
    parser = subparsers.add_parser(
        "resolve",
        help="Smooth refinement by stellar subdivisions",
        description="Resolve the singularities of a fan by repeated stellar subdivision.",
    )
    add_fan_argument(parser)
    parser.add_argument(
        "-o",
        "--output",
        metavar="FILE",
        help="Write the resolved fan document here (default: include it in the output)",
    )
    parser.add_argument(
        "--max-subdivisions",
        type=int,
        metavar="N",
        help="Give up after N subdivisions (default: FANALYZE_MAX_SUBDIVISIONS or 10000)",
    )
    add_format_argument(parser)
    parser.set_defaults(func=run)


def run(args):
    """Run the resolve command."""
    fan = parse_fan(args.fan)
    resolved = resolve(fan, args.max_subdivisions)
    added = [r for r in resolved.ray_generators if r not in fan.ray_generators]
    payload = {
        "smooth": is_smooth_fan(resolved).smooth,
        "added_rays": vectors(added),
        "max_cone_count": len(resolved.max_cones),
    }
    if args.output:
        write_fan(resolved, args.output)
        payload["output"] = args.output
    else:
        payload["fan"] = fan_to_document(resolved).to_dict()
    emit(args, payload, "RESOLUTION")
    return 0
