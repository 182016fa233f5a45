"""CLI entry point and subcommand assembly."""

import argparse
import logging
import sys

from fanalyze import __version__
from fanalyze.config import get_log_level
from fanalyze.errors import FanalyzeError


def main(argv=None):
    """Main CLI entry point."""
    parser = argparse.ArgumentParser(
        prog="fanalyze",
        description=(
            "fanalyze - exact analysis of rational polyhedral fans\n\n"
            "Decides the Hartogs phenomenon for toric varieties from their fans and\n"
            "computes duals, Hilbert bases, chart equations, resolutions and orbits."
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Enable debug logging (default level from FANALYZE_LOG_LEVEL)",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    subparsers = parser.add_subparsers(dest="command", metavar="<command>")

    from fanalyze.cli import (
        analyze,
        complete,
        dual_cmd,
        equations,
        extends,
        hilbert,
        orbits,
        resolve,
        validate,
    )

    modules = [validate, analyze, dual_cmd, hilbert, equations, resolve, complete, orbits, extends]
    for module in modules:
        module.register(subparsers)

    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        sys.exit(0)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else get_log_level(),
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        code = args.func(args)
    except FanalyzeError as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(e.exit_code)
    sys.exit(code or 0)
