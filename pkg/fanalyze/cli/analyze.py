"""Analyze command: fanalyze analyze"""

import argparse

from fanalyze.cli.common import add_fan_argument, add_format_argument, emit
from fanalyze.config import get_degree_bound, get_oracle_config
from fanalyze.documents import load_fan_document
from fanalyze.errors import InvalidFan
from fanalyze.reporters import build_analysis_report, invalid_fan_report


def register(subparsers):
    """Register the analyze subcommand."""
    parser = subparsers.add_parser(
        "analyze",
        help="Full report: smoothness, completeness, complement and Hartogs verdict",
        description=(
            "Analyze a fan: validity, smoothness, completeness, the connected components "
            "of the complement of its support and the Hartogs verdict."
        ),
    )
    add_fan_argument(parser)
    parser.add_argument(
        "--degree-bound",
        type=int,
        metavar="N",
        help="List obstruction exponents with max |I_i| <= N (connected complement only; "
        "default: FANALYZE_DEGREE_BOUND)",
    )
    add_format_argument(parser)
    parser.add_argument("--with-oracles", action="store_true", help=argparse.SUPPRESS)
    parser.add_argument("--oracle-seed", type=int, help=argparse.SUPPRESS)
    parser.set_defaults(func=run)


def run(args):
    """Run the analyze command."""
    document = load_fan_document(args.fan)
    try:
        fan = document.to_fan()
    except InvalidFan as e:
        emit(args, invalid_fan_report(e.diagnostics).to_dict(), "FAN ANALYSIS")
        return InvalidFan.exit_code

    report = build_analysis_report(
        fan,
        degree_bound=get_degree_bound(args.degree_bound),
        with_oracles=args.with_oracles,
        oracle_config=get_oracle_config(seed=args.oracle_seed) if args.with_oracles else None,
    )
    emit(args, report.to_dict(), "FAN ANALYSIS")
    return 0
