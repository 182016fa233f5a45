"""Hilbert command: fanalyze hilbert"""

import argparse

from fanalyze.cli.common import (
    add_cone_argument,
    add_fan_argument,
    add_format_argument,
    emit,
    load_checked,
    selected_cones,
    vectors,
)
from fanalyze.errors import ParseError
from fanalyze.services.charts import generates_lattice, hilbert_basis, in_semigroup


def lattice_point(text: str) -> tuple:
    """Parse "1,-2,0" into a lattice point."""
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer vector: {text!r}")


def register(subparsers):
    """Register the hilbert subcommand."""
    parser = subparsers.add_parser(
        "hilbert",
        help="Hilbert bases of the chart semigroups",
        description="Print the Hilbert basis of the dual-cone semigroup of each selected max cone.",
    )
    add_fan_argument(parser)
    add_cone_argument(parser)
    parser.add_argument(
        "--member",
        type=lattice_point,
        metavar="M",
        help="Also report whether the exponent M (e.g. 1,-1) lies in each semigroup",
    )
    add_format_argument(parser)
    parser.set_defaults(func=run)


def run(args):
    """Run the hilbert command."""
    document = load_checked(args.fan)
    if args.member is not None and len(args.member) != document.rank:
        raise ParseError(f"--member has length {len(args.member)}, expected {document.rank}")
    results = []
    for i, cone in selected_cones(document, args.cone):
        basis = hilbert_basis(cone)
        entry = {
            "index": i,
            "generators": vectors(basis.generators),
            "units": vectors(basis.units),
            "generates_lattice": generates_lattice(basis),
        }
        if args.member is not None:
            entry["contains_member"] = in_semigroup(cone, args.member)
        results.append(entry)
    emit(args, {"cones": results}, "HILBERT BASES")
    return 0
