"""Equations command: fanalyze equations"""

from fanalyze.cli.common import (
    add_cone_argument,
    add_fan_argument,
    add_format_argument,
    emit,
    load_checked,
    selected_cones,
    vectors,
)
from fanalyze.services.charts import CHART_EQUATIONS_CAVEAT, chart_equations, hilbert_basis


def register(subparsers):
    """Register the equations subcommand."""
    parser = subparsers.add_parser(
        "equations",
        help="Binomial equations of affine charts",
        description="Print binomial relations among the chart coordinates of each selected max cone.",
    )
    add_fan_argument(parser)
    add_cone_argument(parser)
    add_format_argument(parser)
    parser.set_defaults(func=run)


def run(args):
    """Run the equations command."""
    document = load_checked(args.fan)
    results = []
    for i, cone in selected_cones(document, args.cone):
        results.append(
            {
                "index": i,
                "generators": vectors(hilbert_basis(cone).generators),
                "equations": [
                    {"a": list(eq.a), "b": list(eq.b)} for eq in chart_equations(cone)
                ],
            }
        )
    emit(args, {"cones": results, "caveat": CHART_EQUATIONS_CAVEAT}, "CHART EQUATIONS")
    return 0
