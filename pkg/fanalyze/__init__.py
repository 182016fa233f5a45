"""fanalyze - exact analysis of rational polyhedral fans and the Hartogs phenomenon."""

__version__ = "1.0.0"
