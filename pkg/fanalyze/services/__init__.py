"""Computations built on cones and fans: Hartogs verdicts, charts and oracles."""
