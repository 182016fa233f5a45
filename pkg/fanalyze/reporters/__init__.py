"""Output formats for command results."""

from fanalyze.reporters.base import BaseReporter
from fanalyze.reporters.json_reporter import JsonReporter
from fanalyze.reporters.report import AnalysisReport, build_analysis_report, invalid_fan_report
from fanalyze.reporters.text_reporter import TextReporter

REPORTERS = {
    "json": JsonReporter,
    "text": TextReporter,
}


def get_reporter(format_name: str) -> BaseReporter:
    """Get a reporter by format name."""
    reporter_class = REPORTERS.get(format_name.lower())
    if not reporter_class:
        raise ValueError(
            f"Unknown output format: {format_name}. Available: {', '.join(REPORTERS.keys())}"
        )
    return reporter_class()


__all__ = [
    "AnalysisReport",
    "BaseReporter",
    "JsonReporter",
    "TextReporter",
    "build_analysis_report",
    "invalid_fan_report",
    "get_reporter",
    "REPORTERS",
]
