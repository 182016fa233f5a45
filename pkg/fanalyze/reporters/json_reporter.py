"""JSON output: the payload itself, pretty-printed with stable key order."""

import json
from typing import Any, Dict

from fanalyze.reporters.base import BaseReporter


class JsonReporter(BaseReporter):
    @property
    def format_name(self) -> str:
        return "json"

    def render(self, payload: Dict[str, Any], title: str) -> str:
        return json.dumps(payload, indent=2) + "\n"
