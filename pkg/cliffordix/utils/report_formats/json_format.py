"""JSON report format: one document, or an array for batch sweeps."""

import json

from .base import ReportFormat, ReportParseError


class JsonReportFormat(ReportFormat):
    name = "json"
    extensions = (".json",)

    def dump(self, documents):
        payload = documents[0] if len(documents) == 1 else documents
        return json.dumps(payload, indent=2, sort_keys=False) + "\n"

    def load(self, text):
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as e:
            raise ReportParseError(f"invalid JSON report: {e}") from e
        return payload if isinstance(payload, list) else [payload]
