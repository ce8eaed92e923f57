"""CSV report format: one row per rank (or per gonality entry / check)."""

import csv
import io

from cliffordix.report import document_rows

from .base import ReportFormat, ReportParseError


class CsvReportFormat(ReportFormat):
    name = "csv"
    extensions = (".csv",)

    def dump(self, documents):
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        header_written = None
        for doc in documents:
            headers, rows = document_rows(doc)
            if headers != header_written:
                writer.writerow(headers)
                header_written = headers
            writer.writerows(rows)
        return buffer.getvalue()

    def load(self, text):
        """Rows as dicts keyed by header; documents are not rebuilt."""
        reader = csv.DictReader(io.StringIO(text))
        if reader.fieldnames is None:
            raise ReportParseError("empty CSV report")
        return list(reader)
