"""Report-format plugin registry for cliffordix.

To add a new format:
  1. Create ``your_format.py`` with a subclass of :class:`ReportFormat`.
  2. Register it in :data:`FORMATS` below.
"""

from .base import ReportFormat, ReportParseError
from .csv_format import CsvReportFormat
from .json_format import JsonReportFormat
from .table import TableReportFormat

# Registry: name -> class
FORMATS = {
    TableReportFormat.name: TableReportFormat,
    JsonReportFormat.name: JsonReportFormat,
    CsvReportFormat.name: CsvReportFormat,
}

# Listing order for --help and all_formats()
PRIORITY = ["table", "json", "csv"]


def get_format(name):
    """Return a fresh instance of the named format, or None."""
    cls = FORMATS.get(name)
    return cls() if cls else None


def all_formats():
    """Yield (name, instance) for every registered format."""
    for name in PRIORITY:
        cls = FORMATS.get(name)
        if cls:
            yield name, cls()


__all__ = [
    "ReportFormat",
    "ReportParseError",
    "FORMATS",
    "PRIORITY",
    "get_format",
    "all_formats",
]
