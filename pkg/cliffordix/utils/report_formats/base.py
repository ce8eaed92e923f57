"""Base class for report-format plugins.

A *ReportFormat* knows how to:
  * serialize a list of report documents to text (``dump``)
  * read text written by ``dump`` back into documents (``load``)

Adding a new format = subclass :class:`ReportFormat` and register it in
``__init__.py``.
"""


class ReportParseError(Exception):
    """Raised when report text cannot be read back."""


class ReportFormat:
    # Human-readable id ("table", "json", ...)
    name = ""
    # File extensions this format uses
    extensions = ()

    def dump(self, documents):
        """Serialize a list of document dicts to a string."""
        raise NotImplementedError

    def load(self, text):
        """Parse text produced by dump; formats that flatten documents may not support this."""
        raise NotImplementedError
