"""Plain text tables rendered with tabulate."""

from tabulate import tabulate

from cliffordix.report import document_rows

from .base import ReportFormat


class TableReportFormat(ReportFormat):
    name = "table"
    extensions = (".txt",)

    def dump(self, documents):
        blocks = []
        for doc in documents:
            headers, rows = document_rows(doc)
            if "error" not in doc:
                title = f"{doc['curve']['family']} {doc['curve']['params']}  genus={doc['genus']}"
                blocks.append(title + "\n" + tabulate(rows, headers=headers, tablefmt="github"))
            else:
                blocks.append(tabulate(rows, headers=headers, tablefmt="github"))
        return "\n\n".join(blocks) + "\n"
