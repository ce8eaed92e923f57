"""
Build plain report documents (dicts of str/int/list) from computations.

Every document carries a "kind" key ("compute", "gonality", "oracle",
"mercat", "validate"). Rationals are written as "p/q" strings.
document_rows flattens a document for the table and csv formats.
"""

from typing import Iterable, List, Optional, Tuple

from cliffordix.clifford_index import CliffordResult, gamma_n, gamma_n_prime
from cliffordix.gonality import CurveData
from cliffordix.mercat import verify_cor_d_le_dn
from cliffordix.numerics import format_rational
from cliffordix.oracle import oracle_cross_check, oracle_cross_check_prime


def _maybe_rational(value) -> Optional[str]:
    return None if value is None else format_rational(value)


def curve_header(curve: CurveData) -> dict:
    return {
        "curve": {"family": curve.family.value, "params": curve.spec.params},
        "genus": curve.genus,
        "gamma1": {"lo": curve.gamma1.lo, "hi": curve.gamma1.hi},
    }


def result_dict(result: CliffordResult) -> dict:
    return {
        "n": result.n,
        "kind": result.kind,
        "lo": format_rational(result.lo),
        "hi": format_rational(result.hi),
        "sources": [{"side": s.side, "tag": s.tag} for s in result.sources],
        "mercat_conditional": _maybe_rational(result.mercat_conditional),
    }


def gonality_document(curve: CurveData) -> dict:
    doc = {"kind": "gonality"}
    doc.update(curve_header(curve))
    doc["gonality"] = [{"r": r, "lo": lo, "hi": hi} for r, lo, hi in curve.sequence.rows()]
    return doc


def compute_document(curve: CurveData, ranks: Iterable[int]) -> dict:
    doc = {"kind": "compute"}
    doc.update(curve_header(curve))
    doc["gonality"] = [{"r": r, "lo": lo, "hi": hi} for r, lo, hi in curve.sequence.rows()]
    rows = []
    for n in ranks:
        result = gamma_n(curve, n)
        entry = curve.sequence.entry(n)
        rows.append({
            "n": n,
            "d_n": {"lo": entry.lo, "hi": entry.hi},
            "gamma_n": result_dict(result),
            "gamma_n_prime": result_dict(gamma_n_prime(curve, n)),
            "mercat_conditional": _maybe_rational(result.mercat_conditional),
        })
    doc["results"] = rows
    return doc


def oracle_document(curve: CurveData, ranks: Iterable[int]) -> dict:
    doc = {"kind": "oracle"}
    doc.update(curve_header(curve))
    rows = []
    for n in ranks:
        check = oracle_cross_check(curve, n)
        check_prime = oracle_cross_check_prime(curve, n)
        rows.append({
            "n": n,
            "oracle": _maybe_rational(check.oracle.value),
            "argmin_d": check.oracle.argmin_d,
            "gamma_n": result_dict(check.result),
            "status": check.status,
            "oracle_prime": _maybe_rational(check_prime.oracle.value),
            "status_prime": check_prime.status,
            "weakened": check.oracle.weakened or check_prime.oracle.weakened,
        })
    doc["results"] = rows
    return doc


def mercat_document(curve: CurveData, ranks: Iterable[int]) -> dict:
    doc = {"kind": "mercat"}
    doc.update(curve_header(curve))
    rows = []
    for n in ranks:
        report = verify_cor_d_le_dn(curve, n)
        rows.append({
            "n": n,
            "applicable": report.applicable,
            "reason": report.reason,
            "checked": report.checked,
            "violations": [{"d": d, "h0": h0, "bound": c.bound} for d, h0, c in report.violations],
        })
    doc["results"] = rows
    return doc


def mercat_point_document(curve: CurveData, n: int, d: int, h0: int, check) -> dict:
    doc = {"kind": "mercat_point"}
    doc.update(curve_header(curve))
    doc["point"] = {"n": n, "d": d, "h0": h0}
    doc["verdict"] = check.verdict
    doc["range"] = check.range_name
    doc["bound"] = check.bound
    return doc


def validation_document(curve: CurveData, checks) -> dict:
    doc = {"kind": "validate"}
    doc.update(curve_header(curve))
    doc["checks"] = [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks]
    doc["passed"] = all(c.passed for c in checks)
    return doc


def error_document(kind: str, message: str, invariant: Optional[str] = None) -> dict:
    return {"kind": kind, "error": message, "invariant": invariant}


# ---------------------------------------------------------------------- #
# Flattening
# ---------------------------------------------------------------------- #
def _interval_text(lo, hi) -> str:
    return str(lo) if lo == hi else f"[{lo}, {hi}]"


def _result_text(result: dict) -> str:
    return _interval_text(result["lo"], result["hi"])


def document_rows(doc: dict) -> Tuple[List[str], List[list]]:
    """Headers and rows for one document; curve columns lead every row."""
    kind = doc.get("kind")
    lead_headers = ["family", "genus", "gamma1"]
    if "error" in doc:
        return ["kind", "error", "invariant"], [[kind, doc["error"], doc.get("invariant") or ""]]
    lead = [doc["curve"]["family"], doc["genus"],
            _interval_text(doc["gamma1"]["lo"], doc["gamma1"]["hi"])]

    if kind == "gonality":
        headers = lead_headers + ["r", "d_r"]
        rows = [lead + [g["r"], _interval_text(g["lo"], g["hi"])] for g in doc["gonality"]]
    elif kind == "compute":
        headers = lead_headers + ["n", "d_n", "gamma_n", "gamma_n'", "conditional", "sources"]
        rows = [
            lead + [
                row["n"],
                _interval_text(row["d_n"]["lo"], row["d_n"]["hi"]),
                _result_text(row["gamma_n"]),
                _result_text(row["gamma_n_prime"]),
                row["mercat_conditional"] or "",
                ";".join(s["tag"] for s in row["gamma_n"]["sources"]),
            ]
            for row in doc["results"]
        ]
    elif kind == "oracle":
        headers = lead_headers + ["n", "oracle", "argmin_d", "gamma_n", "status", "oracle'", "status'"]
        rows = [
            lead + [row["n"], row["oracle"] or "", row["argmin_d"] or "",
                    _result_text(row["gamma_n"]), row["status"],
                    row["oracle_prime"] or "", row["status_prime"]]
            for row in doc["results"]
        ]
    elif kind == "mercat":
        headers = lead_headers + ["n", "applicable", "checked", "violations", "reason"]
        rows = [
            lead + [row["n"], row["applicable"], row["checked"], len(row["violations"]), row["reason"]]
            for row in doc["results"]
        ]
    elif kind == "mercat_point":
        p = doc["point"]
        headers = lead_headers + ["n", "d", "h0", "range", "bound", "verdict"]
        rows = [lead + [p["n"], p["d"], p["h0"], doc["range"] or "", doc["bound"], doc["verdict"]]]
    elif kind == "validate":
        headers = lead_headers + ["check", "passed", "detail"]
        rows = [lead + [c["name"], c["passed"], c["detail"]] for c in doc["checks"]]
    else:
        raise ValueError(f"unknown document kind '{kind}'")
    return headers, rows
