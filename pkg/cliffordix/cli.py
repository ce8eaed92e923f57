"""
Command line interface.

  cliffordix compute   --curve general --genus 10 --ranks 1..5
  cliffordix gonality  --curve trigonal --genus 10
  cliffordix validate  --curve custom --genus 10 --assert d2=3
  cliffordix oracle    --curve bielliptic --genus 7 --ranks 4..8
  cliffordix mercat    --curve hyperelliptic --genus 8 --ranks 4

Exit codes: 0 success, 1 inconsistency or failed check, 2 input error.
"""

import argparse
import os
import sys
from typing import List

from tqdm import tqdm

from cliffordix.config import DEFAULT_SETTINGS, FAMILY_CHOICES, REPORT_FORMATS, load_settings, resolve_r_max
from cliffordix.curve_model import CurveSpec, CurveValidationError, Family, genus_of, validate_spec
from cliffordix.gonality import build_curve
from cliffordix.logger import Logger, log_exceptions
from cliffordix.mercat import mercat_check
from cliffordix.numerics import CliffordixError
from cliffordix.report import (
    compute_document,
    error_document,
    gonality_document,
    mercat_document,
    mercat_point_document,
    oracle_document,
    validation_document,
)
from cliffordix.utils.report_formats import PRIORITY, get_format
from cliffordix.validation import run_checks

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

logger = Logger()


class InputError(ValueError):
    """Malformed command line value."""


def parse_range(text: str, what: str) -> List[int]:
    """'5', '5..60' or '2,3,5' -> sorted list of ints."""
    try:
        values = set()
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                start, stop = part.split("..", 1)
                values.update(range(int(start), int(stop) + 1))
            elif part:
                values.add(int(part))
    except ValueError:
        raise InputError(f"cannot parse {what} '{text}'")
    if not values:
        raise InputError(f"empty {what} '{text}'")
    return sorted(values)


def parse_assertions(items) -> dict:
    """['d2=3', 'd5=9'] -> {2: 3, 5: 9}"""
    assertions = {}
    for item in items or []:
        try:
            key, value = item.split("=", 1)
            key = key.strip().lower()
            if not key.startswith("d"):
                raise ValueError
            assertions[int(key[1:])] = int(value)
        except ValueError:
            raise InputError(f"cannot parse assertion '{item}', expected dR=VALUE")
    return assertions


def specs_from_args(args) -> List[CurveSpec]:
    family = Family(args.curve)
    if family in (Family.SMOOTH_PLANE, Family.GENERAL_NODAL_PLANE):
        if args.delta is None:
            raise InputError(f"--delta is required for --curve {args.curve}")
        deltas = parse_range(args.delta, "delta")
        if family is Family.SMOOTH_PLANE:
            return [CurveSpec.smooth_plane(d) for d in deltas]
        if args.nodes is None:
            raise InputError("--nodes is required for --curve nodal")
        return [CurveSpec.nodal_plane(d, args.nodes) for d in deltas]

    if args.genus is None:
        raise InputError(f"--genus is required for --curve {args.curve}")
    genera = parse_range(args.genus, "genus")
    if family is Family.GENERAL_K_GONAL:
        if args.k is None:
            raise InputError("--k is required for --curve kgonal")
        return [CurveSpec.k_gonal(g, args.k) for g in genera]
    if family is Family.CUSTOM:
        assertions = parse_assertions(args.assertions)
        return [CurveSpec.custom(g, args.gamma1, assertions) for g in genera]
    builders = {
        Family.GENERAL: CurveSpec.general,
        Family.HYPERELLIPTIC: CurveSpec.hyperelliptic,
        Family.TRIGONAL: CurveSpec.trigonal,
        Family.BIELLIPTIC: CurveSpec.bielliptic,
    }
    return [builders[family](g) for g in genera]


# ---------------------------------------------------------------------- #
# Subcommand handlers: (curve, args, ranks) -> (document, ok)
# ---------------------------------------------------------------------- #
def handle_compute(curve, args, ranks):
    return compute_document(curve, ranks), True


def handle_gonality(curve, args, ranks):
    return gonality_document(curve), True


def handle_validate(curve, args, ranks):
    checks = run_checks(curve, ranks)
    for check in checks:
        if not check.passed:
            logger.warning(f"{curve.spec.label()}: check {check.name} failed: {check.detail}")
    doc = validation_document(curve, checks)
    return doc, doc["passed"]


def handle_oracle(curve, args, ranks):
    return oracle_document(curve, ranks), True


def handle_mercat(curve, args, ranks):
    point = (args.rank, args.degree, args.h0)
    if any(v is not None for v in point):
        if any(v is None for v in point):
            raise InputError("--rank, --degree and --h0 must be given together")
        if curve.gamma1_exact is None:
            raise InputError("a point check needs an exact gamma_1")
        check = mercat_check(curve.genus, curve.gamma1_exact, *point)
        return mercat_point_document(curve, *point, check), check.ok
    doc = mercat_document(curve, ranks)
    ok = all(not row["violations"] for row in doc["results"])
    return doc, ok


HANDLERS = {
    "compute": handle_compute,
    "gonality": handle_gonality,
    "validate": handle_validate,
    "oracle": handle_oracle,
    "mercat": handle_mercat,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--curve", required=True, choices=list(FAMILY_CHOICES), help="Curve family")
    common.add_argument("--genus", default=None, help="Genus, or a range such as 5..60")
    common.add_argument("--delta", default=None, help="Plane degree, or a range")
    common.add_argument("--k", type=int, default=None, help="Gonality for --curve kgonal")
    common.add_argument("--nodes", type=int, default=None, help="Node count for --curve nodal")
    common.add_argument("--gamma1", type=int, default=None, help="Stated gamma_1 for --curve custom")
    common.add_argument("--assert", dest="assertions", action="append", default=[],
                        help="Asserted gonality value dR=VALUE for --curve custom (repeatable)")
    common.add_argument("--ranks", default=DEFAULT_SETTINGS["default_ranks"],
                        help="Ranks n, e.g. 1..8 or 2,3,5")
    common.add_argument("--r-max", dest="r_max", type=int, default=None,
                        help="Gonality table length (default: 3 * genus)")
    format_help = "; ".join(f"{name}: {info['description']}" for name, info in REPORT_FORMATS.items())
    common.add_argument("--format", default=None, choices=PRIORITY, help=f"Output format ({format_help})")
    common.add_argument("--output", default=None,
                        help="Write the report to this file; its extension picks the format when --format is absent")
    common.add_argument("--config", default=None, help="YAML settings file")
    common.add_argument("--verbose", action="store_true", help="Debug logging on stderr")

    parser = argparse.ArgumentParser(
        prog="cliffordix",
        description="Gonality sequences and higher Clifford indices of curves",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("compute", parents=[common], help="gamma_n and gamma_n' per rank")
    sub.add_parser("gonality", parents=[common], help="The gonality sequence d_r")
    sub.add_parser("validate", parents=[common], help="Run every consistency check")
    sub.add_parser("oracle", parents=[common], help="Brute-force lower bounds vs closed forms")
    mercat = sub.add_parser("mercat", parents=[common], help="Check the conjectured h0 bounds")
    mercat.add_argument("--rank", type=int, default=None, help="Rank of a single point")
    mercat.add_argument("--degree", type=int, default=None, help="Degree of a single point")
    mercat.add_argument("--h0", type=int, default=None, help="h0 of a single point")
    return parser


def _format_for_output(output):
    """Format whose extension matches the output file, or None."""
    if not output:
        return None
    extension = os.path.splitext(output)[1].lstrip(".").lower()
    for name, info in REPORT_FORMATS.items():
        if info["extension"] == extension:
            return name
    return None


def _emit(documents, format_name, output):
    text = get_format(format_name).dump(documents)
    if output:
        with open(output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


@log_exceptions
def _run(args) -> int:
    try:
        settings = load_settings(args.config)
    except (OSError, ValueError, RuntimeError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT
    level = "DEBUG" if args.verbose else settings["log_level"]
    logger.configure(level=level, log_file=settings["log_file"])
    format_name = args.format or _format_for_output(args.output) or settings["output_format"]
    if args.r_max is not None:
        settings["r_max"] = args.r_max

    try:
        ranks = parse_range(args.ranks, "ranks")
        if ranks[0] < 1:
            raise InputError("ranks must be >= 1")
        specs = specs_from_args(args)
        for spec in specs:
            validate_spec(spec)
    except (InputError, CurveValidationError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT

    handler = HANDLERS[args.command]
    documents, all_ok = [], True
    for spec in tqdm(specs, desc=args.command, disable=len(specs) == 1, file=sys.stderr):
        try:
            curve = build_curve(spec, resolve_r_max(settings, genus_of(spec)))
            doc, ok = handler(curve, args, ranks)
        except InputError as e:
            print(f"Error: {e}", file=sys.stderr)
            return EXIT_INPUT
        except CliffordixError as e:
            logger.error(f"{spec.label()}: {e}")
            doc, ok = error_document(args.command, str(e), getattr(e, "invariant", None)), False
        documents.append(doc)
        all_ok = all_ok and ok

    _emit(documents, format_name, args.output)
    return EXIT_OK if all_ok else EXIT_FAILED


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _run(args)
