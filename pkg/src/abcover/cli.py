"""Command-line front end: build family specs, validate, analyze, tabulate.

Exit codes: 0 success, 1 validation failure, 2 malformed input,
3 unsupported configuration.  Output is deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .canonical import canonical_map_report
from .catalog import VARIANTS, FamilyRow, RemarkRow, family, theorem_table
from .cover import (CoverSpec, ValidationReport, cover_spec_from_json,
                    cover_spec_to_json, validate)
from .errors import (CoverDataError, StructuralError, TableIntegrityError,
                     UnsupportedConfigurationError)
from .invariants import minimality_report, numerical_invariants


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _read_spec(path: str) -> CoverSpec:
    raw = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise StructuralError(f"invalid JSON: {exc}") from exc
    return cover_spec_from_json(data)


def _emit_json(doc: object) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _render_spec_text(spec: CoverSpec) -> str:
    lines = [f"rank: {spec.rank}",
             f"surface: P1xP1 blown up at {spec.surface.blowup_count} point(s)"]
    for point in spec.surface.points:
        lines.append(f"  point {point.label}: {point.position}")
    lines.append("branch:")
    for comp in spec.branch:
        lines.append(f"  sigma={comp.sigma}  class={comp.divisor}  "
                     f"smooth={_yesno(comp.flags.smooth)} "
                     f"reduced={_yesno(comp.flags.reduced)}")
    lines.append(f"assumptions: pairwise_transversal="
                 f"{_yesno(spec.assumptions.pairwise_transversal)} "
                 f"max_two_through_any_point="
                 f"{_yesno(spec.assumptions.max_two_through_any_point)}")
    for note in spec.assumptions.special_points:
        lines.append(f"  special point: {note}")
    return "\n".join(lines)


def _render_validation_text(report: ValidationReport) -> str:
    lines = []
    passed = 0
    for rel in report.relations:
        status = "PASS" if rel.passed else "FAIL"
        passed += rel.passed
        halved = "-" if rel.halved is None else str(rel.halved)
        lines.append(f"relation chi={rel.character}: sum={rel.branch_sum}  "
                     f"L={halved}  residual={rel.residual}  {status}")
    lines.append(f"branch reduced flags: {_yesno(report.branch_reduced)}")
    lines.append("assumption (unverified): pairwise transversality = "
                 f"{_yesno(report.assumptions.pairwise_transversal)}")
    lines.append("assumption (unverified): at most two components through any "
                 f"point = {_yesno(report.assumptions.max_two_through_any_point)}")
    for warning in report.warnings:
        lines.append(f"warning: {warning}")
    lines.append(f"result: {passed}/{len(report.relations)} relations pass")
    return "\n".join(lines)


def _cmd_family(args: argparse.Namespace) -> int:
    spec = family(args.variant, args.m, args.n)
    if args.format == "json":
        _emit_json(cover_spec_to_json(spec))
    else:
        print(_render_spec_text(spec))
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    spec = _read_spec(args.path)
    report = validate(spec)
    if args.format == "json":
        _emit_json(report.to_json())
    else:
        print(_render_validation_text(report))
    if report.all_passed:
        return 0
    failing = ", ".join(str(c) for c in report.failing_characters)
    print(f"validation failed for character(s): {failing}", file=sys.stderr)
    return 1


def _cmd_analyze(args: argparse.Namespace) -> int:
    spec = _read_spec(args.path)
    report = validate(spec)
    if not report.all_passed:
        failing = ", ".join(str(c) for c in report.failing_characters)
        print(f"cannot analyze: validation failed for character(s): {failing}",
              file=sys.stderr)
        return 1
    inv = numerical_invariants(spec)
    mini = minimality_report(spec)
    canonical = canonical_map_report(spec)
    if args.format == "json":
        _emit_json({
            "invariants": inv.to_json(),
            "minimality": mini.to_json(),
            "canonical": canonical.to_json(),
        })
    else:
        lines = [
            f"K2={inv.k_squared} pg={inv.p_g} chi={inv.chi} q={inv.q}",
            f"W={inv.two_k_class}  nef={_yesno(mini.nef)} big={_yesno(mini.big)}  "
            f"verdict: {mini.verdict}",
            "quotient eigenspaces: " + " ".join(
                f"{chi}:{dim}" for chi, dim in sorted(
                    canonical.quotient_eigen_dims.items())),
            f"degree_factor={canonical.degree_factor} "
            f"canonical_degree={canonical.canonical_degree_text} "
            f"base_points={canonical.base_points}",
        ]
        if canonical.image_degree is not None:
            lines.append(f"image_degree={canonical.image_degree}")
        for remark in canonical.remarks:
            lines.append(f"remark: {remark}")
        print("\n".join(lines))
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    entries = theorem_table(_parse_range(args.m), _parse_range(args.n))
    rows = [e for e in entries if isinstance(e, FamilyRow)]
    remarks = [e for e in entries if isinstance(e, RemarkRow)]
    if args.format == "json":
        _emit_json({
            "rows": [r.to_json() for r in rows],
            "remarks": [r.to_json() for r in remarks],
        })
    else:
        lines = [f"{'variant':<8} {'m':>3} {'n':>3} {'K2':>5} {'pg':>4} {'q':>2} "
                 f"{'deg_image':>9} {'bpf':>4}"]
        for r in rows:
            lines.append(f"{r.variant:<8} {r.m:>3} {r.n:>3} {r.K2:>5} {r.pg:>4} "
                         f"{r.q:>2} {r.image_degree:>9} {_yesno(r.base_point_free):>4}")
        for r in remarks:
            lines.append(f"# {r.variant} m={r.m} n={r.n}: {r.remark}")
        print("\n".join(lines))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abcover",
        description="Exact-arithmetic analysis of Z2^r covers of P1xP1 and its "
                    "one-point blowup")
    sub = parser.add_subparsers(dest="command", required=True)

    p_family = sub.add_parser("family", help="emit the cover spec of a built-in family")
    p_family.add_argument("--variant", required=True, choices=VARIANTS)
    p_family.add_argument("--m", required=True, type=int)
    p_family.add_argument("--n", required=True, type=int)
    p_family.add_argument("--format", choices=("json", "table"), default="json")
    p_family.set_defaults(handler=_cmd_family)

    p_validate = sub.add_parser("validate", help="check the cover relations of a spec")
    p_validate.add_argument("path", help="spec file, or - for standard input")
    p_validate.add_argument("--format", choices=("json", "table"), default="json")
    p_validate.set_defaults(handler=_cmd_validate)

    p_analyze = sub.add_parser("analyze", help="invariants and canonical-map report")
    p_analyze.add_argument("path", help="spec file, or - for standard input")
    p_analyze.add_argument("--format", choices=("json", "table"), default="json")
    p_analyze.set_defaults(handler=_cmd_analyze)

    p_table = sub.add_parser("table", help="reproduce the family invariant table")
    p_table.add_argument("--m", required=True, help="value or range, e.g. 2..6")
    p_table.add_argument("--n", required=True, help="value or range, e.g. 2..6")
    p_table.add_argument("--format", choices=("json", "table"), default="json")
    p_table.set_defaults(handler=_cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except CoverDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except TableIntegrityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except UnsupportedConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (StructuralError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
