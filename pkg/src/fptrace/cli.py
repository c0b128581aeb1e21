"""Command-line front end.

Commands: verify-fp, verify-ta, bounds, scan, entropy, fixtures.  Every
command emits either a human-readable text report or a versioned,
byte-deterministic JSON document (``--format json``).  Exit status is 0 when
the analysis completed (whatever the verdict), 1 on parse/domain/budget
errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import bounds as bounds_mod
from . import fixtures
from . import fpcode
from . import paramscan
from . import tascheme
from .rigor import Certainty, DomainError, Enclosure

SCHEMA_VERSION = 1

DEFAULT_PRECISION = 64
DEFAULT_TRIALS = 10**5
DEFAULT_SEED = 1


class CliError(Exception):
    """User-facing failure: bad input file, bad parameters, budget."""


# ---------------------------------------------------------------------------
# Report rendering
# ---------------------------------------------------------------------------


def _jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, Enclosure):
        return {"lo": str(obj.lo), "hi": str(obj.hi), "decimal": obj.decimal_str()}
    if isinstance(obj, Certainty):
        return str(obj)
    if isinstance(obj, Enum):
        return obj.value
    if dataclasses.is_dataclass(obj):
        return {
            f.name: _jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)
        }
    if isinstance(obj, frozenset):
        return sorted(obj)
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    raise TypeError(f"cannot render {type(obj).__name__} as JSON")


def _emit(report: dict, lines, fmt: str) -> None:
    if fmt == "json":
        payload = {"schema": SCHEMA_VERSION, **report}
        print(json.dumps(_jsonable(payload), sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def _enc_line(label: str, enc: Enclosure) -> str:
    if enc.is_point:
        return f"{label}: {enc.decimal_str()}  (exact {enc.lo})"
    return f"{label}: {enc.decimal_str()}  [{enc.lo}, {enc.hi}]"


# ---------------------------------------------------------------------------
# Input loading
# ---------------------------------------------------------------------------


def _load_code(spec: str) -> tuple:
    if spec in fixtures.CODES:
        return spec, fixtures.CODES[spec]()
    path = Path(spec)
    if path.exists():
        try:
            return spec, fpcode.parse_code(path.read_text())
        except fpcode.CodeFormatError as exc:
            raise CliError(f"{spec}: {exc}") from exc
    raise CliError(f"{spec!r} is neither a built-in code fixture nor a file")


def _load_scheme(spec: str) -> tuple:
    if spec in fixtures.SCHEMES:
        return spec, fixtures.SCHEMES[spec]()
    path = Path(spec)
    if path.exists():
        try:
            return spec, tascheme.parse_scheme(path.read_text())
        except tascheme.SchemeFormatError as exc:
            raise CliError(f"{spec}: {exc}") from exc
    raise CliError(f"{spec!r} is neither a built-in scheme fixture nor a file")


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"{text!r} is not a rational (use p/q or an integer)") from exc


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_verify_fp(args) -> int:
    name, code = _load_code(args.code)
    definition = fpcode.FeasibleDefinition(args.definition)
    try:
        verdict = fpcode.is_frameproof(code, args.c, definition)
    except fpcode.BudgetExceededError as exc:
        raise CliError(str(exc)) from exc
    weights = sorted(fpcode.weight_set(code))
    dist = fpcode.min_distance(code) if code.n >= 2 else None
    report = {
        "command": "verify-fp",
        "code": name,
        "n": code.n,
        "l": code.length,
        "s": code.s,
        "c": args.c,
        "definition": definition.value,
        "weights": weights,
        "min_distance": dist,
        "frameproof": verdict.is_frameproof,
        "witness": verdict.witness,
    }
    lines = [
        f"command: verify-fp {name}",
        f"code: n={code.n} l={code.length} s={code.s}",
        f"weights: {{{', '.join(str(w) for w in weights)}}}",
        f"min distance: {dist if dist is not None else 'n/a (single codeword)'}",
        f"c: {args.c}  definition: {definition.value}",
        f"frame-proof: {str(verdict.is_frameproof).lower()}",
    ]
    if verdict.witness is not None:
        w = verdict.witness
        lines.append(
            f"witness: coalition {list(w.coalition)} frames codeword {w.framed}"
        )
    _emit(report, lines, args.format)
    return 0


def cmd_verify_ta(args) -> int:
    name, scheme = _load_scheme(args.scheme)
    method = args.method
    try:
        if method == "exact":
            verdict = tascheme.is_traceable_exact(scheme, args.c)
        elif method == "structural":
            verdict = tascheme.is_traceable_structural_disjoint(scheme, args.c)
        else:
            verdict = tascheme.sample_traceability(scheme, args.c, args.trials, args.seed)
    except DomainError as exc:
        raise CliError(str(exc)) from exc
    report = {
        "command": "verify-ta",
        "scheme": name,
        "l": scheme.l,
        "n": scheme.n,
        "k": scheme.k,
        "c": args.c,
        "method": method,
        "verdict": verdict.verdict,
        "detail": verdict.detail,
        "witness": verdict.witness,
    }
    lines = [
        f"command: verify-ta {name}",
        f"scheme: l={scheme.l} n={scheme.n} k={scheme.k}",
        f"c: {args.c}  method: {method}",
        f"verdict: {verdict.verdict}",
        f"detail: {verdict.detail}",
    ]
    if verdict.witness is not None:
        w = verdict.witness
        lines.append(
            f"witness: coalition {list(w.coalition)} builds pirate "
            f"{list(w.pirate)}, outsider decoder {w.outsider} ties the trace"
        )
    _emit(report, lines, args.format)
    return 0


def _bound_report_lines(rep) -> list:
    lines = [
        f"command: bounds {rep.theorem}",
        f"params: {_params_echo(rep.params)}",
        f"sigma constraint: {rep.sigma_certainty}  (sigma_ok: {str(rep.sigma_ok).lower()})",
        _enc_line("claimed lower bound, log2", rep.lower_log2),
        f"upper bound, exact: {rep.upper_exact}",
        _enc_line("upper bound, log2", rep.upper_log2),
        f"contradiction (upper < lower): {rep.contradiction}",
    ]
    if rep.sw_detail is not None:
        d = rep.sw_detail
        lines.insert(
            5, f"upper bound detail: t={d.t}, C(l,t)={d.numerator}, C(k-1,t-1)={d.denominator}"
        )
    return lines


def _params_echo(params) -> str:
    pairs = [
        f"{f.name}={getattr(params, f.name)}" for f in dataclasses.fields(params)
    ]
    return " ".join(pairs)


def cmd_bounds(args) -> int:
    sigma = _parse_rational(args.sigma)
    try:
        if args.which == "thm6":
            if args.l % args.c != 0:
                raise DomainError(f"the relation c = l/w needs c | l, got l={args.l}, c={args.c}")
            params = bounds_mod.Thm6Params(
                q=args.q, delta=args.delta, c=args.c, sigma=sigma,
                l=args.l, w=args.l // args.c,
            )
            rep = bounds_mod.contradiction_report_thm6(params, args.s, args.precision_bits)
        else:
            if args.k is None:
                raise DomainError("thm7 needs --k")
            params = bounds_mod.Thm7Params(
                q=args.q, delta=args.delta, c=args.c, sigma=sigma,
                l=args.l, k=args.k,
            )
            rep = bounds_mod.contradiction_report_thm7(params, args.precision_bits)
    except DomainError as exc:
        raise CliError(str(exc)) from exc
    report = {
        "command": "bounds",
        "which": rep.theorem,
        "params": rep.params,
        "precision_bits": args.precision_bits,
        "sigma_ok": rep.sigma_ok,
        "sigma_certainty": rep.sigma_certainty,
        "lower_log2": rep.lower_log2,
        "upper_exact": rep.upper_exact,
        "upper_log2": rep.upper_log2,
        "sw_detail": rep.sw_detail,
        "contradiction": rep.contradiction,
    }
    _emit(report, _bound_report_lines(rep), args.format)
    return 0


def _scan_lines(rep) -> list:
    lines = [
        f"command: scan --mode {rep.mode.value}",
        f"grid: w <= {rep.w_max}, c <= {rep.c_max}, precision {rep.precision_bits} bits",
        f"windows checked: {rep.windows_checked}  analytically excluded pairs: {rep.excluded_count}",
        f"entropy cap on grid: {rep.entropy_bound_on_grid}   log2(e) < 2: {rep.log2e_below_2}",
        "",
        "candidate windows (w, a, tag, lower, upper, integer exists):",
    ]
    shown = rep.candidates[:80]
    for rec in shown:
        win = rec.window
        lines.append(
            f"  w={rec.w:<3d} a={rec.a:<4d} {rec.tag.value:<13s} {rec.reading:<11s} "
            f"lower={win.lower!s:<8s} upper={win.upper.decimal_str(6)} -> {win.integer_exists}"
        )
    if len(rep.candidates) > len(shown):
        lines.append(f"  ... {len(rep.candidates) - len(shown)} more")
    if rep.cases is not None:
        ca, cb = rep.cases.unit_weight, rep.cases.weight_two
        cc, cd = rep.cases.coalition_two, rep.cases.finite_pairs
        lines += [
            "",
            "case checks:",
            f"  (a) w=1: window upper < 1 on grid: {ca.windows_upper_lt_1}; "
            f"analytic cap < 1: {ca.analytic_bound_lt_1}, decreasing: {ca.analytic_bound_decreasing}",
            f"  (b) w=2: margin positive exactly for a in [2, 18]: "
            f"{'yes' if cb.positive_as == tuple(range(2, 19)) else 'NO'}; "
            f"sign change at 19: {cb.sign_change_at_19}; windows empty: {cb.windows_empty}",
            f"  (c) a=2: f positive exactly for w in {list(cc.positive_ws)}; "
            f"uppers < 1 there: {cc.uppers_lt_1_on_positive}; f decreasing: {cc.f_decreasing}",
            f"  (d) finite pairs {list(cd.pairs)}: f negative: {cd.f_negative}",
        ]
    lines += ["", "either-or exhibits (w, a, delta -> classification):"]
    for ex in rep.either_or_exhibits:
        lines.append(f"  w={ex.w} a={ex.a} delta={ex.delta} -> {ex.classification.value}")
    lines += [
        "",
        f"positive f with empty window: {list(rep.positive_f_empty_windows)}",
    ]
    for note in rep.tail_notes:
        lines.append(f"note: {note}")
    verdict = "CertifiedInfeasible" if rep.verdict.is_true else str(rep.verdict)
    lines.append(f"global verdict: {verdict}")
    return lines


def cmd_scan(args) -> int:
    try:
        rep = paramscan.scan_infeasibility(
            args.wmax, args.cmax, paramscan.ScanMode(args.mode), args.precision_bits
        )
    except DomainError as exc:
        raise CliError(str(exc)) from exc
    report = {
        "command": "scan",
        "mode": rep.mode,
        "w_max": rep.w_max,
        "c_max": rep.c_max,
        "precision_bits": rep.precision_bits,
        "windows_checked": rep.windows_checked,
        "excluded_count": rep.excluded_count,
        "entropy_bound_on_grid": rep.entropy_bound_on_grid,
        "log2e_below_2": rep.log2e_below_2,
        "candidates": rep.candidates,
        "cases": rep.cases,
        "either_or_exhibits": rep.either_or_exhibits,
        "positive_f_empty_windows": [list(p) for p in rep.positive_f_empty_windows],
        "unresolved": [list(p) for p in rep.unresolved],
        "tail_notes": rep.tail_notes,
        "verdict": rep.verdict,
        "certified_infeasible": rep.certified_infeasible,
    }
    _emit(report, _scan_lines(rep), args.format)
    return 0


def cmd_entropy(args) -> int:
    x = _parse_rational(args.x)
    try:
        from .rigor import entropy_enclosure

        enc = entropy_enclosure(x, args.precision_bits)
    except DomainError as exc:
        raise CliError(str(exc)) from exc
    report = {
        "command": "entropy",
        "x": x,
        "precision_bits": args.precision_bits,
        "enclosure": enc,
    }
    width_ok = enc.width <= Fraction(1, 2**args.precision_bits)
    lines = [
        f"command: entropy {x}",
        _enc_line(f"H({x})", enc),
        f"width <= 2^-{args.precision_bits}: {str(width_ok).lower()}",
    ]
    _emit(report, lines, args.format)
    return 0


def cmd_fixtures(args) -> int:
    if args.action == "list":
        rows = [(name, fixtures.describe(name)) for name in fixtures.fixture_names()]
        report = {
            "command": "fixtures",
            "action": "list",
            "fixtures": [{"name": n, "summary": s} for n, s in rows],
        }
        lines = [f"{n:<20s} {s}" for n, s in rows]
        _emit(report, lines, args.format)
        return 0
    if args.name is None:
        raise CliError("fixtures emit needs a fixture name")
    try:
        text = fixtures.emit(args.name)
    except KeyError:
        raise CliError(
            f"unknown fixture {args.name!r}; try: {', '.join(fixtures.fixture_names())}"
        ) from None
    sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fptrace",
        description="Certified verification of frame-proof codes, traceability "
        "schemes, and the parameter bounds claimed for them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--precision-bits", type=int, default=DEFAULT_PRECISION)

    p = sub.add_parser("verify-fp", help="frame-proof verification of a code")
    p.add_argument("code", help="built-in fixture name or code file path")
    p.add_argument("--c", type=int, required=True, help="coalition size bound")
    p.add_argument(
        "--definition", choices=("unanimity", "coordset"), default="unanimity"
    )
    add_common(p)
    p.set_defaults(func=cmd_verify_fp)

    p = sub.add_parser("verify-ta", help="traceability verification of a scheme")
    p.add_argument("scheme", help="built-in fixture name or scheme file path")
    p.add_argument("--c", type=int, required=True, help="coalition size bound")
    p.add_argument("--method", "--mode", dest="method",
                   choices=("exact", "structural", "sample"), default="exact")
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    add_common(p)
    p.set_defaults(func=cmd_verify_ta)

    p = sub.add_parser("bounds", help="certified bound contradiction reports")
    p.add_argument("which", choices=("thm6", "thm7"))
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--sigma", required=True, help="exact rational, e.g. 7/64")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="keys per decoder (thm7)")
    p.add_argument("--s", type=int, default=2, help="alphabet size (thm6)")
    add_common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("scan", help="grid infeasibility scan")
    p.add_argument("--mode", choices=("thm10", "thm11"), default="thm10")
    p.add_argument("--wmax", type=int, default=64)
    p.add_argument("--cmax", type=int, default=64)
    add_common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("entropy", help="binary entropy enclosure")
    p.add_argument("x", help="rational in [0, 1], e.g. 1/16")
    add_common(p)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("fixtures", help="list or emit built-in fixtures")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("name", nargs="?", default=None)
    add_common(p)
    p.set_defaults(func=cmd_fixtures)

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
