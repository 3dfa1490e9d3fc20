"""Command-line front end.

    eur eval      --c C [--bits] [--json]
    eur constants [--json]
    eur sweep     --from A --to B --step S --out FILE [--bits]
    eur verify    --suite {grid,qubit,shape,random,critique,all}
                  [--c-list C ...] [--tol T] [--grid N] [--seed S] [--json]
    eur critique  --c C [--json]

Exit codes: 0 success, 2 domain error, 3 solver non-convergence,
4 verification failure.  Defaults for --tol and --grid can also come from
the environment (EUR_TOL, EUR_GRID); explicit flags win.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import core, oracle, solve
from .errors import ConvergenceError, DomainError, VerificationError

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_CONVERGENCE = 3
EXIT_VERIFY = 4

LN2 = math.log(2.0)

_ENTROPY_FIELDS = ("b_mu", "f", "g", "lattice", "m_inf", "h1", "b_vs")

_VERIFY_DEFAULT_C = {
    "grid": [0.3, 0.5, 0.65, 0.75, 0.80, 0.90, 0.99],
    "qubit": [0.71, 0.75, 0.80, 0.8336, 0.87, 0.95, 0.99],
    "shape": [0.5, 0.8, 0.9],
    "critique": [0.3, 0.5, 0.6],
}
_VERIFY_DEFAULT_TOL = {"grid": 2e-3, "qubit": 1e-6, "random": 1e-9, "critique": 1e-10}
_RANDOM_DIMS = (2, 3, 4, 5)
_RANDOM_SAMPLES = 10_000
_DEFAULT_SEED = 1234


@dataclass(frozen=True)
class SweepRow:
    c: float
    theta: float
    b_mu: float
    f: float
    g: float
    lattice: float
    m_inf: Optional[float]  # blank for c >= 1/sqrt(2)
    h1: Optional[float]  # blank outside [1/sqrt(2), c_star]
    b_vs: float
    region: str


def _env_float(name: str) -> Optional[float]:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return float(raw)
    except ValueError:
        raise DomainError(f"environment variable {name} is not a number: {raw!r}")


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"environment variable {name} is not an integer: {raw!r}")


def _resolve_tol(flag: Optional[float], default: float) -> float:
    if flag is not None:
        return flag
    env = _env_float("EUR_TOL")
    return env if env is not None else default


def _resolve_grid(flag: Optional[int], default: int) -> int:
    if flag is not None:
        return flag
    env = _env_int("EUR_GRID")
    return env if env is not None else default


def _fmt(x: Optional[float]) -> str:
    return "" if x is None else f"{x + 0.0:.12g}"  # + 0.0 drops negative zero


def compute_row(c: float) -> SweepRow:
    return _row_and_witness(c)[0]


def _row_and_witness(c: float) -> tuple[SweepRow, Optional[tuple[float, float]]]:
    report = solve.b_vs(c)
    cs = solve.c_star().root
    in_h1_range = core.INV_SQRT2 <= c <= cs
    h1 = report.nats if report.region.tag is solve.RegionTag.H1 else (
        solve.h1_bound(c) if in_h1_range else None
    )
    mi = core.m_inf(c) if c < core.INV_SQRT2 else None
    row = SweepRow(
        c=c,
        theta=core.Overlap(c).theta,
        b_mu=core.b_mu(c),
        f=core.f_bound(c),
        g=core.g_bound(c),
        lattice=core.lattice_bound(c),
        m_inf=mi,
        h1=h1,
        b_vs=report.nats,
        region=str(report.region.tag),
    )
    return row, report.witness


def _row_record(row: SweepRow, witness: Optional[tuple[float, float]], bits: bool) -> dict:
    scale = 1.0 / LN2 if bits else 1.0
    rec: dict = {"c": row.c, "theta": row.theta}
    for name in _ENTROPY_FIELDS:
        val = getattr(row, name)
        rec[name] = None if val is None else val * scale
    rec["region"] = row.region
    rec["witness_p_a"] = witness[0] if witness else None
    rec["witness_p_b"] = witness[1] if witness else None
    rec["unit"] = "bits" if bits else "nats"
    return rec


def _print_record(rec: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(rec))
        return
    width = max(len(k) for k in rec)
    for k, v in rec.items():
        if isinstance(v, float):
            v = _fmt(v)
        elif v is None:
            v = ""
        print(f"{k:<{width}} = {v}")


def cmd_eval(args: argparse.Namespace) -> int:
    row, witness = _row_and_witness(args.c)
    _print_record(_row_record(row, witness, args.bits), args.json)
    return EXIT_OK


def cmd_constants(args: argparse.Namespace) -> int:
    rows = {"c_star": solve.c_star(), "c_dagger": solve.c_dagger()}
    if args.json:
        print(
            json.dumps(
                {
                    name: {
                        "value": rr.root,
                        "residual": rr.residual,
                        "bracket_lo": rr.bracket[0],
                        "bracket_hi": rr.bracket[1],
                        "iterations": rr.iterations,
                    }
                    for name, rr in rows.items()
                }
            )
        )
        return EXIT_OK
    for name, rr in rows.items():
        print(f"{name} = {rr.root:.12g}")
        print(f"  residual   = {rr.residual:.3e}")
        print(f"  bracket    = [{rr.bracket[0]:.12g}, {rr.bracket[1]:.12g}]")
        print(f"  iterations = {rr.iterations}")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    lo, hi, step = args.from_, args.to, args.step
    if not (0.0 < lo < hi <= 1.0) or step <= 0.0:
        raise DomainError(f"need 0 < from < to <= 1 and step > 0, got {lo}, {hi}, {step}")
    scale = 1.0 / LN2 if args.bits else 1.0
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    try:
        out = open(args.out, "w", newline="")
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    with out:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["c", "theta", "b_mu", "f", "g", "lattice", "m_inf", "h1", "b_vs", "region"])
        for k in range(count):
            c = lo + k * step
            if abs(c - hi) < step * 1e-6:
                c = hi  # snap the final sample; k*step can overshoot by ulps
            elif c > hi:
                break
            row = compute_row(c)
            writer.writerow(
                [
                    _fmt(row.c),
                    _fmt(row.theta),
                    _fmt(row.b_mu * scale),
                    _fmt(row.f * scale),
                    _fmt(row.g * scale),
                    _fmt(row.lattice * scale),
                    _fmt(None if row.m_inf is None else row.m_inf * scale),
                    _fmt(None if row.h1 is None else row.h1 * scale),
                    _fmt(row.b_vs * scale),
                    row.region,
                ]
            )
    return EXIT_OK


def cmd_critique(args: argparse.Namespace) -> int:
    report = solve.critique_report(args.c)
    if args.json:
        print(
            json.dumps(
                {
                    "c": report.c,
                    "theta": report.theta,
                    "interval_lo": report.interval[0],
                    "interval_hi": report.interval[1],
                    "roots": [
                        {
                            "alpha": r.alpha,
                            "p_a": r.p_a,
                            "p_b": r.p_b,
                            "residual": r.residual,
                            "admissible": r.admissible,
                            "violated_constraint": r.violated_constraint,
                        }
                        for r in report.roots
                    ],
                }
            )
        )
        return EXIT_OK
    print(f"c = {report.c:.12g}  theta = {report.theta:.12g}")
    print(f"admissible interval for P_A: ({report.interval[0]:.12g}, {report.interval[1]:.12g})")
    if not report.roots:
        print("no nontrivial stationarity roots found")
        return EXIT_OK
    for r in report.roots:
        status = "admissible" if r.admissible else f"INADMISSIBLE ({r.violated_constraint})"
        print(
            f"  alpha = {r.alpha: .12g}  P_A = {r.p_a:.6f}  P_B = {r.p_b:.6f}  "
            f"residual = {r.residual:.2e}  {status}"
        )
    return EXIT_OK


def _verify_grid(c_list: Sequence[float], tol: float, grid_n: int, lines: list[str]) -> bool:
    ok = True
    for c in c_list:
        rep = oracle.grid_min(c, points_per_axis=grid_n)
        if c >= core.INV_SQRT2:
            passed = abs(rep.gap) <= tol
            desc = f"|oracle-analytic| = {abs(rep.gap):.3e}"
        else:
            passed = rep.oracle_min <= rep.analytic_ref + tol and rep.oracle_min < core.b_mu(c)
            desc = f"min = {rep.oracle_min:.6f} vs endpoint-infimum {rep.analytic_ref:.6f}"
        lines.append(f"{'PASS' if passed else 'FAIL'} grid c={c:g} {desc} (tol {tol:g})")
        ok &= passed
    return ok


def _verify_qubit(c_list: Sequence[float], tol: float, lines: list[str]) -> bool:
    ok = True
    for c in c_list:
        rep = oracle.qubit_min(c)
        passed = abs(rep.gap) <= tol
        lines.append(
            f"{'PASS' if passed else 'FAIL'} qubit c={c:g} |oracle-analytic| = "
            f"{abs(rep.gap):.3e} (tol {tol:g})"
        )
        ok &= passed
    return ok


def _verify_shape(c_list: Sequence[float], grid_n: int, lines: list[str]) -> bool:
    ok = True
    for c in c_list:
        try:
            summary = oracle.shape_check(c, grid=max(grid_n, 1000))
        except VerificationError as exc:
            lines.append(f"FAIL shape c={c:g} {exc}")
            ok = False
        else:
            lines.append(
                f"PASS shape c={c:g} sign-changes={summary.e1_sign_changes} "
                f"extremum={summary.extremum} endpoint-gap={summary.k_endpoint_gap:.2e}"
            )
    for c, diff in oracle.delta_m_inf_limit():
        if diff <= 0.0:
            lines.append(f"FAIL shape margin b_mu - m_inf = {diff:.3e} at c={c!r} not positive")
            ok = False
    limit_tail = oracle.delta_m_inf_limit()[-1][1]
    lines.append(
        f"INFO shape measured limit of b_mu - m_inf toward 1/sqrt(2) is {limit_tail:.3e} "
        "(converges to 0; the difference stays positive on the open interval)"
    )
    return ok


def _verify_random(tol: float, seed: int, lines: list[str]) -> bool:
    ok = True
    for dim in _RANDOM_DIMS:
        try:
            summary = oracle.random_state_check(dim, _RANDOM_SAMPLES, seed)
        except VerificationError as exc:
            lines.append(f"FAIL random dim={dim} {exc}")
            ok = False
            continue
        passed = summary.min_margin >= -tol
        lines.append(
            f"{'PASS' if passed else 'FAIL'} random dim={dim} samples={summary.samples} "
            f"tightest margin = {summary.min_margin:.3e} at c = {summary.argmin_overlap:.4f}"
        )
        ok &= passed
    return ok


def _verify_critique(c_list: Sequence[float], tol: float, lines: list[str]) -> bool:
    ok = True
    for c in c_list:
        rep = solve.critique_report(c)
        nontrivial = len(rep.roots)
        all_flagged = nontrivial > 0 and rep.inadmissible_count == nontrivial
        residual_ok = all(r.residual <= tol for r in rep.roots)
        passed = all_flagged and residual_ok
        lines.append(
            f"{'PASS' if passed else 'FAIL'} critique c={c:g} roots={nontrivial} "
            f"inadmissible={rep.inadmissible_count} max-residual="
            f"{max((r.residual for r in rep.roots), default=0.0):.2e}"
        )
        ok &= passed
    return ok


def cmd_verify(args: argparse.Namespace) -> int:
    suites = ["grid", "qubit", "shape", "random", "critique"] if args.suite == "all" else [args.suite]
    lines: list[str] = []
    ok = True
    for suite in suites:
        c_list = args.c_list or _VERIFY_DEFAULT_C.get(suite, [])
        if suite == "grid":
            tol = _resolve_tol(args.tol, _VERIFY_DEFAULT_TOL["grid"])
            ok &= _verify_grid(c_list, tol, _resolve_grid(args.grid, 2001), lines)
        elif suite == "qubit":
            ok &= _verify_qubit(c_list, _resolve_tol(args.tol, _VERIFY_DEFAULT_TOL["qubit"]), lines)
        elif suite == "shape":
            ok &= _verify_shape(c_list, _resolve_grid(args.grid, 10_000), lines)
        elif suite == "random":
            seed = args.seed if args.seed is not None else _DEFAULT_SEED
            ok &= _verify_random(_resolve_tol(args.tol, _VERIFY_DEFAULT_TOL["random"]), seed, lines)
        elif suite == "critique":
            ok &= _verify_critique(
                c_list, _resolve_tol(args.tol, _VERIFY_DEFAULT_TOL["critique"]), lines
            )
    for line in lines:
        print(line)
    n_fail = sum(1 for line in lines if line.startswith("FAIL"))
    n_pass = sum(1 for line in lines if line.startswith("PASS"))
    print(f"RESULT: {n_pass} passed, {n_fail} failed")
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eur", description="entropic uncertainty bounds: evaluate, solve, verify"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate every bound at one overlap")
    p_eval.add_argument("--c", type=float, required=True, help="overlap in (0, 1]")
    p_eval.add_argument("--bits", action="store_true", help="report entropies in bits")
    p_eval.add_argument("--json", action="store_true", help="one JSON object instead of text")
    p_eval.set_defaults(func=cmd_eval)

    p_const = sub.add_parser("constants", help="solved critical overlaps with residuals")
    p_const.add_argument("--json", action="store_true")
    p_const.set_defaults(func=cmd_constants)

    p_sweep = sub.add_parser("sweep", help="CSV table of all bounds over a c range")
    p_sweep.add_argument("--from", dest="from_", type=float, required=True)
    p_sweep.add_argument("--to", type=float, required=True)
    p_sweep.add_argument("--step", type=float, required=True)
    p_sweep.add_argument("--out", type=str, required=True)
    p_sweep.add_argument("--bits", action="store_true")
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser("verify", help="run a brute-force verification suite")
    p_verify.add_argument(
        "--suite",
        choices=["grid", "qubit", "shape", "random", "critique", "all"],
        required=True,
    )
    p_verify.add_argument("--c-list", dest="c_list", type=float, nargs="+", default=None)
    p_verify.add_argument("--c", dest="c_list", type=float, nargs="+", help=argparse.SUPPRESS)
    p_verify.add_argument("--tol", type=float, default=None)
    p_verify.add_argument("--grid", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_crit = sub.add_parser("critique", help="constraint audit of the angle-equation roots")
    p_crit.add_argument("--c", type=float, required=True, help="overlap in (0, 1/sqrt(2))")
    p_crit.add_argument("--json", action="store_true")
    p_crit.set_defaults(func=cmd_critique)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
