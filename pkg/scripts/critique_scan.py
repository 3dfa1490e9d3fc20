#!/usr/bin/env python3
"""Audit the angle-equation roots over a list of small overlaps.

For each overlap this prints every numerical root of the trigonometric
stationarity equation, the probability pair it maps to, and the first
feasibility check it violates.  All nontrivial roots in the small-overlap
regime should come out inadmissible; the minimizing probabilities there sit
at the admissible-interval endpoints instead.

    python scripts/critique_scan.py
    python scripts/critique_scan.py --c 0.2 0.4 0.55 --step 5e-5
"""

import argparse

from eur import core, solve


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--c", type=float, nargs="+", default=[0.3, 0.5, 0.6])
    parser.add_argument("--step", type=float, default=1e-4, help="scan step in alpha")
    args = parser.parse_args()

    for c in args.c:
        rep = solve.critique_report(c, scan_step=args.step)
        lo, hi = rep.interval
        print(f"c = {c:g}  theta = {rep.theta:.9f}  admissible P_A in ({lo:.9f}, {hi:.9f})")
        print(f"  endpoint infimum m_inf = {core.m_inf(c):.9f} vs -2 ln c = {core.b_mu(c):.9f}")
        if not rep.roots:
            print("  no nontrivial roots")
            continue
        for r in rep.roots:
            label = "admissible" if r.admissible else f"violates {r.violated_constraint}"
            print(
                f"  alpha = {r.alpha: .9f}  (P_A, P_B) = ({r.p_a:.6f}, {r.p_b:.6f})  {label}"
            )
        print(f"  {rep.inadmissible_count}/{len(rep.roots)} roots inadmissible")


if __name__ == "__main__":
    main()
