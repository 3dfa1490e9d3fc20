#!/usr/bin/env python3
"""Tabulate every bound over a range of overlaps and print the solved
critical constants.

Writes the same CSV as `eur sweep` and summarizes where the piecewise bound
switches branch.  Typical use:

    python scripts/sweep_bounds.py --out bounds.csv
    python scripts/sweep_bounds.py --from 0.5 --to 0.99 --step 0.005 --out fine.csv
"""

import argparse

from eur import cli, solve


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--from", dest="from_", type=float, default=0.05)
    parser.add_argument("--to", type=float, default=1.0)
    parser.add_argument("--step", type=float, default=0.01)
    parser.add_argument("--out", type=str, default="bounds_sweep.csv")
    args = parser.parse_args()

    for name, rr in (("c_star", solve.c_star()), ("c_dagger", solve.c_dagger())):
        print(f"{name} = {rr.root:.12f}  (residual {rr.residual:.2e}, {rr.iterations} iterations)")

    code = cli.main(
        ["sweep", "--from", str(args.from_), "--to", str(args.to), "--step", str(args.step), "--out", args.out]
    )
    if code != 0:
        raise SystemExit(code)

    transitions = []
    prev = None
    with open(args.out) as fh:
        next(fh)
        for line in fh:
            c, region = line.split(",")[0], line.rstrip("\n").split(",")[-1]
            if prev is not None and region != prev:
                transitions.append((c, prev, region))
            prev = region
    print(f"wrote {args.out}")
    for c, old, new in transitions:
        print(f"branch switch at c = {c}: {old} -> {new}")


if __name__ == "__main__":
    main()
