"""Closed-form moments next to Monte Carlo estimates, as CSV.

    python scripts/two_oracle_table.py --paths 20000 > table.csv
"""
import argparse
import csv
import sys
import time
from fractions import Fraction

from jacobi_moments import SimConfig, expected_trace, trace_moments_mc

CONFIGS = [(5, 2, 2), (6, 3, 2), (7, 3, 3)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--paths", type=int, default=100_000)
    ap.add_argument("--steps", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--t", type=float, nargs="+", default=[0.25, 1.0, 4.0])
    ap.add_argument("--n", type=int, nargs="+", default=[1, 2])
    args = ap.parse_args()

    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["d", "p", "m", "n", "t", "formula", "mc_mean", "mc_stderr", "z", "seconds"])
    for d, p, m in CONFIGS:
        for t in args.t:
            config = SimConfig(d, p, m, t, steps=args.steps, paths=args.paths, seed=args.seed)
            start = time.perf_counter()
            est = trace_moments_mc(config, args.n)
            elapsed = time.perf_counter() - start
            for n, e in est.items():
                exact = expected_trace(config.params, n, Fraction(t)).value
                z = abs(exact - e.mean) / e.stderr
                out.writerow([d, p, m, n, t, repr(exact), repr(e.mean), repr(e.stderr),
                              f"{z:.3f}", f"{elapsed:.1f}"])
            sys.stdout.flush()


if __name__ == "__main__":
    main()
