"""Total mass and positivity of the truncated eigenvalue density (m = 2)."""
import argparse

import numpy as np

from jacobi_moments import SymJacobiParams
from jacobi_moments.moments import density_eval, density_series
from jacobi_moments.oracle import symmetric_integral


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=float, default=1)
    ap.add_argument("--s", type=float, default=1)
    ap.add_argument("--t", type=float, nargs="+", default=[0.1, 0.5, 2.0])
    ap.add_argument("--weight", type=int, default=30)
    args = ap.parse_args()

    params = SymJacobiParams(args.r, args.s, 2)
    grid = [(a, b) for a in np.linspace(0.05, 0.95, 10) for b in np.linspace(0.02, 0.98, 10) if b < a]
    print("t,mass,min_value,max_tail_estimate")
    for t in args.t:
        mass = symmetric_integral(density_series(params, t, args.weight), params, 32)
        evals = [density_eval(params, point, t) for point in grid]
        print(f"{t},{mass!r},{min(e.value for e in evals)!r},{max(e.tail_estimate for e in evals)!r}")


if __name__ == "__main__":
    main()
