"""Distance to the stationary moment over time, with the fitted decay rate."""
import argparse
import math

import numpy as np

from jacobi_moments import SymJacobiParams, expected_trace, stationary_moment
from jacobi_moments.moments import k_eigenvalue
from jacobi_moments.partitions import hooks_alpha, subhooks


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, default=1)
    ap.add_argument("--s", type=int, default=1)
    ap.add_argument("--m", type=int, default=3)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--t-max", type=float, default=20.0)
    ap.add_argument("--points", type=int, default=41)
    args = ap.parse_args()

    params = SymJacobiParams(args.r, args.s, args.m)
    stat = stationary_moment(params, args.n)
    ts = np.linspace(0, args.t_max, args.points)
    print("t,value,gap")
    gaps = []
    for t in ts:
        t = float(t)
        value = expected_trace(params, args.n, t)
        gap = float(value.exact - stat) if value.exact is not None else value.value - float(stat)
        gaps.append(abs(gap))
        print(f"{t!r},{value.value!r},{gap!r}")

    k_min = min(k_eigenvalue(params, tau) for a in hooks_alpha(args.n)
                for tau in subhooks(a) if tau)
    tail = ts > args.t_max / 4
    slope = np.polyfit(ts[tail], np.log(gaps)[tail], 1)[0]
    print(f"# fitted log-slope {slope:.5f}, slowest mode -K/d = {-float(k_min) / params.d:.5f}")
    print(f"# stationary value {float(stat)!r}; first moment check "
          f"{math.isclose(expected_trace(params, 1, 0).value, params.m)}")


if __name__ == "__main__":
    main()
