"""Large-m coefficient diagnostics and the s = 0 factor report, as CSV files."""
import argparse
from pathlib import Path

from jacobi_moments.asymptotics import (AsymptoticRegime, coefficient_diagnostics,
                                        gaps_shrink, rows_to_csv,
                                        scaling_equivalences_report)
from jacobi_moments.partitions import hooks_up_to


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="asymptotics_out")
    ap.add_argument("--m-list", type=int, nargs="+", default=[50, 100, 200, 400, 800])
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(exist_ok=True)

    taus = hooks_up_to(3, include_empty=False)
    for rule in ("nearest", "floor"):
        rows = coefficient_diagnostics(AsymptoticRegime(0.5, 1.0, rule), taus, args.m_list)
        (out / f"coefficients_{rule}.csv").write_text(rows_to_csv(rows))
        worst = max(r.gap for r in rows if r.m == max(args.m_list))
        print(f"{rule}: gaps shrink {gaps_shrink(rows)}, worst gap at m={max(args.m_list)}: {worst:.3%}")

    # multiples of 6 keep p exact at theta = 0.4 (2m/3) and 0.6 (3m/2)
    m_list = [6 * (m // 6) for m in args.m_list]
    for theta, tau, mu, alpha in [(0.4, (2, 1), (1,), (3, 1)), (0.6, (2,), (1,), (3,))]:
        rows = scaling_equivalences_report(AsymptoticRegime.s_zero(theta), tau, mu, alpha, m_list)
        name = f"report_theta{theta}_tau{''.join(map(str, tau))}.csv"
        (out / name).write_text(rows_to_csv(rows))
        print(f"{name}: gaps shrink {gaps_shrink(rows)}")


if __name__ == "__main__":
    main()
