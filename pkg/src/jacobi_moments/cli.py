"""Command-line entry point: ``jacobi-moments <command> [flags]``.

Commands: compute, simulate, compare, stationary, density, asymptotics.
Single results are written as JSON, sweeps and diagnostics as CSV.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import asymptotics, moments, simulate
from .errors import PreconditionError
from .partitions import Partition, hooks_up_to
from .symjacobi import SymJacobiParams

__all__ = ["RunSpec", "build_parser", "main", "run"]

COMMANDS = ("compute", "simulate", "compare", "stationary", "density", "asymptotics")


@dataclass(frozen=True)
class RunSpec:
    command: str
    args: argparse.Namespace


def _number(text: str):
    """An int, else an exact Fraction for decimal input ("0.25"), else an error."""
    try:
        return int(text)
    except ValueError:
        pass
    try:
        value = Fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from exc
    return int(value) if value.denominator == 1 else value


def _partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "0", "()", "[]"):
        return Partition()
    return Partition(int(x) for x in text.strip("()[]").split(",") if x.strip())


def _dimension_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--m", type=int, help="corner size")
    parser.add_argument("--p", type=int, help="number of columns kept")
    parser.add_argument("--d", type=int, help="size of the unitary matrix")
    parser.add_argument("--r", type=_number, help="exponent r = p - m")
    parser.add_argument("--s", type=_number, help="exponent s = d - p - m")
    parser.add_argument("--config", help="JSON or TOML file with d, p, m, t, ...")


def _sim_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--paths", type=int, help="default 100000")
    parser.add_argument("--steps", type=int, help="default 2000")
    parser.add_argument("--seed", type=int, help="default 0")
    parser.add_argument("--batch", type=int, help="paths per RNG stream, default 64")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacobi-moments",
        description="Exact and Monte Carlo trace moments of the Hermitian Jacobi process.")
    parser.add_argument("--output", "-o", help="write the artifact here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="closed-form E tr(J_{t/d}^n)")
    _dimension_flags(p)
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--t", type=_number, nargs="+", required=True)
    p.add_argument("--format", choices=("json", "csv"),
                   help="default: json for one (n, t), csv for sweeps")
    p.add_argument("--s0", action="store_true", help="use the s = 0 product form")

    p = sub.add_parser("simulate", help="Monte Carlo estimate of E tr(J_{t/d}^n)")
    _dimension_flags(p)
    _sim_flags(p)
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--t", type=float)
    p.add_argument("--method", choices=("matrix", "eigen"), default="matrix")

    p = sub.add_parser("compare", help="formula against Monte Carlo, with z-scores")
    _dimension_flags(p)
    _sim_flags(p)
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--t", type=float)

    p = sub.add_parser("stationary", help="moments of the stationary eigenvalue law")
    _dimension_flags(p)
    p.add_argument("--n", type=int, nargs="+", required=True)

    p = sub.add_parser("density", help="eigenvalue density at time t/d")
    _dimension_flags(p)
    p.add_argument("--lam", type=float, nargs="+", required=True,
                   help="decreasing point in (0, 1)^m")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--eps", type=float, default=1e-12)

    p = sub.add_parser("asymptotics", help="large-m diagnostics as CSV")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--eta", type=float, help="defaults to (1-theta)/theta with --rule s0")
    p.add_argument("--rule", choices=asymptotics.RULES, default="nearest")
    p.add_argument("--m-list", type=int, nargs="+", default=[50, 100, 200, 400])
    p.add_argument("--weight", type=int, default=3, help="all hooks up to this weight")
    p.add_argument("--report", action="store_true",
                   help="s = 0 factor report for --tau/--mu/--alpha instead")
    p.add_argument("--tau", type=_partition, default=Partition([1]))
    p.add_argument("--mu", type=_partition, default=Partition())
    p.add_argument("--alpha", type=_partition, default=Partition([1]))
    return parser


def _resolve(args) -> tuple[int, int, int]:
    """``(d, p, m)`` from --config, (p, d) or (r, s); conflicting inputs are an error."""
    from_config = simulate.SimConfig.from_file(args.config) if getattr(args, "config", None) else None
    m = args.m if args.m is not None else (from_config.m if from_config else None)
    if m is None:
        raise PreconditionError("--m is required (or a --config with m)")
    p = args.p if args.p is not None else (from_config.p if from_config else None)
    d = args.d if args.d is not None else (from_config.d if from_config else None)
    if args.r is not None:
        if not isinstance(args.r, int) or args.r < 0:
            raise PreconditionError("--r must be a nonnegative integer when deriving p")
        if p is not None and p != m + args.r:
            raise PreconditionError(f"--r {args.r} conflicts with p={p}, m={m} (need r = p - m)")
        p = m + args.r
    if args.s is not None:
        if not isinstance(args.s, int) or args.s < 0 or p is None:
            raise PreconditionError("--s needs an integer value and p (or r)")
        if d is not None and d != p + m + args.s:
            raise PreconditionError(f"--s {args.s} conflicts with d={d} (need s = d - p - m)")
        d = p + m + args.s
    if p is None or d is None:
        raise PreconditionError("give (--p, --d) or (--r, --s)")
    return d, p, m


def _params(args) -> SymJacobiParams:
    if (args.r is not None and args.s is not None and args.p is None and args.d is None
            and args.config is None):
        # also covers non-integer exponents, which have no matrix model
        if args.m is None:
            raise PreconditionError("--m is required")
        return SymJacobiParams(args.r, args.s, args.m)
    d, p, m = _resolve(args)
    if min(p, d - p) < m:
        raise PreconditionError(f"p ∧ q >= m required; got p={p}, q={d - p}, m={m}")
    return SymJacobiParams.from_dimensions(d, p, m)


def _sim_config(args) -> simulate.SimConfig:
    base = simulate.SimConfig.from_file(args.config) if args.config else None
    d, p, m = _resolve(args)
    t = args.t if args.t is not None else (base.t if base else None)
    if t is None:
        raise PreconditionError("--t is required (or a --config with t)")
    fields = {}
    for name in ("paths", "steps", "seed", "batch"):
        value = getattr(args, name)
        if value is None and base is not None:
            value = getattr(base, name)
        if value is not None:
            fields[name] = value
    return simulate.SimConfig(d=d, p=p, m=m, t=float(t), **fields)


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _compute(args) -> str:
    params = _params(args)
    fn = moments.expected_trace_s0 if args.s0 else moments.expected_trace
    sweep = len(args.n) > 1 or len(args.t) > 1
    fmt = args.format or ("csv" if sweep else "json")
    if fmt == "json" and not sweep:
        return _json(fn(params, args.n[0], args.t[0]).to_json())
    if fmt == "json":
        return _json([fn(params, n, t).to_json() for n in args.n for t in args.t])
    rows = []
    for n in args.n:
        stat = float(moments.stationary_moment(params, n))
        for t in args.t:
            value = fn(params, n, t).value
            rows.append([repr(float(t)), n, repr(value), repr(value - stat)])
    return _csv(["t", "n", "value", "stationary_gap"], rows)


def _simulate(args) -> str:
    config = _sim_config(args)
    if args.method == "eigen":
        est = {n: simulate.eigen_sde_euler(config, n) for n in args.n}
    else:
        est = simulate.trace_moments_mc(config, args.n)
    return _json({"config": asdict(config),
                  "estimates": {str(n): e.to_json() for n, e in est.items()}})


def _compare(args) -> str:
    config = _sim_config(args)
    params = config.params
    est = simulate.trace_moments_mc(config, args.n)
    out = []
    for n in args.n:
        formula = moments.expected_trace(params, n, Fraction(config.t)).value
        e = est[n]
        z = abs(formula - e.mean) / e.stderr if e.stderr > 0 else (0.0 if formula == e.mean else float("inf"))
        out.append({"n": n, "t": config.t, "formula": formula, "mc": e.to_json(), "z": z})
    return _json(out)


def _stationary(args) -> str:
    params = _params(args)
    return _json([{"n": n, "value": float(moments.stationary_moment(params, n))} for n in args.n])


def _density(args) -> str:
    params = _params(args)
    return _json(moments.density_eval(params, args.lam, args.t, args.eps).to_json())


def _asymptotics(args) -> str:
    if args.rule == "s0":
        regime = asymptotics.AsymptoticRegime.s_zero(args.theta)
    else:
        if args.eta is None:
            raise PreconditionError("--eta is required unless --rule s0")
        regime = asymptotics.AsymptoticRegime(args.theta, args.eta, args.rule)
    if args.report:
        rows = asymptotics.scaling_equivalences_report(regime, args.tau, args.mu, args.alpha,
                                                       args.m_list)
    else:
        taus = hooks_up_to(args.weight, include_empty=False)
        rows = asymptotics.coefficient_diagnostics(regime, taus, args.m_list)
    return asymptotics.rows_to_csv(rows)


HANDLERS = {"compute": _compute, "simulate": _simulate, "compare": _compare,
            "stationary": _stationary, "density": _density, "asymptotics": _asymptotics}


def run(spec: RunSpec) -> str:
    """Execute one command and return the artifact text."""
    return HANDLERS[spec.command](spec.args)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = run(RunSpec(args.command, args))
    except (PreconditionError, ValueError, NotImplementedError, RuntimeError) as exc:
        print(f"jacobi-moments {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
