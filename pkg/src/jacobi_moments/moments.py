"""Exact finite-m trace moments of the Hermitian matrix Jacobi process.

For a corner process started at the identity, ``E[tr(J_{t/d}^n)]`` is a
finite alternating sum over the hooks ``alpha(n, k) = (n-k, 1^k)``, the hooks
``tau`` they contain, and the hooks ``mu`` contained in each ``tau``.  On the
integer path (``r, s`` nonnegative integers) every coefficient is rational;
only the decay factors ``exp(-K_tau t / d)`` are transcendental and are
evaluated at 50 significant digits before entering the exact sum.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Context, Decimal
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .errors import PreconditionError
from .jacobi1d import (beta, gamma_ratio, jacobi_at_zero, jacobi_norm_sq,
                       orthonormal_values)
from .linalg import det
from .partitions import (EMPTY, Partition, contains, gen_binomial,
                         gen_pochhammer, hooks_alpha, partitions_of,
                         schur_at_ones, subhooks)
from .symjacobi import (SymJacobiParams, c_coeff, p_at_ones, p_tau_det,
                        q_at_ones, u_at_ones, v_tilde, vandermonde)

__all__ = [
    "JacobiParams",
    "MomentTerm",
    "MomentResult",
    "DensityEvaluation",
    "k_eigenvalue",
    "a_coeff",
    "b_coeff",
    "beta_determinant",
    "cauchy_determinant_path",
    "expected_trace",
    "expected_trace_s0",
    "kadell_integral",
    "stationary_moment",
    "stationary_weight",
    "density_series",
    "density_eval",
]

JacobiParams = SymJacobiParams

_EXP_CONTEXT = Context(prec=50)


def _check_time(t):
    if t < 0 or (isinstance(t, float) and not math.isfinite(t)):
        raise ValueError(f"time must be finite and >= 0, got {t}")


def _decay(K, t, d, exact: bool):
    """``exp(-K t / d)``; a 50-digit Fraction on the exact path."""
    if K == 0 or t == 0:
        return Fraction(1) if exact else 1.0
    if not exact:
        return math.exp(-float(K) * float(t) / float(d))
    x = Fraction(K) * Fraction(t) / Fraction(d)
    arg = _EXP_CONTEXT.divide(Decimal(-x.numerator), Decimal(x.denominator))
    return Fraction(_EXP_CONTEXT.exp(arg))


def k_eigenvalue(params: SymJacobiParams, tau: Sequence[int]):
    """``K_tau = sum_i tau_i (tau_i + r + s + 1 + 2(m - i))``, rows from 1."""
    tau = Partition(tau)
    params.check_length(tau)
    r, s = params.rs()
    m = params.m
    return sum(t * (t + r + s + 1 + 2 * (m - 1 - i)) for i, t in enumerate(tau))


def a_coeff(params: SymJacobiParams, tau: Sequence[int]):
    """Squared normalizing coefficient; rational on the integer path.

    ``{V(tau~) prod_{i<j} 1/((r+j-i) i) prod_i p_{N_i}(0) / ||p_{N_i}||}^2``
    with ``N_i = tau_i + m - i``.  The square removes the square roots of the
    norms, so the product is assembled directly in squared form.
    """
    tau = Partition(tau)
    params.check_length(tau)
    m = params.m
    r, _ = params.rs()
    one_d = params.one_d
    out = v_tilde(params, tau) ** 2
    if params.exact:
        out = Fraction(out)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            out = out / ((r + j - i) * i) ** 2
    for n in params.degrees(tau):
        out = out * jacobi_at_zero(one_d, n) ** 2 / jacobi_norm_sq(one_d, n)
    return out


def b_coeff(params: SymJacobiParams, mu: Sequence[int], tau: Sequence[int]):
    """``(-1)^|mu| binom(tau, mu) C_mu^tau(r+s+2m) / ((r+m)_mu s_mu(1^m))``."""
    tau, mu = Partition(tau), Partition(mu)
    if not contains(mu, tau):
        raise ValueError(f"{mu!r} is not contained in {tau!r}")
    params.check_length(tau)
    if not mu:
        return Fraction(1) if params.exact else 1.0
    r, s = params.rs()
    m = params.m
    X = r + s + 2 * m
    num = (-1) ** mu.weight * gen_binomial(tau, mu) * c_coeff(mu, tau, X)
    den = gen_pochhammer(r + m, mu) * schur_at_ones(mu, m)
    return num / den


def _beta_args(params: SymJacobiParams, alpha: Partition, mu: Partition):
    m = params.m
    r, _ = params.rs()
    a, u = alpha.padded(m), mu.padded(m)
    # 1-indexed first argument alpha_i + mu_j + 2m - i - j + r + 1
    return [[a[i] + u[j] + 2 * m - i - j - 2 + r + 1 for j in range(m)] for i in range(m)]


def beta_determinant(params: SymJacobiParams, alpha: Sequence[int], mu: Sequence[int]):
    """``det[beta(alpha_i + mu_j + 2m - i - j + r + 1, s + 1)]``, exact on the integer path."""
    alpha, mu = Partition(alpha), Partition(mu)
    params.check_length(alpha)
    params.check_length(mu)
    _, s = params.rs()
    args = _beta_args(params, alpha, mu)
    for row in args:
        for a in row:
            if a <= 0:
                raise ValueError(f"Beta argument {a} is not positive")
    return det([[beta(a, s + 1) for a in row] for row in args])


def cauchy_determinant_path(params: SymJacobiParams, alpha: Sequence[int], mu: Sequence[int]):
    """The ``s = 0`` Beta determinant in Cauchy product form (no elimination)."""
    if params.s != 0:
        raise PreconditionError(f"the Cauchy product form needs s = 0, got s={params.s}")
    alpha, mu = Partition(alpha), Partition(mu)
    m = params.m
    a, u = alpha.padded(m), mu.padded(m)
    num = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= (a[i] - a[j] + j - i) * (u[i] - u[j] + j - i)
    den = 1
    for row in _beta_args(params, alpha, mu):
        for x in row:
            den *= x
    return Fraction(num, den) if params.exact else num / den


@dataclass(frozen=True)
class MomentTerm:
    k: int
    tau: Partition
    mu: Partition
    contribution: object

    def to_json(self) -> dict:
        return {"k": self.k, "tau": self.tau.to_json(), "mu": self.mu.to_json(),
                "contribution": float(self.contribution)}


@dataclass
class MomentResult:
    """Value of ``E[tr(J_{t/d}^n)]`` with its per-``(k, tau, mu)`` ledger.

    ``exact`` holds the rational sum of the ledger on the integer path (the
    decay factors enter as 50-digit rationals); ``value`` is its float.
    """

    n: int
    t: float
    value: float
    terms: list[MomentTerm] = field(default_factory=list)
    exact: Fraction | None = None

    def to_json(self) -> dict:
        return {"n": self.n, "t": float(self.t), "value": self.value,
                "terms": [term.to_json() for term in self.terms]}


def _check_moment_args(params: SymJacobiParams, n: int, t):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    _check_time(t)
    if n > params.m:
        raise PreconditionError(
            f"m > n required for the finite hook expansion (m = n is also accepted); "
            f"got m={params.m}, n={n}")


def _finish(n, t, terms, exact: bool) -> MomentResult:
    if exact:
        total = sum((term.contribution for term in terms), Fraction(0))
        return MomentResult(n, t, float(total), terms, total)
    return MomentResult(n, t, math.fsum(term.contribution for term in terms), terms)


def _as_time(t, exact: bool):
    if exact and isinstance(t, float):
        return Fraction(t)
    return t


def expected_trace(params: SymJacobiParams, n: int, t) -> MomentResult:
    """``E[tr(J_{t/d}^n)]`` for the corner process started at ``I_m``.

    ``t`` is the un-normalized time; the process is read at ``t/d``.
    """
    _check_moment_args(params, n, t)
    exact = params.exact
    tt = _as_time(t, exact)
    d = params.d
    terms = []
    for k, alpha in enumerate(hooks_alpha(n)):
        sign = (-1) ** k
        for tau in subhooks(alpha):
            outer = (a_coeff(params, tau) * u_at_ones(params, tau)
                     * _decay(k_eigenvalue(params, tau), tt, d, exact))
            for mu in subhooks(tau):
                inner = b_coeff(params, mu, tau) * beta_determinant(params, alpha, mu)
                terms.append(MomentTerm(k, tau, mu, sign * outer * inner))
    return _finish(n, t, terms, exact)


def _weyl(part: Sequence[int], m: int):
    out = 1
    for i in range(m):
        for j in range(i + 1, m):
            out *= part[i] - part[j] + j - i
    return out


def expected_trace_s0(params: SymJacobiParams, n: int, t) -> MomentResult:
    """The ``s = 0`` moment from its product form.

    The Beta determinant collapses to a Cauchy determinant and ``a_tau`` to
    squared Gamma ratios times ``s_tau(1^m)^2``; this path shares no
    determinant code with :func:`expected_trace`.
    """
    if params.s != 0:
        raise PreconditionError(f"the s = 0 product form needs s = 0, got s={params.s}")
    _check_moment_args(params, n, t)
    exact = params.exact
    tt = _as_time(t, exact)
    m = params.m
    r, _ = params.rs()
    d = params.d
    one = Fraction(1) if exact else 1.0
    terms = []
    for k, alpha in enumerate(hooks_alpha(n)):
        sign = (-1) ** k
        a = alpha.padded(m)
        s_alpha = schur_at_ones(alpha, m)
        for tau in subhooks(alpha):
            tp = tau.padded(m)
            weight = one
            for i in range(m):
                ni = tp[i] + m - 1 - i
                ratio = gamma_ratio([m - i, r + ni + 1], [ni + 1, r + m - i])
                weight = weight * (2 * ni + r + 1) * ratio ** 2
            weight = weight * schur_at_ones(tau, m) ** 2 * u_at_ones(params, tau)
            weight = weight * _decay(k_eigenvalue(params, tau), tt, d, exact)
            cross = 1
            for i in range(m):
                for j in range(i + 1, m):
                    cross *= (tp[i] + tp[j] + 2 * m - i - j - 2 + r + 1) ** 2
            for mu in subhooks(tau):
                u = mu.padded(m)
                den = 1
                for i in range(m):
                    for j in range(m):
                        den *= a[i] + u[j] + 2 * m - i - j - 2 + r + 1
                ratio = Fraction(cross, den) if exact else cross / den
                inner = ratio * b_coeff(params, mu, tau) * schur_at_ones(mu, m) * s_alpha
                terms.append(MomentTerm(k, tau, mu, sign * weight * inner))
    return _finish(n, t, terms, exact)


def kadell_integral(params: SymJacobiParams, kappa: Sequence[int]):
    """``int s_kappa W`` over the ordered simplex, in closed form."""
    kappa = Partition(kappa)
    params.check_length(kappa)
    m = params.m
    r, s = params.rs()
    kp = kappa.padded(m)
    out = _weyl(kp, m)
    for i in range(m):
        out = out * gamma_ratio([kp[i] + r + m - i, s + m - i],
                                [kp[i] + r + s + 2 * m - i])
    return out


def stationary_moment(params: SymJacobiParams, n: int):
    """``E[sum lambda_i^n]`` under the normalized weight ``W``.

    Hooks with more than ``m`` rows have vanishing Schur function and are
    skipped, so any ``n >= 1`` is allowed.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    total = 0
    for k, alpha in enumerate(hooks_alpha(n)):
        if len(alpha) <= params.m:
            total += (-1) ** k * kadell_integral(params, alpha)
    return total / kadell_integral(params, EMPTY)


def _check_point(params: SymJacobiParams, lam) -> np.ndarray:
    lam = np.asarray(lam, dtype=float)
    if lam.shape != (params.m,):
        raise ValueError(f"expected a point in R^{params.m}")
    if not (np.all(lam > 0) and np.all(lam < 1) and np.all(np.diff(lam) < 0)):
        raise ValueError("need 1 > lambda_1 > ... > lambda_m > 0")
    return lam


def _weight(params: SymJacobiParams, lam: np.ndarray) -> float:
    r, s = (float(v) for v in params.rs())
    return float(np.prod(lam ** r * (1 - lam) ** s)) * float(vandermonde(lam)) ** 2


def stationary_weight(params: SymJacobiParams, lam) -> float:
    """Normalized stationary density ``a_emptyset W(lambda)`` on the ordered simplex."""
    lam = _check_point(params, lam)
    return float(a_coeff(params, EMPTY)) * _weight(params, lam)


@lru_cache(maxsize=64)
def _shells(params: SymJacobiParams, weight: int):
    """Decay rate, ``P_tau(1^m)`` and a sup bound of ``|P_tau|`` per partition."""
    m = params.m
    r, s = params.rs()
    sup_params = SymJacobiParams(max(r, s), min(r, s), m)
    out = []
    for tau in partitions_of(weight, m):
        at_one = p_at_ones(params, tau)
        # |Q^{r,s}| <= Q^{r,s}(1^m) when r >= s; the mirror handles r < s
        norm = abs(at_one / float(q_at_ones(SymJacobiParams(s, r, m), tau)))
        sup = norm * float(q_at_ones(sup_params, tau))
        out.append((tau, float(k_eigenvalue(params, tau)), at_one, sup))
    return tuple(out)


def density_series(params: SymJacobiParams, t: float, max_weight: int) -> Callable:
    """``lambda -> sum_{|tau| <= T} e^{-K t/d} P_tau(1^m) P_tau(lambda)`` (no weight factor).

    The returned callable accepts any point with distinct coordinates.
    """
    if t <= 0:
        raise ValueError(f"density needs t > 0, got {t}")
    d = float(params.d)
    terms = [(tau, math.exp(-K * t / d) * at_one)
             for w in range(max_weight + 1)
             for tau, K, at_one, _ in _shells(params, w)]

    degrees = [params.degrees(tau) for tau, _ in terms]
    top = max(max(deg) for deg in degrees)

    def series(lam) -> float:
        lam = np.asarray(lam, dtype=float)
        vals = orthonormal_values(params.one_d, top, lam)
        v = float(vandermonde(lam))
        return math.fsum(c * np.linalg.det(vals[deg]) / v
                         for deg, (_, c) in zip(degrees, terms))

    return series


@dataclass(frozen=True)
class DensityEvaluation:
    lam: tuple
    t: float
    value: float
    truncation_weight: int
    tail_estimate: float
    tail_bound: float

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "t": self.t, "value": self.value,
                "truncation_weight": self.truncation_weight,
                "tail_estimate": self.tail_estimate, "tail_bound": self.tail_bound}


def density_eval(params: SymJacobiParams, lam, t: float, eps: float = 1e-12,
                 max_weight: int = 200) -> DensityEvaluation:
    """Eigenvalue density at time ``t/d`` for the start ``1^m``.

    Shells of equal weight are added until two consecutive shells are below
    ``eps`` relative to the running sum.  ``tail_estimate`` is the absolute
    size of the last shell and ``tail_bound`` the sup-norm majorant of it.
    """
    lam = _check_point(params, lam)
    if t <= 0:
        raise ValueError(f"density needs t > 0, got {t}")
    d = float(params.d)
    w_lam = _weight(params, lam)
    total = []
    quiet = 0
    shell_abs = shell_bound = 0.0
    for w in range(max_weight + 1):
        contributions = []
        shell_abs = shell_bound = 0.0
        for tau, K, at_one, sup in _shells(params, w):
            decay = math.exp(-K * t / d)
            c = decay * at_one * p_tau_det(params, tau, lam) * w_lam
            contributions.append(c)
            shell_abs += abs(c)
            shell_bound += decay * abs(at_one) * sup * w_lam
        total.extend(contributions)
        running = abs(math.fsum(total))
        quiet = quiet + 1 if shell_abs < eps * running else 0
        if quiet >= 2:
            return DensityEvaluation(tuple(lam.tolist()), t, math.fsum(total), w,
                                     shell_abs, shell_bound)
    raise RuntimeError(f"density series did not settle by weight {max_weight} "
                       f"(last shell {shell_abs:.3e}); increase max_weight or t")
