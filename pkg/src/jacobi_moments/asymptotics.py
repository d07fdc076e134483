"""Large-m limits of the ingredients of the moment formula.

Along a regime ``p(m)/d(m) -> theta``, ``m/p(m) -> eta`` each coefficient
of the finite sum has an explicit limit.  The functions below return those
limits together with finite-m diagnostics, so that convergence can be
watched rather than assumed.  Nothing here attempts the limit of the whole
normalized moment, whose term-by-term limit is indeterminate.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError
from .moments import b_coeff, k_eigenvalue
from .partitions import Partition, contains, gen_binomial, schur_at_ones, subhooks
from .symjacobi import SymJacobiParams, u_at_ones

__all__ = [
    "AsymptoticRegime",
    "DiagnosticRow",
    "k_over_d_limit",
    "k_over_d_finite",
    "b_smu_limit",
    "b_smu_finite",
    "u_ones_limit",
    "u_ones_limit_binomial",
    "u_ones_finite",
    "free_jacobi_moment_ref",
    "laguerre",
    "coefficient_diagnostics",
    "scaling_equivalences_report",
    "gaps_shrink",
    "rows_to_csv",
]

RULES = ("nearest", "floor", "s0")


def _nearest(x: float) -> int:
    return math.floor(x + 0.5)


@dataclass(frozen=True)
class AsymptoticRegime:
    """Integer sequences ``m -> (p(m), d(m))`` with ``p/d -> theta``, ``m/p -> eta``.

    ``rule`` is ``"nearest"`` (``p = [m/eta]``, ``d = [p/theta]``, nearest
    integers), ``"floor"`` (same with floors) or ``"s0"`` (``d = p + m``, which
    forces ``eta = (1 - theta)/theta``).
    """

    theta: float
    eta: float
    rule: str = "nearest"

    def __post_init__(self):
        if not 0 < self.theta < 1:
            raise ValueError(f"theta must lie in (0, 1), got {self.theta}")
        if self.eta <= 0 or not 0 < self.eta * self.theta < 1:
            raise ValueError(f"need eta > 0 and 0 < eta*theta < 1, got eta={self.eta}")
        if self.rule not in RULES:
            raise ValueError(f"rule must be one of {RULES}, got {self.rule!r}")
        if self.rule == "s0" and not math.isclose(self.eta, (1 - self.theta) / self.theta):
            raise ValueError("the s0 rule needs eta = (1 - theta)/theta")

    @classmethod
    def s_zero(cls, theta: float) -> "AsymptoticRegime":
        return cls(theta, (1 - theta) / theta, "s0")

    def dims(self, m: int, check: bool = True) -> tuple[int, int]:
        """``(p(m), d(m))``; raises if ``min(p, d - p) < m`` unless ``check`` is off."""
        if self.rule == "nearest":
            p = _nearest(m / self.eta)
            d = _nearest(p / self.theta)
        elif self.rule == "floor":
            p = math.floor(m / self.eta)
            d = math.floor(p / self.theta)
        else:
            p = _nearest(m / self.eta)
            d = p + m
        if check and min(p, d - p) < m:
            raise PreconditionError(
                f"regime gives p={p}, d={d} at m={m}; need min(p, d-p) >= m")
        return p, d

    def params(self, m: int) -> SymJacobiParams:
        p, d = self.dims(m)
        return SymJacobiParams.from_dimensions(d, p, m)


@dataclass(frozen=True)
class DiagnosticRow:
    m: int
    quantity: str
    finite_value: float
    limit_value: float
    gap: float


def _gap(finite: float, limit: float) -> float:
    """Relative gap, absolute when the limit is zero."""
    if limit == 0:
        return abs(finite)
    return abs(finite - limit) / abs(limit)


def _row(m, quantity, finite, limit) -> DiagnosticRow:
    finite, limit = float(finite), float(limit)
    return DiagnosticRow(m, quantity, finite, limit, _gap(finite, limit))


def _hook(tau) -> Partition:
    tau = Partition(tau)
    if not tau.is_hook:
        raise ValueError(f"{tau!r} is not a hook")
    return tau


def k_over_d_limit(tau: Sequence[int]) -> int:
    return _hook(tau).weight


def k_over_d_finite(regime: AsymptoticRegime, tau: Sequence[int], m: int) -> float:
    params = regime.params(m)
    return float(k_eigenvalue(params, tau)) / params.d


def b_smu_limit(mu: Sequence[int], tau: Sequence[int], theta: float) -> float:
    """``(-1)^|mu| binom(tau, mu) / theta^|mu|``."""
    mu, tau = _hook(mu), _hook(tau)
    if not contains(mu, tau):
        raise ValueError(f"{mu!r} is not contained in {tau!r}")
    return (-1) ** mu.weight * float(gen_binomial(tau, mu)) / theta ** mu.weight


def b_smu_finite(regime: AsymptoticRegime, mu: Sequence[int], tau: Sequence[int],
                 m: int) -> float:
    params = regime.params(m)
    return float(b_coeff(params, mu, tau) * schur_at_ones(mu, m))


def u_ones_limit(tau: Sequence[int], theta: float) -> float:
    """``(1 - 1/theta)^|tau|``."""
    return (1 - 1 / theta) ** _hook(tau).weight


def u_ones_limit_binomial(tau: Sequence[int], theta: float) -> float:
    """The same limit as a sum of binomial terms over ``mu ⊆ tau``."""
    tau = _hook(tau)
    return math.fsum(b_smu_limit(mu, tau, theta) for mu in subhooks(tau))


def u_ones_finite(regime: AsymptoticRegime, tau: Sequence[int], m: int) -> float:
    return float(u_at_ones(regime.params(m), tau))


def laguerre(n: int, alpha: int, x: float) -> float:
    """Generalized Laguerre ``L_n^alpha(x)`` from its terminating series."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return math.fsum((-1) ** j * math.comb(n + alpha, n - j) * x ** j / math.factorial(j)
                     for j in range(n + 1))


def free_jacobi_moment_ref(n: int, t: float) -> float:
    """``n``-th moment at time ``t`` of the free Jacobi process with parameters (1, 1/2)."""
    if n < 1 or t < 0:
        raise ValueError("need n >= 1 and t >= 0")
    head = math.comb(2 * n, n) / 4 ** n
    tail = math.fsum(math.comb(2 * n, n - k) / k * laguerre(k - 1, 1, 2 * k * t)
                     * math.exp(-k * t) for k in range(1, n + 1))
    return head + tail / 2 ** (2 * n - 1)


def coefficient_diagnostics(regime: AsymptoticRegime, taus: Iterable[Sequence[int]],
                            m_list: Sequence[int]) -> list[DiagnosticRow]:
    """Finite-m values against their limits for ``K/d``, ``b s_mu`` and ``U(1^m)``."""
    theta = regime.theta
    rows = []
    for tau in map(_hook, taus):
        for m in m_list:
            rows.append(_row(m, f"K/d tau={list(tau)}", k_over_d_finite(regime, tau, m),
                             k_over_d_limit(tau)))
            for mu in subhooks(tau):
                rows.append(_row(m, f"b*s_mu tau={list(tau)} mu={list(mu)}",
                                 b_smu_finite(regime, mu, tau, m), b_smu_limit(mu, tau, theta)))
            rows.append(_row(m, f"U(1^m) tau={list(tau)}", u_ones_finite(regime, tau, m),
                             u_ones_limit(tau, theta)))
    return rows


def _dimension_limit(alpha: Partition, ratio: float) -> float:
    # s_alpha(1^m) ~ f^alpha m^|alpha| / |alpha|!, and m/d -> ratio
    f_alpha = math.comb(alpha.weight - 1, alpha.leg) if alpha else 1
    return f_alpha * ratio ** alpha.weight / math.factorial(alpha.weight)


def scaling_equivalences_report(regime: AsymptoticRegime, tau: Sequence[int],
                                mu: Sequence[int], alpha: Sequence[int],
                                m_list: Sequence[int]) -> list[DiagnosticRow]:
    """Finite-m factors of the ``s = 0`` moment formula against their limits.

    Rows:

    * ``gamma_product``: ``prod_i G(r+tau_i+m-i+1) G(m-i+1) / (G(tau_i+m-i+1) G(r+m-i+1))``
      against ``(theta/(1-theta))^|tau|``;
    * ``bracket_ratio``: ``prod_{i<=l(alpha)} [2(tau_i+m-i)+r+1] / (alpha_i+mu_i+2m-2i+r+1)``
      against 1;
    * ``inner_cross``: the ``i != j <= l(alpha)`` cross ratio, against 1;
    * ``outer_cross``: the ``i <= l(alpha) < j`` cross product, against
      ``theta^-(2|tau| - |alpha| - |mu|)``.  Each row ``i`` telescopes to
      ``prod_k (d - l + k)/(d - m + k)``, a ratio of two degree-``tau_i``
      polynomials, so the product stays bounded;
    * ``s_alpha/d^|alpha|`` and ``s_mu/d^|mu|``: the Schur dimensions that do
      grow, normalized by ``d^|.|``, against ``f^alpha (1-theta)^|alpha| / |alpha|!``.

    For ``theta < 1/2`` the exponent ``r(m) = p(m) - m`` is negative; the
    factors stay defined and are reported, though the moment formula itself
    needs ``r >= 0``.
    """
    if regime.rule != "s0":
        raise PreconditionError("the product-form report needs an s = 0 regime (rule 's0')")
    tau, mu, alpha = _hook(tau), _hook(mu), _hook(alpha)
    if not (contains(mu, tau) and contains(tau, alpha)):
        raise ValueError("need mu ⊆ tau ⊆ alpha")
    theta = regime.theta
    ell = len(alpha)
    excess = 2 * tau.weight - alpha.weight - mu.weight
    rows = []
    for m in m_list:
        if m <= ell:
            raise PreconditionError(f"need m > l(alpha) = {ell}, got m={m}")
        # only positivity of the Gamma arguments is needed here, so r(m) < 0
        # (theta < 1/2) is tabulated rather than refused
        p, d = regime.dims(m, check=False)
        r = p - m
        t, a, u = tau.padded(m), alpha.padded(m), mu.padded(m)
        # 1-indexed rows i = 1..m  <->  0-indexed k = i - 1
        log_gamma = math.fsum(
            math.lgamma(r + t[k] + m - k) + math.lgamma(m - k)
            - math.lgamma(t[k] + m - k) - math.lgamma(r + m - k)
            for k in range(len(tau)))
        bracket = math.prod((2 * (t[k] + m - 1 - k) + r + 1) / (a[k] + u[k] + 2 * m - 2 * k - 2 + r + 1)
                            for k in range(ell))
        log_inner = math.fsum(
            math.log(t[i] + t[j] + 2 * m - i - j - 2 + r + 1)
            - math.log(a[i] + u[j] + 2 * m - i - j - 2 + r + 1)
            for i in range(ell) for j in range(ell) if i != j)
        log_outer = math.fsum(
            2 * math.log(t[i] + 2 * m - i - j - 2 + r + 1)
            - math.log(a[i] + 2 * m - i - j - 2 + r + 1)
            - math.log(u[i] + 2 * m - i - j - 2 + r + 1)
            for i in range(ell) for j in range(ell, m))
        rows.append(_row(m, "gamma_product", math.exp(log_gamma),
                         (theta / (1 - theta)) ** tau.weight))
        rows.append(_row(m, "bracket_ratio", bracket, 1.0))
        rows.append(_row(m, "inner_cross", math.exp(log_inner), 1.0))
        rows.append(_row(m, "outer_cross", math.exp(log_outer), theta ** -excess))
        for name, part in (("s_alpha/d^|alpha|", alpha), ("s_mu/d^|mu|", mu)):
            rows.append(_row(m, name, schur_at_ones(part, m) / d ** part.weight,
                             _dimension_limit(part, 1 - theta)))
    return rows


def gaps_shrink(rows: Sequence[DiagnosticRow], tol: float = 1e-13) -> bool:
    """True when, per quantity, the gap never grows as ``m`` increases.

    Gaps already below ``tol`` count as converged.
    """
    by_quantity: dict[str, list[DiagnosticRow]] = {}
    for row in rows:
        by_quantity.setdefault(row.quantity, []).append(row)
    for series in by_quantity.values():
        series = sorted(series, key=lambda row: row.m)
        for prev, cur in zip(series, series[1:]):
            if cur.gap > tol and cur.gap >= prev.gap:
                return False
    return True


def rows_to_csv(rows: Iterable[DiagnosticRow], stream: io.TextIOBase | None = None) -> str:
    """Write ``m, quantity, finite_value, limit_value, gap``; returns the text."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["m", "quantity", "finite_value", "limit_value", "gap"])
    for row in rows:
        writer.writerow([row.m, row.quantity, repr(row.finite_value),
                         repr(row.limit_value), repr(row.gap)])
    text = buf.getvalue()
    if stream is not None:
        stream.write(text)
    return text
