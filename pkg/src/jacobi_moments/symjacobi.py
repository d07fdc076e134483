"""Symmetric Jacobi polynomials indexed by partitions.

Three normalizations are used:

* ``P_tau`` -- determinant of orthonormal one-dimensional polynomials over
  the Vandermonde; orthonormal for ``W^{r,s,m}`` on the ordered simplex.
* ``U_tau`` -- the same polynomial scaled to equal 1 at the origin.  For
  hooks it has an explicit expansion in Schur functions, which is the
  canonical (coincidence-safe) evaluation path here.
* ``Q_tau`` -- the ``[-1, 1]^m`` version with a closed-form value at ``1^m``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .jacobi1d import (Jacobi1DParams, gamma_ratio, jacobi_at_zero,
                       jacobi_norm_sq, jacobi_values, orthonormal_values)
from .partitions import (EMPTY, Partition, gen_binomial, gen_pochhammer,
                         schur_at_ones, schur_eval, subhooks)

__all__ = [
    "SymJacobiParams",
    "vandermonde",
    "min_gap",
    "p_tau_det",
    "q_tau_det",
    "u_tau_det",
    "c_coeff",
    "hook_expansion",
    "u_tau_schur",
    "u_at_ones",
    "v_tilde",
    "q_at_ones",
    "p_at_ones",
    "p_over_u",
]

MIN_GAP = 1e-8


@dataclass(frozen=True)
class SymJacobiParams:
    r: float = 0
    s: float = 0
    m: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"need m >= 1, got m={self.m}")
        Jacobi1DParams(self.r, self.s)

    @classmethod
    def from_dimensions(cls, d: int, p: int, m: int) -> "SymJacobiParams":
        """Exponents ``r = p - m``, ``s = d - p - m`` of the corner process."""
        return cls(p - m, d - p - m, m)

    @property
    def p(self):
        return self.r + self.m

    @property
    def q(self):
        return self.s + self.m

    @property
    def d(self):
        return self.r + self.s + 2 * self.m

    @property
    def one_d(self) -> Jacobi1DParams:
        return Jacobi1DParams(self.r, self.s)

    @property
    def exact(self) -> bool:
        return self.one_d.exact

    def rs(self):
        return self.one_d.normalized()

    def check_length(self, tau: Partition):
        if len(tau) > self.m:
            raise ValueError(f"{tau!r} has more than m={self.m} parts")

    def degrees(self, tau: Sequence[int]) -> list[int]:
        """One-dimensional degrees ``tau_i + m - i``."""
        tau = Partition(tau)
        self.check_length(tau)
        return [t + self.m - 1 - i for i, t in enumerate(tau.padded(self.m))]


def vandermonde(x) -> float:
    """``prod_{i<j} (x_i - x_j)``."""
    x = list(x)
    out = 1
    for i in range(len(x)):
        for j in range(i + 1, len(x)):
            out *= x[i] - x[j]
    return out


def min_gap(x) -> float:
    x = np.sort(np.asarray(x, dtype=float))
    return float(np.min(np.diff(x))) if x.size > 1 else math.inf


def _det_over_vandermonde(values: np.ndarray, x) -> float:
    if min_gap(x) < MIN_GAP:
        raise ValueError("coordinates must be pairwise distinct (gap > 1e-8); "
                         "use the Schur-expansion path at coincident points")
    return float(np.linalg.det(values) / vandermonde(np.asarray(x, dtype=float)))


def p_tau_det(params: SymJacobiParams, tau: Sequence[int], x) -> float:
    """Orthonormal ``P_tau(x) = det[P_{tau_i+m-i}(x_j)] / V(x)``."""
    x = np.asarray(x, dtype=float)
    if x.shape != (params.m,):
        raise ValueError(f"expected a point in R^{params.m}")
    deg = params.degrees(tau)
    vals = orthonormal_values(params.one_d, max(deg), x)
    return _det_over_vandermonde(vals[deg], x)


def q_tau_det(params: SymJacobiParams, tau: Sequence[int], phi) -> float:
    """``Q_tau(phi) = det[q_{tau_i+m-i}(phi_j)] / V(phi)`` with ``q_n(y) = p_n((1-y)/2)``."""
    phi = np.asarray(phi, dtype=float)
    deg = params.degrees(tau)
    vals = jacobi_values(params.one_d, max(deg), (1.0 - phi) / 2.0)
    return _det_over_vandermonde(vals[deg], phi)


def u_tau_det(params: SymJacobiParams, tau: Sequence[int], x) -> float:
    """``U_tau`` through its hypergeometric-determinant definition (distinct points)."""
    x = np.asarray(x, dtype=float)
    deg = params.degrees(tau)
    vals = jacobi_values(params.one_d, max(deg), x)
    at0 = np.array([float(jacobi_at_zero(params.one_d, n)) for n in deg])
    hyper = vals[deg] / at0[:, None]
    m = params.m
    r, _ = params.rs()
    scale = (-1) ** (m * (m - 1) // 2) / float(v_tilde(params, tau))
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            scale *= (r + j - i) * i
    return scale * _det_over_vandermonde(hyper, x)


def c_coeff(mu: Sequence[int], tau: Sequence[int], X):
    """Hook coefficient ``C_mu^tau(X)`` (any real or rational ``X``).

    With ``tau = (a, 1^b)`` and ``mu = (c, 1^e)``:
    ``(X + [a(a-1) - b(b+1)]/(a+b)) prod_{i=2}^{c} (X + a + i - 2)
    prod_{i=1}^{e} (X - b - i)``.  The empty ``mu`` has coefficient 1.
    """
    tau, mu = Partition(tau), Partition(mu)
    if not tau.is_hook or not mu.is_hook:
        raise ValueError("c_coeff is defined for hooks only")
    if not mu:
        return 1
    if not tau:
        raise ValueError(f"{mu!r} is not contained in the empty partition")
    a, b, c, e = tau.arm, tau.leg, mu.arm, mu.leg
    if c > a or e > b:
        raise ValueError(f"{mu!r} is not contained in {tau!r}")
    shift = Fraction(a * (a - 1) - b * (b + 1), a + b)
    out = X + shift
    for i in range(2, c + 1):
        out *= X + a + i - 2
    for i in range(1, e + 1):
        out *= X - b - i
    return out


@lru_cache(maxsize=4096)
def _hook_expansion(r, s, m, tau: Partition):
    X = r + s + 2 * m
    terms = []
    for mu in subhooks(tau):
        if not mu:
            terms.append((mu, Fraction(1)))
            continue
        coef = (-1) ** mu.weight * gen_binomial(tau, mu) * c_coeff(mu, tau, X)
        terms.append((mu, coef / gen_pochhammer(r + m, mu)))
    return tuple(terms)


def hook_expansion(params: SymJacobiParams, tau: Sequence[int]):
    """Pairs ``(mu, c_mu)`` with ``U_tau = sum_mu c_mu s_mu / s_mu(1^m)``."""
    tau = Partition(tau)
    if not tau.is_hook:
        raise NotImplementedError(
            f"{tau!r} is not a hook; the Schur expansion is only available for hooks")
    params.check_length(tau)
    r, s = params.rs()
    return _hook_expansion(r, s, params.m, tau)


def u_tau_schur(params: SymJacobiParams, tau: Sequence[int], x):
    """``U_tau(x)`` from its Schur expansion; equals 1 at the origin."""
    if len(x) != params.m:
        raise ValueError(f"expected a point in R^{params.m}")
    out = 0
    for mu, coef in hook_expansion(params, tau):
        out += coef * schur_eval(mu, x) / schur_at_ones(mu, params.m)
    return out


def u_at_ones(params: SymJacobiParams, tau: Sequence[int]):
    """``U_tau(1^m)``; every Schur ratio equals 1 there."""
    return sum(coef for _, coef in hook_expansion(params, tau))


def v_tilde(params: SymJacobiParams, tau: Sequence[int]):
    """``prod_{i<j} (tau_i - tau_j + j - i)(tau_i + tau_j + 2m - i - j + r + s + 1)``."""
    tau = Partition(tau)
    params.check_length(tau)
    r, s = params.rs()
    t = tau.padded(params.m)
    out = 1
    for i in range(params.m):
        for j in range(i + 1, params.m):
            # 0-indexed: 2m - i - j shifts by 2 relative to 1-indexed rows
            out *= (t[i] - t[j] + j - i) * (t[i] + t[j] + 2 * params.m - i - j - 2 + r + s + 1)
    return out


def _q_at_ones(params: SymJacobiParams, tau: Partition, r):
    m = params.m
    t = tau.padded(m)
    out = v_tilde(params, tau)
    for i in range(m):
        k = m - 1 - i
        out = out * gamma_ratio([t[i] + k + r + 1], [t[i] + k + 1, k + r + 1, k + 1]) / 2 ** k
    return out


def q_at_ones(params: SymJacobiParams, tau: Sequence[int]):
    """Closed-form ``Q_tau(1^m)``."""
    tau = Partition(tau)
    params.check_length(tau)
    r, _ = params.rs()
    return _q_at_ones(params, tau, r)


def _norm_product(params: SymJacobiParams, tau) -> float:
    return math.prod(math.sqrt(float(jacobi_norm_sq(params.one_d, n)))
                     for n in params.degrees(tau))


def p_at_ones(params: SymJacobiParams, tau: Sequence[int]) -> float:
    """``P_tau(1^m)`` for any partition.

    ``x = 1^m`` corresponds to ``phi = -1^m``; the mirror symmetry
    ``Q^{r,s}(-phi) = (-1)^{|tau|} Q^{s,r}(phi)`` turns it into the closed form
    at ``1^m`` with ``r`` and ``s`` exchanged.
    """
    tau = Partition(tau)
    params.check_length(tau)
    m = params.m
    _, s = params.rs()
    q_mirror = float(_q_at_ones(params, tau, s))
    sign = (-1) ** (m * (m - 1) // 2 + tau.weight)
    return sign * 2.0 ** (m * (m - 1) // 2) * q_mirror / _norm_product(params, tau)


def p_over_u(params: SymJacobiParams, tau: Sequence[int]) -> float:
    """The constant ``P_tau / U_tau`` implied by the two normalizations.

    ``(-1)^{m(m-1)/2} V(tau~) prod_{i<j} 1/((r+j-i) i) prod_i p_{tau_i+m-i}(0)/||p||``.
    """
    tau = Partition(tau)
    m = params.m
    r, _ = params.rs()
    val = float(v_tilde(params, tau))
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            val /= (r + j - i) * i
    for n in params.degrees(tau):
        val *= float(jacobi_at_zero(params.one_d, n))
    val /= _norm_product(params, tau)
    return (-1) ** (m * (m - 1) // 2) * val
