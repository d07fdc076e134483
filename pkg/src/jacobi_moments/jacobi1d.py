"""One-dimensional Jacobi polynomials on [0, 1] and shared Gamma/Beta kernels.

``p_n^{r,s}(x) = ((r+1)_n / n!) 2F1(-n, n+r+s+1; r+1; x)`` is orthogonal for
the weight ``x^r (1-x)^s`` on ``[0, 1]``.  In terms of the classical Jacobi
polynomial, ``p_n^{r,s}(x) = P_n^{(r,s)}(1 - 2x)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np
from scipy import special

__all__ = [
    "Jacobi1DParams",
    "BetaValue",
    "as_exact",
    "rising",
    "gamma_ratio",
    "beta",
    "beta_fn",
    "jacobi_eval",
    "jacobi_coefficients",
    "jacobi_norm_sq",
    "jacobi_at_zero",
    "jacobi_values",
    "orthonormal_values",
]


def as_exact(x):
    """``x`` as an int/Fraction if it is an integral or rational number, else None."""
    if isinstance(x, bool):
        return None
    if isinstance(x, Rational):
        return Fraction(x) if not isinstance(x, int) else x
    if isinstance(x, float) and x.is_integer():
        return int(x)
    return None


def _is_integral(x) -> bool:
    x = as_exact(x)
    return x is not None and Fraction(x).denominator == 1


def rising(x, n: int):
    """Pochhammer symbol ``(x)_n`` for a nonnegative integer ``n``."""
    out = 1
    for j in range(n):
        out *= x + j
    return out


def gamma_ratio(num, den):
    """``prod Gamma(num) / prod Gamma(den)`` for positive arguments.

    Exact (factorials) when every argument is a positive integer, otherwise
    evaluated through log-gamma so that large arguments do not overflow.
    """
    if any(a <= 0 for a in list(num) + list(den)):
        raise ValueError("gamma_ratio needs positive arguments")
    if all(_is_integral(a) for a in list(num) + list(den)):
        top = math.prod(math.factorial(int(a) - 1) for a in num)
        bottom = math.prod(math.factorial(int(a) - 1) for a in den)
        return Fraction(top, bottom)
    log = math.fsum(math.lgamma(float(a)) for a in num) - math.fsum(
        math.lgamma(float(a)) for a in den)
    return math.exp(log)


@dataclass(frozen=True)
class Jacobi1DParams:
    r: float = 0
    s: float = 0

    def __post_init__(self):
        if self.r < 0 or self.s < 0:
            raise ValueError(f"need r, s >= 0, got r={self.r}, s={self.s}")

    @property
    def exact(self) -> bool:
        """True when both exponents are nonnegative integers."""
        return _is_integral(self.r) and _is_integral(self.s)

    def normalized(self):
        """Exponents as ints on the exact path, floats otherwise."""
        if self.exact:
            return int(self.r), int(self.s)
        return float(self.r), float(self.s)


@dataclass(frozen=True)
class BetaValue:
    a: float
    b: float
    value: float

    def __float__(self):
        return float(self.value)


def beta(a, b):
    """Beta function; exact rational for positive integer arguments."""
    if a <= 0 or b <= 0:
        raise ValueError(f"Beta function needs positive arguments, got ({a}, {b})")
    return gamma_ratio([a, b], [a + b])


def beta_fn(a, b) -> BetaValue:
    return BetaValue(a, b, beta(a, b))


def jacobi_coefficients(params: Jacobi1DParams, n: int) -> list:
    """Monomial coefficients ``[c_0, ..., c_n]`` of ``p_n^{r,s}``."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    r, s = params.normalized()
    lead = rising(r + 1, n)
    lead = Fraction(lead, math.factorial(n)) if params.exact else lead / math.factorial(n)
    coeffs = [lead]
    c = lead
    for j in range(n):
        # ratio of consecutive 2F1 terms
        num = (j - n) * (n + r + s + 1 + j)
        den = (r + 1 + j) * (j + 1)
        c = c * Fraction(num, den) if params.exact else c * num / den
        coeffs.append(c)
    return coeffs


def jacobi_eval(params: Jacobi1DParams, n: int, x):
    """``p_n^{r,s}(x)`` from the terminating hypergeometric sum.

    Exact when ``r, s`` are integers and ``x`` is rational; otherwise the
    ``n + 1`` terms are added with compensated summation.
    """
    coeffs = jacobi_coefficients(params, n)
    xe = as_exact(x)
    if params.exact and xe is not None:
        out, power = Fraction(0), Fraction(1)
        for c in coeffs:
            out += c * power
            power *= xe
        return out
    x = float(x)
    return math.fsum(float(c) * x ** j for j, c in enumerate(coeffs))


def jacobi_norm_sq(params: Jacobi1DParams, n: int):
    """``||p_n^{r,s}||^2`` for the weight ``x^r (1-x)^s`` on ``[0, 1]``."""
    r, s = params.normalized()
    ratio = gamma_ratio([r + n + 1, s + n + 1], [n + 1, n + 1 + r + s])
    return ratio / (2 * n + r + s + 1)


def jacobi_at_zero(params: Jacobi1DParams, n: int):
    """``p_n^{r,s}(0) = (r+1)_n / n!``."""
    r, _ = params.normalized()
    val = rising(r + 1, n)
    return Fraction(val, math.factorial(n)) if params.exact else val / math.factorial(n)


def jacobi_values(params: Jacobi1DParams, nmax: int, x) -> np.ndarray:
    """Float values of ``p_0, ..., p_nmax`` at the points ``x``.

    Uses the classical three-term recurrence (through scipy), which stays
    accurate at degrees where the alternating monomial sum loses digits.
    Shape is ``(nmax + 1,) + x.shape``.
    """
    x = np.asarray(x, dtype=float)
    r, s = (float(v) for v in params.normalized())
    degrees = np.arange(nmax + 1).reshape((-1,) + (1,) * x.ndim)
    return special.eval_jacobi(degrees, r, s, 1.0 - 2.0 * x)


def orthonormal_values(params: Jacobi1DParams, nmax: int, x) -> np.ndarray:
    norms = np.sqrt([float(jacobi_norm_sq(params, n)) for n in range(nmax + 1)])
    vals = jacobi_values(params, nmax, x)
    return vals / norms.reshape((-1,) + (1,) * (vals.ndim - 1))
