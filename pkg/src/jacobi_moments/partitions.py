"""Partitions, hooks and the Schur-function quantities built on them.

Partitions are stored without trailing zeros; any formula that depends on
the ambient number of variables takes ``m`` explicitly.  All combinatorial
quantities are exact (``int`` / ``Fraction``) whenever the inputs are.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Sequence

from .linalg import det

__all__ = [
    "Partition",
    "HookFrame",
    "EMPTY",
    "hooks_alpha",
    "subhooks",
    "contains",
    "partitions_of",
    "partitions_up_to",
    "hooks_up_to",
    "gen_pochhammer",
    "gen_binomial",
    "schur_at_ones",
    "schur_eval",
    "complete_homogeneous",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition([2, 1, 0])``
    equals ``Partition([2, 1])``.  Indexing past the length with :meth:`part`
    returns 0.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(p) for p in parts]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """0-indexed part, with implicit trailing zeros."""
        return self[i] if i < len(self) else 0

    def padded(self, m: int) -> tuple[int, ...]:
        if len(self) > m:
            raise ValueError(f"{self!r} has more than {m} parts")
        return tuple(self) + (0,) * (m - len(self))

    @property
    def is_hook(self) -> bool:
        return len(self) <= 1 or all(p == 1 for p in self[1:])

    @property
    def arm(self) -> int:
        """First row length of a hook (0 for the empty partition)."""
        return self.part(0)

    @property
    def leg(self) -> int:
        """Number of rows below the first one."""
        return max(len(self) - 1, 0)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def to_json(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


EMPTY = Partition()


def _hook(arm: int, leg: int) -> Partition:
    return Partition([arm] + [1] * leg) if arm > 0 else EMPTY


@dataclass(frozen=True)
class HookFrame:
    """A hook ``(n-k-delta, 1^(k-g))`` sitting inside ``alpha(n, k)``."""

    n: int
    k: int
    delta: int
    g: int

    def __post_init__(self):
        if self.n < 1 or not 0 <= self.k <= self.n - 1:
            raise ValueError(f"need n >= 1 and 0 <= k <= n-1, got n={self.n}, k={self.k}")
        if not 0 <= self.delta <= self.n - self.k - 1 or not 0 <= self.g <= self.k:
            raise ValueError(f"frame offsets out of range: {self}")

    @property
    def partition(self) -> Partition:
        return _hook(self.n - self.k - self.delta, self.k - self.g)

    @classmethod
    def locate(cls, tau: Partition, n: int, k: int) -> "HookFrame":
        """Frame of a nonempty hook ``tau`` inside ``alpha(n, k)``."""
        tau = Partition(tau)
        if not tau or not tau.is_hook:
            raise ValueError(f"{tau!r} is not a nonempty hook")
        return cls(n, k, n - k - tau.arm, k - tau.leg)

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "delta": self.delta, "g": self.g,
                "parts": self.partition.to_json()}


def hooks_alpha(n: int) -> list[Partition]:
    """The hooks ``(n-k, 1^k)``, k = 0..n-1, whose signed Schur sum is ``p_n``."""
    if n < 1:
        raise ValueError("hooks_alpha needs n >= 1")
    return [_hook(n - k, k) for k in range(n)]


def contains(mu: Sequence[int], tau: Sequence[int]) -> bool:
    """Young-diagram inclusion ``mu ⊆ tau``."""
    mu, tau = Partition(mu), Partition(tau)
    return len(mu) <= len(tau) and all(a <= b for a, b in zip(mu, tau))


def subhooks(tau: Sequence[int]) -> list[Partition]:
    """All partitions contained in the hook ``tau``, the empty one first."""
    tau = Partition(tau)
    if not tau.is_hook:
        raise ValueError(f"{tau!r} is not a hook")
    out = [EMPTY]
    for arm in range(1, tau.arm + 1):
        for leg in range(0, tau.leg + 1):
            out.append(_hook(arm, leg))
    out.sort(key=lambda p: (p.weight, [-x for x in p]))
    return out


def partitions_of(weight: int, max_length: int | None = None,
                  max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``weight`` in reverse lexicographic order."""
    if max_part is None:
        max_part = weight
    if max_length is None:
        max_length = weight
    if weight == 0:
        yield EMPTY
        return
    if max_length == 0:
        return
    for first in range(min(weight, max_part), 0, -1):
        for rest in partitions_of(weight - first, max_length - 1, first):
            yield Partition((first,) + tuple(rest))


def partitions_up_to(weight: int, max_length: int | None = None) -> list[Partition]:
    return [p for w in range(weight + 1) for p in partitions_of(w, max_length)]


def hooks_up_to(weight: int, max_length: int | None = None,
                include_empty: bool = True) -> list[Partition]:
    out = [p for p in partitions_up_to(weight, max_length) if p.is_hook]
    return out if include_empty else [p for p in out if p]


def _rising(x, n: int):
    out = 1
    for j in range(n):
        out *= x + j
    return out


def gen_pochhammer(z, mu: Sequence[int]):
    """``(z)_mu = prod_i (z - i + 1)_{mu_i}`` (rows indexed from 1)."""
    out = 1
    for i, part in enumerate(Partition(mu)):
        out *= _rising(z - i, part)
    return out


def gen_binomial(tau: Sequence[int], mu: Sequence[int]) -> Fraction:
    """Generalized binomial coefficient of two nested hooks.

    With ``tau = (a, 1^b)`` and ``mu = (c, 1^e)`` the value is
    ``C(a-1, c-1) C(b, e) [(a+e)(b+c) - (a-c)(b-e)] / (c+e)^2``; in frame
    coordinates this is the usual ``(n, k, delta, g)`` / ``(gamma, l)`` form,
    and it does not depend on which ``alpha(n, k)`` frame is used.
    ``binom(tau, ∅) = 1``.
    """
    tau, mu = Partition(tau), Partition(mu)
    if not tau.is_hook or not mu.is_hook:
        raise ValueError("gen_binomial is only defined here for hooks")
    if not contains(mu, tau):
        raise ValueError(f"{mu!r} is not contained in {tau!r}")
    if not mu:
        return Fraction(1)
    a, b, c, e = tau.arm, tau.leg, mu.arm, mu.leg
    bracket = (a + e) * (b + c) - (a - c) * (b - e)
    return Fraction(comb(a - 1, c - 1) * comb(b, e) * bracket, (c + e) ** 2)


def schur_at_ones(mu: Sequence[int], m: int) -> int:
    """``s_mu(1^m)`` by the Weyl dimension formula; 0 if ``l(mu) > m``."""
    mu = Partition(mu)
    if len(mu) > m:
        return 0
    num = den = 1
    # pairs with both rows beyond l(mu) contribute 1
    for i in range(len(mu)):
        for j in range(i + 1, m):
            num *= mu.part(i) - mu.part(j) + j - i
            den *= j - i
    return num // den


def complete_homogeneous(x: Sequence, kmax: int) -> list:
    """``[h_0(x), ..., h_kmax(x)]`` by adding one variable at a time.

    Every update is a sum of products of the inputs, so the recursion is
    exact on rationals and has no cancellation for positive inputs.
    """
    h = [1] + [0] * kmax
    for xi in x:
        for k in range(1, kmax + 1):
            h[k] = h[k] + xi * h[k - 1]
    return h


def schur_eval(mu: Sequence[int], x: Sequence):
    """Schur polynomial ``s_mu(x)`` via the Jacobi-Trudi determinant.

    Well defined at coincident coordinates (no bialternant ratio).
    """
    mu = Partition(mu)
    if len(mu) > len(x):
        return 0
    if not mu:
        return 1
    ell = len(mu)
    h = complete_homogeneous(list(x), mu[0] + ell - 1)

    def hk(k):
        return h[k] if 0 <= k < len(h) else 0

    mat = [[hk(mu[i] - i + j) for j in range(ell)] for i in range(ell)]
    return det(mat)
