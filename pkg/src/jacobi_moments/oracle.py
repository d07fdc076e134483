"""Quadrature oracles for integrals against ``W^{r,s,m}``.

Everything here is deliberately independent of the closed forms: symmetric
integrals use a tensor Gauss-Jacobi rule on the cube ``[0, 1]^m`` and divide
by ``m!`` instead of meshing the ordered simplex.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import special

from .symjacobi import SymJacobiParams, vandermonde

__all__ = [
    "DEFAULT_NODES",
    "QuadratureRule",
    "gauss_jacobi_rule",
    "symmetric_integral",
    "cauchy_binet_check",
]

DEFAULT_NODES = 24


@dataclass(frozen=True)
class QuadratureRule:
    """``N``-point rule for ``x^r (1-x)^s dx`` on ``[0, 1]``."""

    nodes: tuple
    weights: tuple
    r: float
    s: float
    N: int

    def integrate(self, f: Callable) -> float:
        x = np.asarray(self.nodes)
        return math.fsum(np.asarray(self.weights) * f(x))


def gauss_jacobi_rule(r: float, s: float, N: int = DEFAULT_NODES) -> QuadratureRule:
    if N < 1:
        raise ValueError("need at least one node")
    if r < 0 or s < 0:
        raise ValueError("need r, s >= 0")
    # scipy's rule is for (1-y)^r (1+y)^s on [-1, 1]; x = (1 - y)/2
    y, w = special.roots_jacobi(N, float(r), float(s))
    x = (1.0 - y) / 2.0
    w = w / 2.0 ** (r + s + 1)
    order = np.argsort(x)
    return QuadratureRule(tuple(x[order]), tuple(w[order]), r, s, N)


def symmetric_integral(f: Callable, params: SymJacobiParams, N: int = DEFAULT_NODES) -> float:
    """``int f W`` over the ordered simplex via the product rule on the cube.

    ``f`` receives one point (a length-``m`` array) at a time.  Grid points
    with a repeated coordinate carry ``V^2 = 0`` and are skipped, so ``f``
    is never asked for a value on the diagonal.
    """
    rule = gauss_jacobi_rule(params.r, params.s, N)
    nodes, weights = np.asarray(rule.nodes), np.asarray(rule.weights)
    m = params.m
    acc = []
    for idx in itertools.product(range(N), repeat=m):
        if len(set(idx)) < m:
            continue
        x = nodes[list(idx)]
        w = math.prod(weights[list(idx)]) * vandermonde(x) ** 2
        acc.append(w * f(x))
    return math.fsum(acc) / math.factorial(m)


def cauchy_binet_check(psi: Sequence[Callable], phi: Sequence[Callable],
                       params: SymJacobiParams, N: int = DEFAULT_NODES) -> float:
    """``|int det(psi_i(x_j)) det(phi_i(x_j)) dkappa^m - m! det(int psi_i phi_j dkappa)|``.

    ``kappa(dx) = x^r (1-x)^s dx``; both sides by quadrature, the families
    are vectorized callables.
    """
    m = params.m
    if len(psi) != m or len(phi) != m:
        raise ValueError(f"need families of size m={m}")
    rule = gauss_jacobi_rule(params.r, params.s, N)
    nodes, weights = np.asarray(rule.nodes), np.asarray(rule.weights)
    psi_v = np.array([f(nodes) for f in psi])
    phi_v = np.array([f(nodes) for f in phi])
    lhs = []
    for idx in itertools.product(range(N), repeat=m):
        idx = list(idx)
        w = math.prod(weights[idx])
        lhs.append(w * np.linalg.det(psi_v[:, idx]) * np.linalg.det(phi_v[:, idx]))
    gram = (psi_v * weights) @ phi_v.T
    rhs = math.factorial(m) * np.linalg.det(gram)
    return abs(math.fsum(lhs) - rhs)
