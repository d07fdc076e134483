"""Monte Carlo for the corner process of a unitary Brownian motion.

``Y`` solves ``dY = i Y dH - Y dt / 2`` where ``H`` is a Hermitian Brownian
motion whose entries have variance ``t/d`` at time ``t``.  Reading ``Y`` at
the end of ``[0, t]`` therefore gives ``Y_{t/d}`` in the normalization of
the moment formula.  ``J`` is ``X X*`` for the ``m x p`` upper-left block
``X`` of ``Y``.

The fast path only carries the first ``m`` rows of ``Y``: right
multiplication by ``exp(i dH)`` acts on each row separately.  Rows are
advanced with a Taylor series of the exponential truncated far below double
precision and re-orthonormalized after each step.
"""
from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
import tomli
from numba import njit

from .errors import PreconditionError
from .symjacobi import SymJacobiParams

__all__ = [
    "SimConfig",
    "PathEstimate",
    "WORKERS_ENV",
    "sample_unitary_bm",
    "corner_process",
    "trace_moment_mc",
    "trace_moments_mc",
    "eigen_sde_euler",
    "path_values",
]

WORKERS_ENV = "JACOBI_WORKERS"
TAYLOR_TOL = 1e-16


@dataclass(frozen=True)
class SimConfig:
    """One Monte Carlo experiment.

    Paths are simulated in batches of ``batch``; batch ``b`` draws from a
    Philox stream keyed by ``(seed, b)``, so the estimate does not depend on
    how batches are scheduled across workers.
    """

    d: int
    p: int
    m: int
    t: float
    steps: int = 2000
    paths: int = 100_000
    seed: int = 0
    batch: int = 64

    def __post_init__(self):
        if not (1 <= self.p < self.d and 1 <= self.m < self.d):
            raise ValueError(f"need 1 <= p, m < d, got d={self.d}, p={self.p}, m={self.m}")
        if self.t < 0 or not math.isfinite(self.t):
            raise ValueError(f"t must be finite and >= 0, got {self.t}")
        if self.steps < 1 or self.paths < 1 or self.batch < 1:
            raise ValueError("steps, paths and batch must be positive")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 unsigned bits")

    @property
    def q(self) -> int:
        return self.d - self.p

    @property
    def params(self) -> SymJacobiParams:
        """Exponents for the moment formula; needs ``p, q >= m``."""
        if min(self.p, self.q) < self.m:
            raise PreconditionError(
                f"the moment formula needs min(p, d-p) >= m, got p={self.p}, q={self.q}, m={self.m}")
        return SymJacobiParams.from_dimensions(self.d, self.p, self.m)

    def replace(self, **changes) -> "SimConfig":
        return SimConfig(**{**asdict(self), **changes})

    @classmethod
    def from_mapping(cls, data: dict) -> "SimConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_file(cls, path) -> "SimConfig":
        """Load from ``.json`` or ``.toml``; a ``[sim]`` table is used if present."""
        path = Path(path)
        if path.suffix == ".toml":
            data = tomli.loads(path.read_text())
        else:
            data = json.loads(path.read_text())
        return cls.from_mapping(data.get("sim", data))


@dataclass(frozen=True)
class PathEstimate:
    mean: float
    stderr: float
    paths: int

    @classmethod
    def from_values(cls, values: np.ndarray) -> "PathEstimate":
        """Mean and standard error with order-independent (correctly rounded) sums."""
        values = np.asarray(values, dtype=float)
        n = values.size
        mean = math.fsum(values) / n
        if n < 2:
            return cls(mean, 0.0, n)
        var = math.fsum((values - mean) ** 2) / (n - 1)
        return cls(mean, math.sqrt(var / n), n)

    def to_json(self) -> dict:
        return {"mean": self.mean, "stderr": self.stderr, "paths": self.paths}


def _batch_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, index])))


def _increment(z: np.ndarray, d: int, dt: float) -> np.ndarray:
    """Hermitian increment from ``d*d`` standard normals (kernel layout)."""
    sd, so = math.sqrt(dt / d), math.sqrt(dt / (2 * d))
    h = np.zeros((d, d), dtype=complex)
    q = 0
    for a in range(d):
        h[a, a] = sd * z[q]
        q += 1
        for b in range(a + 1, d):
            h[a, b] = so * z[q] + 1j * so * z[q + 1]
            h[b, a] = np.conj(h[a, b])
            q += 2
    return h


def sample_unitary_bm(d: int, t: float, steps: int, rng: np.random.Generator) -> np.ndarray:
    """Full ``d x d`` unitary Brownian motion read at time ``t/d``.

    Ordered product of exact exponentials ``exp(i dH)``, each through a
    Hermitian eigendecomposition.  Uses the same normal draws, in the same
    order, as one path of the batched kernel.
    """
    if steps < 1:
        raise ValueError("steps must be positive")
    y = np.eye(d, dtype=complex)
    if t == 0:
        return y
    dt = t / steps
    for _ in range(steps):
        w, v = np.linalg.eigh(_increment(rng.standard_normal(d * d), d, dt))
        y = y @ ((v * np.exp(1j * w)) @ v.conj().T)
    return y


def corner_process(y: np.ndarray, m: int, p: int) -> np.ndarray:
    """``J = X X*`` with ``X`` the ``m x p`` upper-left block of ``y``."""
    d = y.shape[0]
    if not (1 <= m <= d and 1 <= p <= d):
        raise ValueError(f"need 1 <= m, p <= d={d}")
    x = y[:m, :p]
    return x @ x.conj().T


def _taylor_length(d: int, dt: float, tol: float) -> int:
    # bound ||dH|| by three standard deviations of its Frobenius norm
    norm = 3.0 * math.sqrt(dt * d)
    k, term = 1, norm
    while term > tol:
        k += 1
        term *= norm / k
    return k


@njit(cache=True, fastmath=True)
def _advance_rows(rng, d, m, dt, steps, K, P):
    xr = np.zeros((m, d, P))
    xi = np.zeros((m, d, P))
    for i in range(m):
        xr[i, i, :] = 1.0
    A = np.empty((d, d, P))
    B = np.empty((d, d, P))
    sd = math.sqrt(dt / d)
    so = math.sqrt(dt / (2 * d))
    tr = np.empty((m, d, P))
    ti = np.empty((m, d, P))
    cr = np.empty((d, P))
    ci = np.empty((d, P))
    sr = np.empty(P)
    si = np.empty(P)
    for _ in range(steps):
        z = rng.standard_normal((d * d, P))
        q = 0
        for a in range(d):
            for l in range(P):
                A[a, a, l] = sd * z[q, l]
                B[a, a, l] = 0.0
            q += 1
            for b in range(a + 1, d):
                for l in range(P):
                    u = so * z[q, l]
                    v = so * z[q + 1, l]
                    A[a, b, l] = u
                    A[b, a, l] = u
                    B[a, b, l] = v
                    B[b, a, l] = -v
                q += 2
        # Horner: t <- x + t (i dH) / k, k = K-1 .. 1
        tr[:] = xr
        ti[:] = xi
        for k in range(K - 1, 0, -1):
            inv = 1.0 / k
            for i in range(m):
                cr[:] = tr[i]
                ci[:] = ti[i]
                for b in range(d):
                    sr[:] = 0.0
                    si[:] = 0.0
                    for a in range(d):
                        for l in range(P):
                            sr[l] -= cr[a, l] * B[a, b, l] + ci[a, l] * A[a, b, l]
                            si[l] += cr[a, l] * A[a, b, l] - ci[a, l] * B[a, b, l]
                    for l in range(P):
                        tr[i, b, l] = xr[i, b, l] + sr[l] * inv
                        ti[i, b, l] = xi[i, b, l] + si[l] * inv
        # Gram-Schmidt on the rows
        for i in range(m):
            for j in range(i):
                sr[:] = 0.0
                si[:] = 0.0
                for b in range(d):
                    for l in range(P):
                        sr[l] += tr[j, b, l] * tr[i, b, l] + ti[j, b, l] * ti[i, b, l]
                        si[l] += tr[j, b, l] * ti[i, b, l] - ti[j, b, l] * tr[i, b, l]
                for b in range(d):
                    for l in range(P):
                        tr[i, b, l] -= sr[l] * tr[j, b, l] - si[l] * ti[j, b, l]
                        ti[i, b, l] -= sr[l] * ti[j, b, l] + si[l] * tr[j, b, l]
            sr[:] = 0.0
            for b in range(d):
                for l in range(P):
                    sr[l] += tr[i, b, l] ** 2 + ti[i, b, l] ** 2
            for l in range(P):
                sr[l] = 1.0 / math.sqrt(sr[l])
            for b in range(d):
                for l in range(P):
                    xr[i, b, l] = tr[i, b, l] * sr[l]
                    xi[i, b, l] = ti[i, b, l] * sr[l]
    return xr, xi


def top_rows(config: SimConfig, batch_index: int, size: int) -> np.ndarray:
    """First ``m`` rows of ``Y`` for one batch, shape ``(size, m, d)``."""
    rng = _batch_rng(config.seed, batch_index)
    dt = config.t / config.steps
    K = _taylor_length(config.d, dt, TAYLOR_TOL)
    xr, xi = _advance_rows(rng, config.d, config.m, dt, config.steps, K, size)
    return np.transpose(xr + 1j * xi, (2, 0, 1))


def _batch_power_sums(args) -> np.ndarray:
    config, index, size, ns = args
    x = top_rows(config, index, size)[:, :, :config.p]
    lam = np.linalg.eigvalsh(x @ np.conj(np.transpose(x, (0, 2, 1))))
    if lam.min() < -1e-12 or lam.max() > 1 + 1e-12:
        raise RuntimeError("corner spectrum left [0, 1]; the step is too coarse")
    return np.stack([np.sum(lam ** n, axis=1) for n in ns])


def _workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from exc
    return max(value, 1)


def path_values(config: SimConfig, ns: Sequence[int]) -> np.ndarray:
    """Per-path ``tr(J^n)`` for each ``n``; shape ``(len(ns), paths)`` in path order."""
    ns = [int(n) for n in ns]
    if any(n < 1 for n in ns):
        raise ValueError("moment orders must be positive")
    if config.t == 0:
        return np.full((len(ns), config.paths), float(min(config.m, config.p)))
    sizes = [min(config.batch, config.paths - start)
             for start in range(0, config.paths, config.batch)]
    jobs = [(config, b, size, ns) for b, size in enumerate(sizes)]
    workers = _workers()
    if workers == 1:
        chunks = [_batch_power_sums(job) for job in jobs]
    else:
        with ProcessPoolExecutor(workers) as pool:
            chunks = list(pool.map(_batch_power_sums, jobs))
    return np.concatenate(chunks, axis=1)


def trace_moments_mc(config: SimConfig, ns: Iterable[int]) -> dict[int, PathEstimate]:
    """Estimates of ``E tr(J^n)`` for several ``n`` from one set of paths."""
    ns = list(ns)
    values = path_values(config, ns)
    return {n: PathEstimate.from_values(row) for n, row in zip(ns, values)}


def trace_moment_mc(config: SimConfig, n: int) -> PathEstimate:
    return trace_moments_mc(config, [n])[n]


@njit(cache=True)
def _euler_batch(rng, d, p, m, dt, steps, eps, P):
    lam = np.empty((P, m))
    for l in range(P):
        for i in range(m):
            lam[l, i] = 1.0 - (i + 1) * eps
    drift = np.empty(m)
    sqdt = math.sqrt(dt)
    gap = 1e-12
    for _ in range(steps):
        z = rng.standard_normal((P, m))
        for l in range(P):
            x = lam[l]
            for i in range(m):
                acc = p - d * x[i]
                for j in range(m):
                    if j != i:
                        acc += (x[i] * (1 - x[j]) + x[j] * (1 - x[i])) / (x[i] - x[j])
                drift[i] = acc / d
            for i in range(m):
                vol = math.sqrt(max(2.0 / d * x[i] * (1 - x[i]), 0.0))
                y = x[i] + drift[i] * dt + vol * sqdt * z[l, i]
                # reflect at the walls, then clamp strictly inside
                if y < 0.0:
                    y = -y
                if y > 1.0:
                    y = 2.0 - y
                x[i] = min(max(y, gap), 1.0 - gap)
            for i in range(1, m):
                v = x[i]
                j = i - 1
                while j >= 0 and x[j] < v:
                    x[j + 1] = x[j]
                    j -= 1
                x[j + 1] = v
            for i in range(m - 1):
                if x[i] - x[i + 1] < gap:
                    mid = 0.5 * (x[i] + x[i + 1])
                    x[i] = mid + 0.5 * gap
                    x[i + 1] = mid - 0.5 * gap
    return lam


def eigen_sde_euler(config: SimConfig, n: int, eps: float = 1e-4) -> PathEstimate:
    """Euler scheme for the eigenvalue SDE, started at ``1 - i eps``.

    Reflected at 0 and 1 and kept ordered with a minimum gap of 1e-12.
    """
    if min(config.p, config.q) <= config.m - 0.5:
        raise PreconditionError(
            f"eigenvalue SDE needs min(p, d-p) > m - 1/2, got p={config.p}, "
            f"q={config.q}, m={config.m}")
    if n < 1:
        raise ValueError("moment order must be positive")
    if config.t == 0:
        start = 1.0 - eps * np.arange(1, config.m + 1)
        return PathEstimate(float(np.sum(start ** n)), 0.0, config.paths)
    dt = config.t / config.steps
    chunks = []
    for b, start in enumerate(range(0, config.paths, config.batch)):
        size = min(config.batch, config.paths - start)
        lam = _euler_batch(_batch_rng(config.seed, b), config.d, config.p, config.m,
                           dt, config.steps, eps, size)
        chunks.append(np.sum(lam ** n, axis=1))
    return PathEstimate.from_values(np.concatenate(chunks))
