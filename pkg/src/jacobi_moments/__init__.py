"""Exact trace moments of the Hermitian matrix Jacobi process, with oracles."""
from .errors import PreconditionError
from .moments import (MomentResult, expected_trace, expected_trace_s0,
                      kadell_integral, stationary_moment)
from .partitions import Partition
from .simulate import (PathEstimate, SimConfig, eigen_sde_euler, trace_moment_mc,
                       trace_moments_mc)
from .symjacobi import SymJacobiParams

__all__ = [
    "MomentResult",
    "PathEstimate",
    "Partition",
    "PreconditionError",
    "SimConfig",
    "SymJacobiParams",
    "eigen_sde_euler",
    "expected_trace",
    "expected_trace_s0",
    "kadell_integral",
    "stationary_moment",
    "trace_moment_mc",
    "trace_moments_mc",
]

__version__ = "0.1.0"
