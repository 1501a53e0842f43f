"""Rankine-Hugoniot shocks, entropy checks and finite-volume runs for the
one-dimensional elasticity p-system."""

from ._core import *  # noqa: F401,F403
from ._core import (
    Error,
    ModelKind,
    ModelSpec,
    NoSolutionError,
    NumericalError,
    UsageError,
)

__all__ = [
    "Error",
    "ModelKind",
    "ModelSpec",
    "NoSolutionError",
    "NumericalError",
    "UsageError",
    "check_condition",
    "evaluate",
    "extract_shock",
    "jump_excess",
    "kirchhoff_alpha_bounds",
    "kirchhoff_entropy_boundary",
    "kirchhoff_s_alpha",
    "lambert_w0",
    "near_zero_certificate",
    "q_value",
    "scan_regions",
    "simulate",
    "solve_rankine_hugoniot",
    "standard_pair",
    "stress",
    "stress_antiderivative",
    "stvk_hyperbolic_threshold",
]
