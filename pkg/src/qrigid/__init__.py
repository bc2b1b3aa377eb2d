"""Exact and numeric tools for the twisted braidings of Rep(S_mu U(d)), the
kappa invariant and the rigidity report built on them."""

from __future__ import annotations

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    BoundaryMismatchError,
    ConfigError,
    InvalidRankError,
    InvalidWeightError,
    QRigidError,
    ResourceError,
    ScalarExtractionError,
)
from .scalars import CyclotomicScalar, PhasedPower  # noqa: E402

__all__ = [
    "__version__",
    "BoundaryMismatchError",
    "ConfigError",
    "CyclotomicScalar",
    "InvalidRankError",
    "InvalidWeightError",
    "PhasedPower",
    "QRigidError",
    "ResourceError",
    "ScalarExtractionError",
]
