"""Validated numerics for the nonnegativity of the sine sums
sum_k ((n^2 - k^2) / ((n^2 - 1) k))^beta sin(kx) on [0, pi]."""

from __future__ import annotations

from .interval import Interval, DomainError, beta1, beta2, pi

__version__ = "0.1.0"

__all__ = ["Interval", "DomainError", "beta1", "beta2", "pi", "__version__"]
