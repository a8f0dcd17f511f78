"""Input validation helpers and the exception hierarchy."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class GeometryError(ValueError):
    """Base class for all errors raised by this package."""


class NonFiniteInputError(GeometryError):
    pass


class PreconditionError(GeometryError):
    pass


class DomainError(GeometryError):
    """A parameter lies outside the set where an operation is defined (e.g. omega = 0)."""


class DegenerateCaseError(GeometryError):
    pass


class BoundaryInconsistencyError(GeometryError):
    """A boundary point matches none of the non-smooth parametrizations."""


@dataclass(frozen=True)
class Tolerance:
    """Numerical bands used when deciding boundary membership and projective equality."""

    membership_tol: float = 1e-9
    proj_tol: float = 1e-9

    def __post_init__(self):
        if not (self.membership_tol > 0 and self.proj_tol > 0):
            raise ValueError("tolerances must be positive")


DEFAULT_TOL = Tolerance()


def check_points(x, n: int) -> np.ndarray:
    """Return ``x`` as a complex array whose last axis has length ``n``.

    Raises
    ------
    NonFiniteInputError
        If any component is NaN or infinite.
    ValueError
        If the trailing dimension is not ``n``.
    """
    arr = np.asarray(x, dtype=complex)
    if arr.ndim == 0 or arr.shape[-1] != n:
        raise ValueError(f"expected points with {n} complex coordinates, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInputError("non-finite coordinate in input")
    return arr


def check_rho(rho: float) -> float:
    rho = float(rho)
    if not (0.0 < rho <= 1.0):
        raise DomainError(f"rho must lie in (0, 1], got {rho}")
    return rho


def check_omega(omega, *, nonzero: bool = False) -> complex:
    omega = complex(omega)
    if not np.isfinite(omega):
        raise NonFiniteInputError("omega must be finite")
    if abs(omega) > 1.0 + 1e-12:
        raise DomainError(f"|omega| must be <= 1, got {abs(omega)}")
    if nonzero and omega == 0:
        raise DomainError("omega must be non-zero")
    return omega


def as_scalar(value):
    """Unwrap 0-d arrays so single-point calls return plain Python numbers."""
    if isinstance(value, np.ndarray) and value.ndim == 0:
        return value.item()
    return value
