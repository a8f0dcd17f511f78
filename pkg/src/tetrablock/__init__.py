"""Geometry of the tetrablock and the symmetrized domains G_{2,rho}."""

from ._validation import (
    BoundaryInconsistencyError,
    DegenerateCaseError,
    DomainError,
    GeometryError,
    NonFiniteInputError,
    PreconditionError,
    Tolerance,
)

__version__ = "0.1.0"
