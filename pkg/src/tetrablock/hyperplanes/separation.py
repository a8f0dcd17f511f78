"""Explicit separating and supporting hyperplanes."""

from __future__ import annotations

import enum

import numpy as np

from .._validation import DEFAULT_TOL, PreconditionError, Tolerance, check_omega, check_points
from ..domains import Variant, _roots, classify_boundary_e, in_e, in_g2
from ..maps import phi, worst_omega
from .projective import AffineHyperplane, ProjVec


class Lift(enum.Enum):
    PHI = "PHI"
    PSI = "PSI"


def separating_line_g2(q, *, check: bool = True) -> tuple[ProjVec, complex]:
    """A complex line through ``q`` that misses the symmetrized bidisc.

    Every point of ``{(s, p) : mu^2 - s mu + p = 0}`` has ``mu`` among its
    roots; taking ``mu`` to be the larger root of ``q`` (so ``|mu| >= 1`` off
    the domain) gives the line ``-mu s + p = -mu^2``.  The constant is
    returned in the scale of the normalized class.
    """
    q = check_points(q, 2)
    if q.ndim != 1:
        raise ValueError("separating_line_g2 takes a single point")
    if check and in_g2(q):
        raise PreconditionError("point lies in the symmetrized bidisc")
    _, mu = _roots(q[0], q[1])
    mu = complex(mu)
    raw = np.array([-mu, 1.0])
    cls = ProjVec.of(raw)
    scale = raw[0] / cls[0] if cls[0] != 0 else raw[1] / cls[1]
    return cls, complex(-mu * mu / scale)


def lift_line_to_e(a, c, omega, variant: Lift | str = Lift.PHI) -> ProjVec:
    """Lift the planar class ``[(a, c)]`` to ``[(a, omega a, omega c)]`` (or the swapped form)."""
    omega = check_omega(omega, nonzero=True)
    variant = Lift(variant)
    if a == 0 and c == 0:
        raise ValueError("(a, c) must be non-zero")
    if variant is Lift.PHI:
        return ProjVec.of(a, omega * a, omega * c)
    return ProjVec.of(omega * a, a, omega * c)


def separating_hyperplane_e(x, omega=None) -> AffineHyperplane:
    """Hyperplane through a point outside the tetrablock that misses it.

    ``q = phi(omega, x)`` lies outside the symmetrized bidisc when ``omega``
    is the extremal phase; the root-pencil line through ``q`` pulls back along
    ``phi`` to ``-mu y1 - omega mu y2 + omega y3 = -mu^2``.
    """
    x = check_points(x, 3)
    if x.ndim != 1:
        raise ValueError("separating_hyperplane_e takes a single point")
    if in_e(x):
        raise PreconditionError("point lies in the tetrablock")
    if omega is None:
        omega = worst_omega(x)
    else:
        omega = check_omega(omega, nonzero=True)
        if in_g2(phi(omega, x)):
            raise PreconditionError("phi(omega, x) lies in the symmetrized bidisc for this omega")
    q = phi(omega, x)
    _, mu = _roots(q[0], q[1])
    mu = complex(mu)
    return AffineHyperplane.through(x, (-mu, -omega * mu, omega))


def wirtinger_gradient(x) -> np.ndarray:
    """Complex partials ``d e_defining / d x_j`` where both vanishing-term moduli are non-zero."""
    x = check_points(x, 3)
    x1, x2, x3 = x[..., 0], x[..., 1], x[..., 2]
    u = x1 - np.conj(x2) * x3
    v = x2 - np.conj(x1) * x3
    au, av = np.abs(u), np.abs(v)
    g1 = np.conj(u) / (2 * au) - v * np.conj(x3) / (2 * av)
    g2 = np.conj(v) / (2 * av) - u * np.conj(x3) / (2 * au)
    g3 = -np.conj(u) * np.conj(x2) / (2 * au) - np.conj(v) * np.conj(x1) / (2 * av) + np.conj(x3)
    return np.stack([g1, g2, g3], axis=-1)


def tangent_hyperplane_smooth(x, tol: Tolerance = DEFAULT_TOL) -> AffineHyperplane:
    """The complex tangent hyperplane at a smooth boundary point."""
    x = check_points(x, 3)
    cls = classify_boundary_e(x, tol)
    if cls.variant is not Variant.SMOOTH_BOUNDARY:
        raise PreconditionError(f"expected a smooth boundary point, got {cls.variant.value}")
    return AffineHyperplane.through(x, wirtinger_gradient(x))
