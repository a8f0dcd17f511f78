"""Defining functions, membership predicates and boundary classification.

Points are plain complex numpy arrays: shape ``(..., 3)`` for the tetrablock
ambient space and ``(..., 2)`` for the symmetrized-bidisc ambient space, with
coordinates ``(x1, x2, x3)`` and ``(s, p)`` respectively.  Every function is
vectorized over leading axes; single points give back Python scalars.

A *defining function* is negative exactly on the open domain, zero on its
boundary and positive outside.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from ._validation import (
    DEFAULT_TOL,
    BoundaryInconsistencyError,
    Tolerance,
    as_scalar,
    check_points,
    check_rho,
)

__all__ = [
    "RootPair",
    "Variant",
    "NonSmoothCase",
    "BoundaryClassification",
    "Domain",
    "e_defining",
    "g2_defining",
    "g2rho_defining",
    "drho_defining",
    "in_e",
    "in_g2",
    "in_polydisc",
    "in_drho",
    "in_g2rho",
    "roots_of_pi",
    "classify_boundary_e",
    "rotate_e",
    "tetrablock",
    "symmetrized_bidisc",
    "g2rho",
    "polydisc",
    "punctured_bidisc",
]

# relative width of the modulus band inside which two roots count as tied
_ROOT_TIE_RTOL = 1e-12


def e_defining(x):
    """``|x1 - conj(x2) x3| + |x2 - conj(x1) x3| + |x3|^2 - 1``."""
    x = check_points(x, 3)
    x1, x2, x3 = x[..., 0], x[..., 1], x[..., 2]
    val = np.abs(x1 - np.conj(x2) * x3) + np.abs(x2 - np.conj(x1) * x3) + np.abs(x3) ** 2 - 1.0
    return as_scalar(val)


def g2_defining(q):
    """``|s - conj(s) p| + |p|^2 - 1``."""
    q = check_points(q, 2)
    s, p = q[..., 0], q[..., 1]
    return as_scalar(np.abs(s - np.conj(s) * p) + np.abs(p) ** 2 - 1.0)


def in_e(x):
    return as_scalar(np.asarray(e_defining(x)) < 0)


def in_g2(q):
    return as_scalar(np.asarray(g2_defining(q)) < 0)


def in_polydisc(x, n: int | None = None):
    """Strict membership in the unit polydisc of ``C^n``."""
    x = np.asarray(x, dtype=complex)
    n = x.shape[-1] if n is None else n
    x = check_points(x, n)
    return as_scalar(np.all(np.abs(x) < 1.0, axis=-1))


class RootPair(NamedTuple):
    """Roots of ``z^2 - s z + p`` ordered so that ``|lambda1| <= |lambda2|``.

    For equal moduli ``lambda2`` is the root with the smaller principal
    argument in ``[0, 2 pi)``.
    """

    lambda1: complex | np.ndarray
    lambda2: complex | np.ndarray


def _arg_2pi(z):
    return np.mod(np.angle(z), 2 * np.pi)


def _roots(s, p):
    """Vectorized core of :func:`roots_of_pi`; no validation."""
    s = np.asarray(s, dtype=complex)
    p = np.asarray(p, dtype=complex)
    # roots scale with max(|s|, sqrt|p|); work with unit-size coefficients
    c = np.maximum(np.abs(s), np.sqrt(np.abs(p)))
    zero = c == 0
    c = np.where(zero, 1.0, c)
    sn, pn = s / c, (p / c) / c
    d = np.sqrt(sn * sn - 4.0 * pn)
    # pick the sign of the discriminant root that avoids cancellation in s + d
    d = np.where((np.conj(sn) * d).real < 0, -d, d)
    bign = 0.5 * (sn + d)
    # |bign| >= 1/2 unless both coefficients vanish
    small = np.where(zero, 0.0, c * (pn / np.where(zero, 1.0, bign)))
    big = np.where(zero, 0.0, c * bign)
    abig, asmall = np.abs(big), np.abs(small)
    tie = np.abs(abig - asmall) <= _ROOT_TIE_RTOL * np.maximum(abig, asmall)
    swap = tie & (_arg_2pi(small) < _arg_2pi(big))
    lam2 = np.where(swap, small, big)
    lam1 = np.where(swap, big, small)
    return lam1, lam2


def roots_of_pi(q) -> RootPair:
    """Invert the symmetrization ``(z1, z2) -> (z1 + z2, z1 z2)``.

    The larger root is computed from the sign-aware quadratic formula and the
    smaller one as ``p / larger``, which keeps both accurate when
    ``|p| << |s|^2``.
    """
    q = check_points(q, 2)
    lam1, lam2 = _roots(q[..., 0], q[..., 1])
    return RootPair(as_scalar(lam1), as_scalar(lam2))


def in_drho(z, rho: float):
    z = check_points(z, 2)
    rho = check_rho(rho)
    a1, a2 = np.abs(z[..., 0]), np.abs(z[..., 1])
    return as_scalar((a1 < 1) & (a2 < 1) & (a1 * a2 < rho))


def drho_defining(z, rho: float):
    z = check_points(z, 2)
    rho = check_rho(rho)
    a1, a2 = np.abs(z[..., 0]), np.abs(z[..., 1])
    return as_scalar(np.maximum(np.maximum(a1, a2) - 1.0, a1 * a2 - rho))


def g2rho_defining(q, rho: float):
    """``max(|lambda2| - 1, |p| - rho)``, negative exactly on ``pi(D_rho)``.

    The symmetrization fibre over ``(s, p)`` is the root pair, and
    ``|lambda1 lambda2| = |p|``, so membership in ``pi(D_rho)`` reduces to a
    root-modulus test plus a bound on ``|p|``.
    """
    q = check_points(q, 2)
    rho = check_rho(rho)
    _, lam2 = _roots(q[..., 0], q[..., 1])
    return as_scalar(np.maximum(np.abs(lam2) - 1.0, np.abs(q[..., 1]) - rho))


def in_g2rho(q, rho: float):
    return as_scalar(np.asarray(g2rho_defining(q, rho)) < 0)


def rotate_e(theta: float, tau: float, y):
    """Apply the automorphism ``(e^{-i theta} y1, e^{-i tau} y2, e^{-i(theta+tau)} y3)``."""
    y = check_points(y, 3)
    rot = np.exp(-1j * np.array([theta, tau, theta + tau]))
    return y * rot


class Variant(enum.Enum):
    INTERIOR = "Interior"
    EXTERIOR = "Exterior"
    SMOOTH_BOUNDARY = "SmoothBoundary"
    NON_SMOOTH_BOUNDARY = "NonSmoothBoundary"


class NonSmoothCase(enum.Enum):
    RR1 = "RR1"  # (r e^{i theta}, r e^{i tau}, e^{i(theta+tau)})
    ONE_RR = "OneRR"  # (e^{i theta}, r e^{i tau}, r e^{i(theta+tau)})
    R1R = "R1R"  # (r e^{i theta}, e^{i tau}, r e^{i(theta+tau)})


def canonical_point(case: NonSmoothCase, r: float) -> np.ndarray:
    if case is NonSmoothCase.RR1:
        return np.array([r, r, 1.0], dtype=complex)
    if case is NonSmoothCase.ONE_RR:
        return np.array([1.0, r, r], dtype=complex)
    return np.array([r, 1.0, r], dtype=complex)


@dataclass(frozen=True)
class BoundaryClassification:
    variant: Variant
    case: NonSmoothCase | None = None
    r: float | None = None
    theta: float | None = None
    tau: float | None = None

    def canonical(self) -> np.ndarray:
        if self.case is None:
            raise ValueError("only non-smooth boundary points have a canonical form")
        return canonical_point(self.case, self.r)

    def as_dict(self) -> dict:
        out = {"variant": self.variant.value}
        if self.case is not None:
            out.update(case=self.case.value, r=self.r, theta=self.theta, tau=self.tau)
        return out


def _wrap(angle: float) -> float:
    return float(np.angle(np.exp(1j * angle)))


def _case_parameters(case: NonSmoothCase, x: np.ndarray, tol: float):
    a = np.abs(x)
    ang = np.angle(x)
    if case is NonSmoothCase.RR1:
        r = 0.5 * (a[0] + a[1])
        # when x1 vanishes theta is free; x3 still fixes theta + tau
        theta = ang[0] if a[0] > tol else (ang[2] - ang[1] if a[1] > tol else 0.0)
        tau = ang[2] - theta
    elif case is NonSmoothCase.ONE_RR:
        r = 0.5 * (a[1] + a[2])
        theta = ang[0]
        tau = ang[1] if a[1] > tol else (ang[2] - theta if a[2] > tol else 0.0)
    else:
        r = 0.5 * (a[0] + a[2])
        tau = ang[1]
        theta = ang[0] if a[0] > tol else (ang[2] - tau if a[2] > tol else 0.0)
    return float(min(r, 1.0)), _wrap(theta), _wrap(tau)


def classify_boundary_e(x, tol: Tolerance = DEFAULT_TOL) -> BoundaryClassification:
    """Locate a single point of ``C^3`` relative to the tetrablock.

    Boundary points with ``x1 != conj(x2) x3`` and ``x2 != conj(x1) x3`` are
    smooth.  The remaining boundary points are rotations of ``(r, r, 1)``,
    ``(1, r, r)`` or ``(r, 1, r)``; the returned ``(theta, tau)`` satisfy
    ``rotate_e(theta, tau, x) == canonical`` up to tolerance.  Where the three
    patterns overlap (``r = 1``) the first match in the order RR1, OneRR, R1R
    wins.
    """
    x = check_points(x, 3)
    if x.ndim != 1:
        raise ValueError("classify_boundary_e takes a single point")
    eps = tol.membership_tol
    val = e_defining(x)
    if val < -eps:
        return BoundaryClassification(Variant.INTERIOR)
    if val > eps:
        return BoundaryClassification(Variant.EXTERIOR)
    u = x[0] - np.conj(x[1]) * x[2]
    v = x[1] - np.conj(x[0]) * x[2]
    if abs(u) > eps and abs(v) > eps:
        return BoundaryClassification(Variant.SMOOTH_BOUNDARY)
    # near-corner points can sit O(sqrt(tol)) away from the exact pattern
    match_tol = 10.0 * np.sqrt(eps)
    for case in NonSmoothCase:
        r, theta, tau = _case_parameters(case, x, eps)
        if np.max(np.abs(rotate_e(theta, tau, x) - canonical_point(case, r))) <= match_tol:
            return BoundaryClassification(Variant.NON_SMOOTH_BOUNDARY, case, r, theta, tau)
    raise BoundaryInconsistencyError(
        f"boundary point {x} with a vanishing term fits no non-smooth pattern; "
        "the tolerance may be too tight"
    )


# -- domain objects -----------------------------------------------------------


@dataclass(frozen=True)
class Domain:
    """A bounded domain in ``C^dim``.

    ``defining`` maps an array of points ``(..., dim)`` to real values that are
    negative exactly on the domain.  ``sample(rng, n)`` draws ``n`` domain
    points.  ``radii`` are the radii of a polydisc containing the domain
    (unit radii when omitted).  ``kernel`` names a compiled rasterization
    kernel when one exists.
    """

    name: str
    dim: int
    defining: Callable[[np.ndarray], np.ndarray]
    sample: Callable[[np.random.Generator, int], np.ndarray]
    kernel: tuple[int, float] | None = None
    radii: tuple[float, ...] | None = None

    @property
    def bounds(self) -> np.ndarray:
        return np.ones(self.dim) if self.radii is None else np.asarray(self.radii, dtype=float)

    def contains(self, points) -> np.ndarray:
        return np.asarray(self.defining(points)) < 0


def _uniform_disc(rng: np.random.Generator, shape, radius: float = 1.0) -> np.ndarray:
    r = radius * np.sqrt(rng.uniform(size=shape))
    return r * np.exp(2j * np.pi * rng.uniform(size=shape))


def _rejection(rng, n, dim, inside) -> np.ndarray:
    chunks, have = [], 0
    while have < n:
        cand = _uniform_disc(rng, (max(2 * (n - have), 64), dim))
        cand = cand[inside(cand)]
        chunks.append(cand)
        have += len(cand)
    return np.concatenate(chunks)[:n]


def _e_def_raw(x):
    x1, x2, x3 = x[..., 0], x[..., 1], x[..., 2]
    return np.abs(x1 - np.conj(x2) * x3) + np.abs(x2 - np.conj(x1) * x3) + np.abs(x3) ** 2 - 1.0


def tetrablock() -> Domain:
    return Domain(
        name="E",
        dim=3,
        defining=_e_def_raw,
        sample=lambda rng, n: _rejection(rng, n, 3, lambda c: _e_def_raw(c) < 0),
        kernel=(0, 1.0),
    )


def g2rho(rho: float) -> Domain:
    """``pi(D_rho)``, i.e. the symmetrized bidisc intersected with ``|p| < rho``."""
    rho = check_rho(rho)

    # G_2 cut by |p| < rho; avoids the square root of the root-based margin,
    # which loses half the digits near double roots
    def defining(q):
        q = np.asarray(q, dtype=complex)
        s, p = q[..., 0], q[..., 1]
        g2 = np.abs(s - np.conj(s) * p) + np.abs(p) ** 2 - 1.0
        return g2 if rho == 1.0 else np.maximum(g2, np.abs(p) - rho)

    def sample(rng, n):
        z = _rejection(rng, n, 2, lambda c: np.abs(c[:, 0] * c[:, 1]) < rho)
        return np.stack([z[:, 0] + z[:, 1], z[:, 0] * z[:, 1]], axis=-1)

    name = "G2" if rho == 1.0 else f"G2RHO({rho:g})"
    return Domain(name=name, dim=2, defining=defining, sample=sample, kernel=(1, rho),
                  radii=(1.0 + rho, rho))


def symmetrized_bidisc() -> Domain:
    return g2rho(1.0)


def polydisc(n: int) -> Domain:
    return Domain(
        name=f"D^{n}",
        dim=n,
        defining=lambda x: np.max(np.abs(np.asarray(x, dtype=complex)), axis=-1) - 1.0,
        sample=lambda rng, m: _uniform_disc(rng, (m, n)),
        kernel=(2, 1.0),
    )


def punctured_bidisc(inner: float = 0.3) -> Domain:
    """``D^2`` minus the closed sup-norm ball of radius ``inner``: not C-convex."""

    def defining(z):
        m = np.max(np.abs(np.asarray(z, dtype=complex)), axis=-1)
        return np.maximum(m - 1.0, inner - m)

    return Domain(
        name=f"CONTROL({inner:g})",
        dim=2,
        defining=defining,
        sample=lambda rng, n: _rejection(rng, n, 2, lambda c: defining(c) < 0),
        kernel=(3, inner),
    )
