"""Sets of supporting hyperplanes at boundary points.

For a domain ``D`` and a point ``a``, ``Gamma_D(a)`` is the set of classes
``[c]`` such that the hyperplane ``{y : sum c_j (y_j - a_j) = 0}`` misses
``D``.  Infinite sets are returned as descriptors with deterministic
samplers.

Corner points of ``G_{2,rho}`` use the affine chart ``w = -c / a`` on classes
``[(a, c)]``: the class of ``w`` is ``[(1, -w)]``, i.e. the line
``(s - S) - w (p - P) = 0`` through ``(S, P)``, and ``[(0, 1)]`` is the point
at infinity.  In this chart the supporting set is an intersection of closed
half-planes, one for each ``mu1`` with ``rho < |mu1| < 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .._validation import (
    DEFAULT_TOL,
    DegenerateCaseError,
    PreconditionError,
    Tolerance,
    check_points,
    check_rho,
)
from ..domains import NonSmoothCase, Variant, _roots, classify_boundary_e
from .projective import ProjVec, proj_equal
from .separation import Lift, lift_line_to_e, wirtinger_gradient

DEFAULT_GRID = (64, 128)


def ring_omegas(n: int, seed: int = 0, rmax: float = 1.0, include_zero: bool = False) -> np.ndarray:
    """``n`` deterministic points on concentric rings of the closed disc of radius ``rmax``."""
    if n <= 0:
        return np.zeros(0, dtype=complex)
    out = [0j] if include_zero else []
    m = n - len(out)
    if m > 0:
        n_rings = max(1, int(round(np.sqrt(m))))
        per_ring = -(-m // n_rings)
        offset = np.random.default_rng(seed).uniform(0, 2 * np.pi)
        radii = rmax * np.arange(n_rings, 0, -1) / n_rings
        phases = offset + 2 * np.pi * np.arange(per_ring) / per_ring
        out.extend((radii[:, None] * np.exp(1j * phases[None, :])).ravel()[:m])
    return np.asarray(out, dtype=complex)


def mu1_grid(rho: float, grid=DEFAULT_GRID) -> np.ndarray:
    """Sample of ``rho <= |mu1| <= 1``: geometric moduli times equispaced phases.

    The excluded half-planes depend continuously on ``mu1`` and are open, so
    those of the limiting moduli ``rho`` and 1 are excluded as well.  The
    moduli split ``[rho, 1]`` into ``n_mod`` geometric steps, so a grid whose
    sizes are multiples of a coarser one contains it.
    """
    n_mod, n_phase = grid
    mods = np.geomspace(rho, 1.0, n_mod + 1)
    phases = np.exp(2j * np.pi * np.arange(n_phase) / n_phase)
    return (mods[:, None] * phases[None, :]).ravel()


def _check_corner(lambda1, lambda2, rho, tol):
    lo, hi = sorted([abs(lambda1), abs(lambda2)])
    if abs(lo - rho) > tol or abs(hi - 1.0) > tol:
        raise PreconditionError(f"root moduli ({lo:.6g}, {hi:.6g}) are not (rho, 1) = ({rho:g}, 1)")


def ratio_set_membership(w, lambda1, lambda2, rho, grid=DEFAULT_GRID, tol: float = 1e-9):
    """Whether chart value ``w`` belongs to the supporting set at the corner ``pi(lambda1, lambda2)``.

    For fixed ``mu1`` the lines through the corner and a point ``pi(mu1, mu)``
    with ``|mu1 mu| < rho`` have chart values filling the open half-plane
    ``Re[(w P - P / mu1) / C(mu1)] > 1/2`` with ``P = lambda1 lambda2`` and
    ``C(mu1) = lambda1 + lambda2 - mu1 - P / mu1``; ``C = 0`` collapses it to
    the point ``1 / mu1``.  ``w`` is a member iff it avoids all of them.
    Refining ``grid`` to multiples of its sizes can only shrink the set.
    """
    rho = check_rho(rho)
    _check_corner(lambda1, lambda2, rho, tol)
    w_arr = np.atleast_1d(np.asarray(w, dtype=complex))
    P = lambda1 * lambda2
    S = lambda1 + lambda2
    mu1 = mu1_grid(rho, grid)
    C = S - mu1 - P / mu1
    degenerate = np.abs(C) <= 1e-14 * (abs(S) + 1.0)
    Cn = C[~degenerate]
    mun = mu1[~degenerate]
    # a collapsed family excludes its point only for mu1 inside the annulus
    mods = np.abs(mu1)
    collapsed = mu1[degenerate & (mods > rho * (1 + 1e-12)) & (mods < 1 - 1e-12)]
    out = np.empty(w_arr.shape, dtype=bool)
    for i, wi in enumerate(w_arr):
        z = (wi * P - P / mun) / Cn
        # the tip of the set lies on the limiting boundaries, so allow rounding
        ok = np.all(z.real - 0.5 <= tol * (1.0 + np.abs(z)))
        if ok and collapsed.size:
            ok = bool(np.all(np.abs(wi - 1.0 / collapsed) > tol))
        out[i] = ok
    return bool(out[0]) if np.ndim(w) == 0 else out


def ratio_of(v: ProjVec):
    """Chart value ``-c / a`` of a planar class, or ``None`` for ``[(0, 1)]``."""
    a, c = v.coords
    if abs(a) <= 1e-15 * abs(c):
        return None
    return -c / a


def class_of_ratio(w) -> ProjVec:
    return ProjVec.of(1.0, -w)


def gamma_polydisc_corner_membership(v, n: int | None = None, tol: float = 1e-9) -> bool:
    """Membership in the supporting set of the unit polydisc at ``(1, ..., 1)``.

    True iff some unimodular multiple of ``v`` has all components real and
    non-negative.
    """
    arr = v.array if isinstance(v, ProjVec) else ProjVec.of(v).array
    if n is not None and len(arr) != n:
        raise ValueError(f"expected {n} components")
    k = int(np.argmax(np.abs(arr)))
    rot = arr * np.conj(arr[k]) / abs(arr[k]) / abs(arr[k])
    return bool(np.all(np.abs(rot.imag) <= tol) and np.all(rot.real >= -tol))


def gamma_membership_e_1rr(v, r: float, tol: float = 1e-9) -> bool:
    """Membership in ``{[(-1, -omega, omega)] : |omega| <= 1}``, the supporting set at ``(1, r, r)``."""
    if not 0.0 <= r < 1.0:
        raise ValueError("r must lie in [0, 1)")
    a, b, c = (v if isinstance(v, ProjVec) else ProjVec.of(v)).coords
    return bool(abs(b + c) <= tol and abs(c) <= abs(a) + tol)


# -- descriptors ---------------------------------------------------------------


def _frame_phases(theta: float, tau: float) -> np.ndarray:
    # canonical coefficients c' become c_j = c'_j e^{-i phi_j} in the caller's frame
    return np.exp(-1j * np.array([theta, tau, theta + tau]))


class GammaSet:
    variant: str = ""

    def sample(self, n: int, seed: int = 0) -> list[ProjVec]:
        raise NotImplementedError

    def contains(self, v) -> bool:
        raise NotImplementedError(f"{self.variant} has no exact membership test")

    def describe(self) -> dict:
        return {"variant": self.variant}


@dataclass(frozen=True)
class Singleton(GammaSet):
    member: ProjVec
    variant: str = field(default="Singleton", init=False)

    def sample(self, n: int = 1, seed: int = 0) -> list[ProjVec]:
        return [self.member]

    def contains(self, v, tol: float = 1e-9) -> bool:
        return proj_equal(self.member, v, tol)

    def describe(self) -> dict:
        return {"variant": self.variant, "member": self.member.as_list()}


@dataclass(frozen=True)
class RatioPredicate(GammaSet):
    """Supporting set at a corner of ``G_{2,rho}``, decided in the ``w = -c/a`` chart."""

    lambda1: complex
    lambda2: complex
    rho: float
    grid: tuple[int, int] = DEFAULT_GRID
    variant: str = field(default="RatioPredicate", init=False)

    def contains_ratio(self, w):
        return ratio_set_membership(w, self.lambda1, self.lambda2, self.rho, self.grid)

    def contains(self, v) -> bool:
        w = ratio_of(v if isinstance(v, ProjVec) else ProjVec.of(v))
        return True if w is None else bool(self.contains_ratio(w))

    def member_ratios(self, n: int, seed: int = 0) -> np.ndarray:
        """Up to ``n`` chart values accepted by the grid predicate, from a polar candidate mesh."""
        rng = np.random.default_rng(seed)
        radii = np.geomspace(1e-2, 1e2, 24)
        phases = rng.uniform(0, 2 * np.pi) + 2 * np.pi * np.arange(32) / 32
        cand = np.concatenate([[0j], (radii[:, None] * np.exp(1j * phases[None, :])).ravel()])
        members = cand[self.contains_ratio(cand)]
        if len(members) <= n:
            return members
        return members[np.linspace(0, len(members) - 1, n).round().astype(int)]

    def ray(self) -> tuple[complex, complex]:
        """Origin and direction of the ray of chart values that miss the domain.

        The half-plane boundaries turn about ``1 / lambda2`` as ``mu1`` tends
        to ``lambda2`` and about ``1 / lambda1`` as it tends to ``lambda1``,
        which leaves ``{1/lambda2 + t (1/lambda2 - 1/lambda1) : t >= 0}``.  This
        agrees with line-by-line search on sampled corners.  The grid
        predicate is an outer approximation of it that is thin in the normal
        direction only in the limit of fine grids.
        """
        a, b = 1.0 / complex(self.lambda2), 1.0 / complex(self.lambda1)
        return a, a - b

    def ray_ratios(self, n: int, seed: int = 0) -> np.ndarray:
        """``n`` chart values on the ray, geometrically spread along it."""
        if n <= 0:
            return np.zeros(0, dtype=complex)
        origin, direction = self.ray()
        rng = np.random.default_rng(seed)
        t = np.concatenate([[0.0], np.geomspace(1e-2, 1e2, max(n - 1, 1)) * rng.uniform(0.8, 1.25)])
        return origin + t[:n] * direction

    def sample(self, n: int, seed: int = 0) -> list[ProjVec]:
        """``[(0, 1)]`` followed by classes from the ray."""
        out = [ProjVec.of(0.0, 1.0)]
        if n > 1:
            out.extend(class_of_ratio(w) for w in self.ray_ratios(n - 1, seed))
        return out[:max(n, 1)]

    def describe(self) -> dict:
        return {
            "variant": self.variant,
            "lambda1": [self.lambda1.real, self.lambda1.imag],
            "lambda2": [self.lambda2.real, self.lambda2.imag],
            "rho": self.rho,
            "grid": list(self.grid),
            "chart": "w = -c/a, class [(1, -w)]",
            "ray": [[z.real, z.imag] for z in self.ray()],
        }


@dataclass(frozen=True)
class OmegaFamily(GammaSet):
    """``{[(-1, -omega, omega)] : |omega| <= 1}`` at ``(1, r, r)``; ``swapped`` gives the ``(r, 1, r)`` case."""

    r: float
    swapped: bool = False
    theta: float = 0.0
    tau: float = 0.0
    variant: str = field(default="OmegaFamily", init=False)

    def _to_frame(self, canon: ProjVec) -> ProjVec:
        if self.swapped:
            canon = canon.permuted([1, 0, 2])
        return canon.scaled(_frame_phases(self.theta, self.tau))

    def member(self, omega) -> ProjVec:
        return self._to_frame(ProjVec.of(-1.0, -omega, omega))

    def sample(self, n: int, seed: int = 0) -> list[ProjVec]:
        return [self.member(w) for w in ring_omegas(n, seed, include_zero=True)]

    def contains(self, v, tol: float = 1e-9) -> bool:
        v = v if isinstance(v, ProjVec) else ProjVec.of(v)
        canon = v.scaled(1.0 / _frame_phases(self.theta, self.tau))
        if self.swapped:
            canon = canon.permuted([1, 0, 2])
        return gamma_membership_e_1rr(canon, min(self.r, 1.0 - 1e-15), tol)

    def describe(self) -> dict:
        return {"variant": self.variant, "r": self.r, "swapped": self.swapped, "theta": self.theta, "tau": self.tau}


def _distinguished_g2_members(q) -> list[ProjVec]:
    """Known supporting classes of the symmetrized bidisc at ``pi(lambda1, lambda2)``, both unimodular."""
    lam1, lam2 = _roots(q[0], q[1])
    return [ProjVec.of(0.0, 1.0), ProjVec.of(-complex(lam1), 1.0), ProjVec.of(-complex(lam2), 1.0)]


@dataclass(frozen=True)
class UnionFamily(GammaSet):
    """Supporting set at ``(r, r, 1)`` as a union of lifted planar families.

    Sub-families: ``phi`` and ``psi`` lift supporting classes of
    ``G_{2,|omega|}`` at ``(r + r omega, omega)`` for ``0 < |omega| <= 1``;
    ``polydisc`` embeds supporting classes of the bidisc at ``(r, 1)`` as
    ``[(s, 0, p)]`` and ``[(0, s, p)]``.  Every sub-family contains
    ``[(0, 0, 1)]``.
    """

    r: float
    theta: float = 0.0
    tau: float = 0.0
    grid: tuple[int, int] = (16, 32)
    tol: float = 1e-9
    variant: str = field(default="UnionFamily", init=False)

    @property
    def common_member(self) -> ProjVec:
        return ProjVec.of(0.0, 0.0, 1.0).scaled(_frame_phases(self.theta, self.tau))

    def planar_members(self, omega, index: int = 0) -> list[ProjVec]:
        q = np.array([self.r + self.r * omega, omega])
        if abs(omega) >= 1.0 - 1e-12:
            return _distinguished_g2_members(q)
        g = gamma_g2rho(q, abs(omega), Tolerance(self.tol, self.tol), grid=self.grid)
        if isinstance(g, Singleton):
            return [g.member]
        return g.sample(3, seed=index)

    def _lifted(self, omegas, lift: Lift) -> list[ProjVec]:
        out = []
        for i, w in enumerate(omegas):
            members = self.planar_members(w, i)
            a, c = members[i % len(members)].coords
            out.append(lift_line_to_e(a, c, w, lift))
        return out

    def _polydisc(self, n: int) -> list[ProjVec]:
        if self.r < 1.0 - self.tol:
            planar = [(0.0, 1.0)]
        else:
            t = np.linspace(0.0, np.pi / 2, max(n // 2, 1) + 1)
            planar = list(zip(np.cos(t), np.sin(t)))
        out = []
        for s, p in planar:
            out.append(ProjVec.of(s, 0.0, p))
            out.append(ProjVec.of(0.0, s, p))
        return out[:max(n, 1)]

    def sample_families(self, n: int, seed: int = 0) -> dict[str, list[ProjVec]]:
        n_lift = max(1, (2 * n) // 5)
        omegas = ring_omegas(n_lift, seed)
        phases = _frame_phases(self.theta, self.tau)
        fams = {
            "phi": self._lifted(omegas, Lift.PHI),
            "psi": self._lifted(omegas, Lift.PSI),
            "polydisc": self._polydisc(max(1, n - 2 * n_lift)),
        }
        return {k: [v.scaled(phases) for v in vs] for k, vs in fams.items()}

    def sample(self, n: int, seed: int = 0) -> list[ProjVec]:
        fams = self.sample_families(n, seed)
        return (fams["phi"] + fams["psi"] + fams["polydisc"])[:max(n, 1)]

    def describe(self) -> dict:
        return {"variant": self.variant, "r": self.r, "theta": self.theta, "tau": self.tau}


# -- Gamma computations ----------------------------------------------------------


def gamma_g2rho(q, rho: float, tol: Tolerance = DEFAULT_TOL, grid=DEFAULT_GRID) -> GammaSet:
    """Supporting set of ``G_{2,rho}`` (``rho < 1``) at a boundary point ``q``.

    Writing ``q = pi(lambda1, lambda2)`` with ``|lambda1| <= |lambda2|``:
    ``|lambda1| < rho`` and ``|lambda2| = 1`` gives the root-pencil class
    ``[(-lambda2, 1)]``; ``|lambda1 lambda2| = rho`` with both moduli strictly
    between ``rho`` and 1 gives ``[(0, 1)]``; moduli ``{rho, 1}`` is a corner.
    """
    rho = check_rho(rho)
    if rho >= 1.0:
        raise PreconditionError("gamma_g2rho needs rho < 1")
    q = check_points(q, 2)
    eps = tol.membership_tol
    lam1, lam2 = (complex(z) for z in _roots(q[0], q[1]))
    m1, m2, mp = abs(lam1), abs(lam2), abs(q[1])
    on_boundary = mp <= rho + eps and m2 <= 1 + eps and (m2 >= 1 - eps or mp >= rho - eps)
    if not on_boundary:
        raise PreconditionError(f"point is not on the boundary of G_(2,{rho:g})")
    if m1 < rho - eps and abs(m2 - 1) <= eps:
        return Singleton(ProjVec.of(-lam2, 1.0))
    if abs(mp - rho) <= eps and rho + eps < m1 and m2 < 1 - eps:
        return Singleton(ProjVec.of(0.0, 1.0))
    if abs(m1 - rho) <= eps and abs(m2 - 1) <= eps:
        return RatioPredicate(lam1, lam2, rho, tuple(grid))
    raise DegenerateCaseError(
        f"root moduli ({m1:.12g}, {m2:.12g}) at rho={rho:g} are within tolerance of "
        "both the smooth case [(0,1)] and the corner case"
    )


def gamma_e_point(x, tol: Tolerance = DEFAULT_TOL) -> GammaSet:
    """Supporting set of the tetrablock at a boundary point, in the caller's frame."""
    x = check_points(x, 3)
    cls = classify_boundary_e(x, tol)
    if cls.variant in (Variant.INTERIOR, Variant.EXTERIOR):
        raise PreconditionError(f"point is {cls.variant.value.lower()}, not on the boundary")
    if cls.variant is Variant.SMOOTH_BOUNDARY:
        return Singleton(ProjVec.of(wirtinger_gradient(x)))
    if cls.case is NonSmoothCase.RR1:
        return UnionFamily(cls.r, cls.theta, cls.tau, tol=tol.membership_tol)
    return OmegaFamily(cls.r, cls.case is NonSmoothCase.R1R, cls.theta, cls.tau)
