"""The map family relating the tetrablock to the symmetrized bidisc.

``phi(omega, x) = (x1 + omega x2, omega x3)`` sends the tetrablock into
``G_{2,|omega|}``; ``psi = phi o sigma`` with ``sigma`` swapping the first two
coordinates; ``pi(z1, z2) = (z1 + z2, z1 z2)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._validation import (
    DomainError,
    PreconditionError,
    as_scalar,
    check_omega,
    check_points,
)
from .domains import e_defining, g2_defining, in_g2rho

__all__ = [
    "Lemma1Report",
    "sigma_swap",
    "phi",
    "psi",
    "pi_symmetrize",
    "worst_omega",
    "unimodular_grid",
    "closed_disc_samples",
    "equivalence_flags",
    "lemma1_equivalence_check",
    "preimage_phi",
]


def sigma_swap(x):
    x = check_points(x, 3)
    return x[..., [1, 0, 2]]


def phi(omega, x):
    """``(x1 + omega x2, omega x3)``; ``omega`` broadcasts against the point axes."""
    x = check_points(x, 3)
    omega = np.asarray(omega, dtype=complex)
    return np.stack([x[..., 0] + omega * x[..., 1], omega * x[..., 2]], axis=-1)


def psi(omega, x):
    return phi(omega, sigma_swap(x))


def pi_symmetrize(z):
    z = check_points(z, 2)
    return np.stack([z[..., 0] + z[..., 1], z[..., 0] * z[..., 1]], axis=-1)


def worst_omega(x):
    """Unimodular phase at which ``g2_defining(phi(omega, x))`` is largest.

    With ``u = x1 - conj(x2) x3`` and ``v = x2 - conj(x1) x3`` the image
    satisfies ``s - conj(s) p = u + omega v`` for ``|omega| = 1``; aligning the
    phases of ``u`` and ``omega v`` gives ``|u| + |v|``, so the returned phase
    makes ``g2_defining(phi(omega, x)) == e_defining(x)``.  Returns 1 when
    ``u`` or ``v`` vanishes, where every phase is extremal.
    """
    x = check_points(x, 3)
    u = x[..., 0] - np.conj(x[..., 1]) * x[..., 2]
    v = x[..., 1] - np.conj(x[..., 0]) * x[..., 2]
    degenerate = (u == 0) | (v == 0)
    # phases via angle: dividing by a subnormal modulus overflows
    w = np.where(degenerate, 1.0 + 0j, np.exp(1j * (np.angle(u) - np.angle(v))))
    return as_scalar(w)


def unimodular_grid(n: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(n) / n)


def closed_disc_samples(n: int, rng: np.random.Generator) -> np.ndarray:
    """Area-uniform points of the closed unit disc: ``sqrt(t) e^{2 pi i theta}``."""
    t = rng.uniform(size=n)
    return np.sqrt(t) * np.exp(2j * np.pi * rng.uniform(size=n))


@dataclass(frozen=True)
class Lemma1Report:
    direct: bool
    grid_all_unimodular: bool
    sampled_closed_disc: bool
    margin: float

    @property
    def consistent(self) -> bool:
        return self.direct == self.grid_all_unimodular == self.sampled_closed_disc


def _all_images_in_g2(x: np.ndarray, omegas: np.ndarray, chunk: int = 256) -> np.ndarray:
    out = np.empty(x.shape[0], dtype=bool)
    for start in range(0, x.shape[0], chunk):
        xs = x[start:start + chunk, None, :]
        vals = g2_defining(phi(omegas[None, :], xs))
        out[start:start + chunk] = np.all(vals < 0, axis=1)
    return out


def equivalence_flags(x, grid_n: int = 3600, sample_n: int = 1000, seed: int = 0):
    """Batch form of :func:`lemma1_equivalence_check`.

    Returns ``(direct, grid_all_unimodular, sampled_closed_disc, margin)`` as
    arrays over the leading axis of ``x``.  The closed-disc test uses the
    unimodular grid together with ``sample_n`` area-uniform interior phases,
    since the unit circle is part of the closed disc.
    """
    if grid_n < 8:
        raise ValueError("grid_n must be at least 8")
    x = check_points(x, 3).reshape(-1, 3)
    rng = np.random.default_rng(seed)
    grid = unimodular_grid(grid_n)
    disc = closed_disc_samples(sample_n, rng)
    margin = np.asarray(e_defining(x))
    direct = margin < 0
    on_grid = _all_images_in_g2(x, grid)
    in_disc = on_grid & _all_images_in_g2(x, disc)
    return direct, on_grid, in_disc, margin


def lemma1_equivalence_check(x, grid_n: int = 3600, sample_n: int = 1000, seed: int = 0) -> Lemma1Report:
    """Evaluate the three equivalent tetrablock membership criteria at one point."""
    direct, grid, disc, margin = equivalence_flags(np.asarray(x)[None, :], grid_n, sample_n, seed)
    return Lemma1Report(bool(direct[0]), bool(grid[0]), bool(disc[0]), float(margin[0]))


def preimage_phi(q, omega):
    """Point of the tetrablock mapped onto ``q`` by ``phi(omega, .)``.

    Requires ``omega != 0`` and ``q`` in ``G_{2,|omega|}``; the construction is

        x1 = (s - conj(s) p) / (1 - |p|^2),  x2 = conj(x1) p / omega,  x3 = p / omega.
    """
    omega = check_omega(omega)
    if omega == 0:
        raise DomainError("omega must be non-zero")
    q = check_points(q, 2)
    if not np.all(in_g2rho(q, min(abs(omega), 1.0))):
        raise PreconditionError(f"point not in G_(2,{abs(omega):g})")
    s, p = q[..., 0], q[..., 1]
    x1 = (s - np.conj(s) * p) / (1.0 - np.abs(p) ** 2)
    x3 = p / omega
    return np.stack([x1, np.conj(x1) * x3, x3], axis=-1)
