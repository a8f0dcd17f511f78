"""Numerical search for domain points lying on a complex hyperplane.

The search is evidence, not proof: a reported miss means no witness was found
within the sampling budget and local refinement.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..domains import Domain
from .projective import AffineHyperplane


@dataclass(frozen=True)
class MissResult:
    misses: bool
    witness: np.ndarray | None
    min_defining: float
    n_evaluated: int

    def as_dict(self) -> dict:
        out = {"misses": self.misses, "min_defining": self.min_defining, "n_evaluated": self.n_evaluated}
        if self.witness is not None:
            out["witness"] = [[c.real, c.imag] for c in self.witness]
        return out


def _null_basis(a: np.ndarray) -> np.ndarray:
    # columns span {v : sum a_j v_j = 0}, orthonormal for the Hermitian product
    _, _, vh = np.linalg.svd(a[None, :])
    return vh[1:].conj().T


def _ball(rng: np.random.Generator, n: int, cdim: int, radius: float) -> np.ndarray:
    g = rng.standard_normal((n, 2 * cdim))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    g *= radius * rng.uniform(size=(n, 1)) ** (1.0 / (2 * cdim))
    return g[:, :cdim] + 1j * g[:, cdim:]


def hyperplane_misses_domain(
    h: AffineHyperplane,
    domain: Domain,
    n: int = 20000,
    seed: int = 0,
    *,
    sampler=None,
    depth: float = 1e-12,
    refine_seeds: int = 4,
    refine_iters: int = 40,
    refine_batch: int = 32,
) -> MissResult:
    """Look for a point of ``domain`` on the hyperplane ``h``.

    Half of the budget samples the disc of ``h`` inside the ball containing
    the bounding polydisc of the domain, the other half
    projects domain samples from ``sampler`` (default ``domain.sample``) onto
    ``h``.  The best candidates are then improved by a shrinking random
    search.  A witness must have defining value below ``-depth``.
    """
    if h.dim != domain.dim:
        raise ValueError(f"hyperplane in C^{h.dim} but domain in C^{domain.dim}")
    rng = np.random.default_rng(seed)
    sampler = domain.sample if sampler is None else sampler
    a = np.asarray(h.coeffs, dtype=complex)
    b = np.asarray(h.base, dtype=complex)
    na2 = float(np.vdot(a, a).real)
    center = np.conj(a) * (a @ b) / na2
    r2 = float(np.sum(domain.bounds ** 2)) - float(np.vdot(center, center).real)
    if r2 <= 0:
        return MissResult(True, None, float("inf"), 0)
    radius = np.sqrt(r2)
    basis = _null_basis(a)
    cdim = domain.dim - 1

    n_ball = n // 2
    t_ball = _ball(rng, n_ball, cdim, radius)
    pts = sampler(rng, n - n_ball)
    t_proj = (pts - center) @ basis.conj()
    t = np.concatenate([t_ball, t_proj])
    vals = np.asarray(domain.defining(center + t @ basis.T))
    evaluated = len(t)

    order = np.argsort(vals)[:refine_seeds]
    seeds, best = t[order], vals[order]
    scale = 0.25 * radius
    for _ in range(refine_iters):
        if best[0] < -depth:
            break
        step = _ball(rng, refine_batch * len(seeds), cdim, scale).reshape(len(seeds), refine_batch, cdim)
        cand = seeds[:, None, :] + step
        cv = np.asarray(domain.defining(center + cand @ basis.T))
        evaluated += cv.size
        j = np.argmin(cv, axis=1)
        cbest = cv[np.arange(len(seeds)), j]
        improved = cbest < best
        seeds[improved] = cand[np.arange(len(seeds)), j][improved]
        best[improved] = cbest[improved]
        idx = np.argsort(best)
        seeds, best = seeds[idx], best[idx]
        scale *= 0.7

    min_val = float(best[0])
    if min_val < -depth:
        witness = center + seeds[0] @ basis.T
        return MissResult(False, witness, min_val, evaluated)
    return MissResult(True, None, min_val, evaluated)
