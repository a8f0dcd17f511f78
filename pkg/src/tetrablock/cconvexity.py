"""Numerical audit of C-convexity through complex-line slices.

A domain is C-convex when every complex affine line meets it in a connected
and simply connected set (or not at all).  Each line ``zeta -> base + zeta dir``
is rasterized over a square window of the ``zeta`` plane large enough to
contain the whole slice; the slice's set pixels are labelled with
4-connectivity and the complement with 8-connectivity, and complement
components not touching the window border are holes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage

from . import _kernels
from ._validation import DEFAULT_TOL, PreconditionError, Tolerance, check_points
from .domains import Domain, Variant, canonical_point, classify_boundary_e, tetrablock
from .hyperplanes import (
    AffineHyperplane,
    UnionFamily,
    gamma_e_point,
    hyperplane_misses_domain,
    proj_equal,
)

_FOUR = ndimage.generate_binary_structure(2, 1)
_EIGHT = ndimage.generate_binary_structure(2, 2)

DEFAULT_MIN_BLOB = 4


@dataclass(frozen=True)
class AffineLine:
    """``{base + zeta dir : zeta in C}`` with ``max_j |dir_j| = 1``."""

    base: tuple[complex, ...]
    dir: tuple[complex, ...]

    def __post_init__(self):
        base = check_points(self.base, len(self.base))
        d = check_points(self.dir, len(base))
        top = np.max(np.abs(d))
        if top == 0:
            raise ValueError("line direction must be non-zero")
        object.__setattr__(self, "base", tuple(complex(c) for c in base))
        object.__setattr__(self, "dir", tuple(complex(c) for c in d / top))

    @property
    def dim(self) -> int:
        return len(self.base)

    def as_dict(self) -> dict:
        return {
            "base": [[c.real, c.imag] for c in self.base],
            "dir": [[c.real, c.imag] for c in self.dir],
        }


@dataclass(frozen=True, eq=False)
class SliceRaster:
    line: AffineLine
    halfwidth: float
    resolution: int
    bits: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class SliceTopology:
    component_count: int
    hole_count: int
    empty: bool

    def as_dict(self) -> dict:
        return {"component_count": self.component_count, "hole_count": self.hole_count, "empty": self.empty}


def raster_slice(domain: Domain, line: AffineLine, resolution: int = 256) -> SliceRaster:
    """Pixel-center membership of ``base + zeta dir`` over ``|Re zeta|, |Im zeta| <= halfwidth``.

    With ``R`` the largest bounding radius of the domain (1 for domains in
    the unit polydisc), ``halfwidth = (R + max |base_j|) / max |dir_j|``.
    Outside the window some coordinate has modulus above ``R``, so the window
    covers the whole slice.  Row index follows ``Im zeta`` and column index
    ``Re zeta``, both ascending.
    """
    if resolution < 16:
        raise ValueError("resolution must be at least 16")
    if line.dim != domain.dim:
        raise ValueError(f"line in C^{line.dim} but domain in C^{domain.dim}")
    base = np.asarray(line.base, dtype=complex)
    d = np.asarray(line.dir, dtype=complex)
    radii = domain.bounds
    halfwidth = (np.max(radii) + np.max(np.abs(base))) / np.max(np.abs(d))
    if domain.kernel is not None:
        kind, param = domain.kernel
        bits = _kernels.raster(kind, float(param), radii, base, d, float(halfwidth), int(resolution))
    else:
        axis = -halfwidth + (np.arange(resolution) + 0.5) * (2.0 * halfwidth / resolution)
        zeta = axis[None, :] + 1j * axis[:, None]
        pts = base + zeta[..., None] * d
        bits = domain.contains(pts).astype(np.uint8)
    return SliceRaster(line, float(halfwidth), int(resolution), bits.astype(bool))


def _crop(bits: np.ndarray) -> np.ndarray:
    # bounding box of the set plus a one-pixel unset frame; labels are unchanged by the crop
    rows = np.flatnonzero(bits.any(axis=1))
    cols = np.flatnonzero(bits.any(axis=0))
    return np.pad(bits[rows[0]:rows[-1] + 1, cols[0]:cols[-1] + 1], 1)


def _blob_sizes(bits: np.ndarray):
    """Sizes of 4-connected set components and of holes."""
    if not bits.any():
        return np.zeros(0, dtype=int), np.zeros(0, dtype=int)
    bits = _crop(bits)
    labels, n = ndimage.label(bits, structure=_FOUR)
    comp = np.bincount(labels.ravel(), minlength=n + 1)[1:]
    clabels, m = ndimage.label(~bits, structure=_EIGHT)
    # after padding the frame is one outer component
    sizes = np.bincount(clabels.ravel(), minlength=m + 1)
    inner = np.setdiff1d(np.arange(1, m + 1), [clabels[0, 0]])
    return comp, sizes[inner]


def slice_topology(r: SliceRaster, min_size: int = 1) -> SliceTopology:
    """Component and hole counts, ignoring blobs smaller than ``min_size`` pixels."""
    comp, holes = _blob_sizes(r.bits)
    return SliceTopology(int(np.sum(comp >= min_size)), int(np.sum(holes >= min_size)), comp.size == 0)


def _isolated(domain: Domain, r: SliceRaster, min_blob: int, refine: int = 8, max_side: int = 2048) -> int:
    """Pieces of the slice, besides the largest, with the area of ``min_blob`` pixels.

    Pixels touching at a corner belong to the same piece.  When the raster
    shows a second piece, the bounding box of the slice is sampled again with
    ``refine`` times finer pixels and areas are measured there: a filament
    narrower than a pixel breaks into fragments under pixel-center sampling,
    and the fragments shrink under refinement while a genuine second piece
    keeps its area.
    """
    merged, n = ndimage.label(r.bits, structure=_EIGHT)
    if n < 2:
        return 0
    sizes = np.sort(np.bincount(merged.ravel())[1:])
    if sizes[:-1].sum() < min_blob:
        return 0
    rows = np.flatnonzero(r.bits.any(axis=1))
    cols = np.flatnonzero(r.bits.any(axis=0))
    side = max(rows[-1] - rows[0], cols[-1] - cols[0]) + 3
    k = max(1, min(refine, max_side // side))
    step = 2.0 * r.halfwidth / r.resolution
    fine = step / k

    def axis(idx):
        lo = -r.halfwidth + (idx[0] - 1) * step
        return lo + (np.arange((idx[-1] - idx[0] + 3) * k) + 0.5) * fine

    zeta = axis(cols)[None, :] + 1j * axis(rows)[:, None]
    pts = np.asarray(r.line.base) + zeta[..., None] * np.asarray(r.line.dir)
    labels, m = ndimage.label(domain.contains(pts), structure=_EIGHT)
    if m < 2:
        return 0
    areas = np.sort(np.bincount(labels.ravel())[1:])[:-1]
    return int(np.sum(areas >= min_blob * k * k))


def check_line(domain: Domain, line: AffineLine, resolution: int = 256, min_blob: int = DEFAULT_MIN_BLOB):
    """Return ``(passed, topology)`` for one slice.

    A slice fails when it has a hole of at least ``min_blob`` pixels, or a
    second piece with the area of at least ``min_blob`` pixels (see
    ``_isolated``).  The reported topology counts every
    4-connected blob.
    """
    r = raster_slice(domain, line, resolution)
    comp, holes = _blob_sizes(r.bits)
    topo = SliceTopology(int(comp.size), int(holes.size), comp.size == 0)
    if topo.empty:
        return True, topo
    passed = not np.any(holes >= min_blob) and _isolated(domain, r, min_blob) == 0
    return bool(passed), topo


def random_line(dim: int, seed: int, index: int, radii=None) -> AffineLine:
    """Line number ``index`` of the ensemble drawn from ``seed``.

    The base is uniform in the polydisc with the given radii (unit by
    default), the direction uniform on the unit sphere of ``C^dim``.  Each
    line has its own generator so the ensemble does not depend on evaluation
    order.
    """
    rng = np.random.default_rng([seed, index])
    radii = np.ones(dim) if radii is None else np.asarray(radii, dtype=float)
    base = radii * np.sqrt(rng.uniform(size=dim)) * np.exp(2j * np.pi * rng.uniform(size=dim))
    g = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return AffineLine(tuple(base), tuple(g / np.linalg.norm(g)))


@dataclass
class ScanReport:
    domain: str
    lines_tested: int
    seed: int
    resolution: int
    min_blob: int
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "domain": self.domain,
            "lines_tested": self.lines_tested,
            "seed": self.seed,
            "resolution": self.resolution,
            "min_blob": self.min_blob,
            "violation_count": len(self.violations),
            "violations": [
                {"index": i, "line": line.as_dict(), "topology": topo.as_dict()}
                for i, line, topo in self.violations
            ],
        }


def cconvexity_scan(
    domain: Domain,
    n_lines: int = 10000,
    seed: int = 42,
    resolution: int = 256,
    min_blob: int = DEFAULT_MIN_BLOB,
) -> ScanReport:
    """Check ``n_lines`` random complex lines and collect every failing slice."""
    if n_lines < 1:
        raise ValueError("n_lines must be at least 1")
    report = ScanReport(domain.name, n_lines, seed, resolution, min_blob)
    for i in range(n_lines):
        line = random_line(domain.dim, seed, i, domain.bounds)
        passed, topo = check_line(domain, line, resolution, min_blob)
        if not passed:
            report.violations.append((i, line, topo))
    return report


# -- probing supporting sets ------------------------------------------------------


@dataclass
class GammaProbeReport:
    case: str
    r: float
    n_sampled: int
    n_missing: int
    common_member_ok: bool | None
    family_counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.n_missing == self.n_sampled and self.common_member_ok is not False

    def as_dict(self) -> dict:
        return {
            "case": self.case,
            "r": self.r,
            "n_sampled": self.n_sampled,
            "n_missing": self.n_missing,
            "common_member_ok": self.common_member_ok,
            "family_counts": self.family_counts,
            "failures": [v.as_list() for v in self.failures],
            "passed": self.passed,
        }


def gamma_probe(x, n_samples: int = 200, seed: int = 0, *, miss_samples: int = 20000,
                tol: Tolerance = DEFAULT_TOL) -> GammaProbeReport:
    """Sample supporting hyperplanes at a canonical non-smooth point and check each misses the tetrablock.

    At ``(r, r, 1)`` also checks that ``[(0, 0, 1)]`` belongs to every
    sub-family of the union, which makes the union connected.
    """
    x = check_points(x, 3)
    cls = classify_boundary_e(x, tol)
    if cls.variant is not Variant.NON_SMOOTH_BOUNDARY:
        raise PreconditionError(f"expected a non-smooth boundary point, got {cls.variant.value}")
    if np.max(np.abs(x - canonical_point(cls.case, cls.r))) > 10 * tol.membership_tol:
        raise PreconditionError("point is not in canonical form (r,r,1), (1,r,r) or (r,1,r)")
    gset = gamma_e_point(x, tol)
    domain = tetrablock()
    if isinstance(gset, UnionFamily):
        fams = gset.sample_families(n_samples, seed)
        common = gset.common_member
        common_ok = all(any(proj_equal(common, v, 1e-9) for v in vs) for vs in fams.values())
        members = [v for vs in fams.values() for v in vs]
        counts = {k: len(vs) for k, vs in fams.items()}
        members.append(common)
    else:
        members = gset.sample(n_samples, seed)
        common_ok = None
        counts = {gset.variant: len(members)}
    n_missing, failures = 0, []
    for i, v in enumerate(members):
        res = hyperplane_misses_domain(AffineHyperplane.through(x, v), domain, miss_samples, seed=seed + i)
        if res.misses:
            n_missing += 1
        else:
            failures.append(v)
    return GammaProbeReport(cls.case.value, cls.r, len(members), n_missing, common_ok, counts, failures)


__all__ = [
    "AffineLine",
    "GammaProbeReport",
    "ScanReport",
    "SliceRaster",
    "SliceTopology",
    "cconvexity_scan",
    "check_line",
    "gamma_probe",
    "random_line",
    "raster_slice",
    "slice_topology",
]
