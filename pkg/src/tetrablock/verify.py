"""Verification suites: randomized checks of the geometric results.

Each suite returns a :class:`SuiteResult` made of named checks with their
measured statistics.  Randomness derives from ``(seed, suite index)`` only,
so a suite gives the same report whether it runs alone or inside ``all``.
Default sizes are the acceptance sizes; :class:`Sizes` overrides them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from ._validation import DEFAULT_TOL, Tolerance
from .cconvexity import cconvexity_scan, gamma_probe
from .domains import (
    Domain,
    Variant,
    _roots,
    classify_boundary_e,
    e_defining,
    g2_defining,
    g2rho,
    g2rho_defining,
    in_e,
    in_g2,
    in_g2rho,
    polydisc,
    punctured_bidisc,
    tetrablock,
)
from .hyperplanes import (
    AffineHyperplane,
    Lift,
    ProjVec,
    RatioPredicate,
    Singleton,
    class_of_ratio,
    gamma_g2rho,
    gamma_membership_e_1rr,
    hyperplane_misses_domain,
    lift_line_to_e,
    mu1_grid,
    proj_equal,
    ratio_of,
    separating_hyperplane_e,
    separating_line_g2,
    tangent_hyperplane_smooth,
    wirtinger_gradient,
)
from .maps import equivalence_flags, phi, preimage_phi, sigma_swap, unimodular_grid, worst_omega

SUITES = ("lemma1", "prop31", "lemma2", "lemma3", "thm1", "thm2", "corollary")


@dataclass(frozen=True)
class Sizes:
    """Sample counts per suite; the defaults are the acceptance sizes."""

    lemma1_points: int = 10_000
    lemma1_phases: int = 3600
    lemma1_disc: int = 1000
    prop31_points: int = 10_000
    lemma2_points: int = 1000
    lemma2_miss: int = 100_000
    lemma3_trials: int = 1000
    thm1_members: int = 200
    thm1_gradient_points: int = 100
    thm2_points: int = 100
    thm2_perturbed: int = 50
    thm2_midpoints: int = 1000
    scan_lines: int = 10_000
    control_lines: int = 1000
    probe_samples: int = 50
    miss_samples: int = 20_000
    resolution: int = 256

    def scaled_samples(self, n: int) -> "Sizes":
        """Set the leading sample count of every suite to ``n``."""
        return replace(
            self,
            lemma1_points=n,
            prop31_points=n,
            lemma2_points=n,
            lemma3_trials=n,
            thm1_members=n,
            thm1_gradient_points=n,
            thm2_points=n,
            thm2_midpoints=n,
            probe_samples=n,
        )

    def with_lines(self, n: int) -> "Sizes":
        return replace(self, scan_lines=n, control_lines=max(1, min(n, self.control_lines)))


@dataclass
class Check:
    name: str
    passed: bool
    stats: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": bool(self.passed), **self.stats}


@dataclass
class SuiteResult:
    suite: str
    checks: list[Check] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed, **stats) -> None:
        self.checks.append(Check(name, bool(passed), stats))

    def as_dict(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "checks": [c.as_dict() for c in self.checks]}


# -- shared samplers ----------------------------------------------------------------


def _polydisc(rng: np.random.Generator, n: int, dim: int, radius=1.0) -> np.ndarray:
    radius = np.broadcast_to(np.asarray(radius, dtype=float), (dim,))
    mod = np.sqrt(rng.uniform(size=(n, dim))) * radius
    return mod * np.exp(2j * np.pi * rng.uniform(size=(n, dim)))


def _filtered(rng, n: int, draw: Callable, keep: Callable) -> np.ndarray:
    chunks, have = [], 0
    while have < n:
        cand = draw(rng, max(2 * (n - have), 256))
        cand = cand[keep(cand)]
        chunks.append(cand)
        have += len(cand)
    return np.concatenate(chunks)[:n]


def boundary_points_e(rng: np.random.Generator, n: int, iters: int = 80) -> np.ndarray:
    """Points of the tetrablock boundary by bisection along rays from the origin.

    Each ray direction is uniform in the unit polydisc; the ray leaves the
    tetrablock before it leaves the polydisc.  The returned points are the
    last ones found inside (or on) the boundary.
    """
    d = _polydisc(rng, n, 3)
    d /= np.max(np.abs(d), axis=1, keepdims=True)
    lo, hi = np.zeros(n), np.ones(n)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        inside = e_defining(mid[:, None] * d) <= 0
        lo = np.where(inside, mid, lo)
        hi = np.where(inside, hi, mid)
    return lo[:, None] * d


def _pool_sampler(pool: np.ndarray) -> Callable:
    """Domain sampler drawing with replacement from a pre-drawn pool."""

    def sample(rng, n):
        return pool[rng.integers(0, len(pool), n)]

    return sample


def _rng(seed: int, suite: str) -> np.random.Generator:
    return np.random.default_rng([seed, SUITES.index(suite)])


def _misses(h: AffineHyperplane, domain: Domain, n: int, seed: int, sampler=None) -> bool:
    return hyperplane_misses_domain(h, domain, n, seed, sampler=sampler).misses


# -- suites -------------------------------------------------------------------------


def suite_lemma1(seed: int, sizes: Sizes, tol: Tolerance) -> SuiteResult:
    """Three equivalent membership criteria, the extremal phase identity and the image containment."""
    res = SuiteResult("lemma1")
    rng = _rng(seed, "lemma1")
    n = sizes.lemma1_points

    x = _filtered(rng, n, lambda g, m: _polydisc(g, m, 3, 2.0), lambda c: np.abs(e_defining(c)) > 1e-6)
    direct, grid, disc, margin = equivalence_flags(x, sizes.lemma1_phases, sizes.lemma1_disc, seed)
    exceptions = int(np.sum((direct != grid) | (direct != disc)))
    res.add("criteria_agree", exceptions == 0, points=n, inside=int(direct.sum()),
            phases=sizes.lemma1_phases, disc_samples=sizes.lemma1_disc, exceptions=exceptions)

    y = _polydisc(rng, n, 3, 2.0)
    omega = worst_omega(y)
    analytic = g2_defining(phi(omega, y))
    identity_err = float(np.max(np.abs(analytic - e_defining(y))))
    phases = unimodular_grid(sizes.lemma1_phases)
    excess = -np.inf
    for start in range(0, n, 256):
        ys = y[start:start + 256]
        grid_max = np.max(g2_defining(phi(phases[None, :], ys[:, None, :])), axis=1)
        excess = max(excess, float(np.max(grid_max - analytic[start:start + 256])))
    res.add("extremal_identity", identity_err <= 1e-12, points=n, max_abs_error=identity_err)
    res.add("grid_below_extremal", excess <= 1e-9, points=n, max_excess=excess)

    inner = tetrablock().sample(rng, n)
    t = rng.uniform(size=n)
    w = np.sqrt(t) * np.exp(2j * np.pi * rng.uniform(size=n))
    q = phi(w, inner)
    cut = np.array([in_g2rho(qi, min(max(abs(wi), 1e-12), 1.0)) for qi, wi in zip(q, w)], dtype=bool)
    res.add("image_containment", bool(np.all(cut) and np.all(in_g2(q))), points=n,
            outside_g2rho=int(np.sum(~cut)), outside_g2=int(np.sum(~in_g2(q))))
    return res


def _fiber_membership(q: np.ndarray, rho: float) -> np.ndarray:
    """Membership in ``pi(D_rho)`` from the eigenvalues of companion matrices.

    The fiber of ``pi`` over ``(s, p)`` is the root pair of ``z^2 - s z + p``,
    here the spectrum of ``[[s, -p], [1, 0]]``; ``q`` is in the image iff the
    pair lies in ``D_rho``.
    """
    m = np.zeros((len(q), 2, 2), dtype=complex)
    m[:, 0, 0] = q[:, 0]
    m[:, 0, 1] = -q[:, 1]
    m[:, 1, 0] = 1.0
    z = np.linalg.eigvals(m)
    return (np.max(np.abs(z), axis=1) < 1.0) & (np.abs(z[:, 0] * z[:, 1]) < rho)


def suite_prop31(seed: int, sizes: Sizes, tol: Tolerance) -> SuiteResult:
    """Preimages under phi, the closed form of ``G_{2,rho}`` against a fiber oracle, and ``rho = 1``."""
    res = SuiteResult("prop31")
    rng = _rng(seed, "prop31")
    n = sizes.prop31_points
    for rho in (0.1, 0.5, 0.9, 1.0):
        z = _filtered(rng, n, lambda g, m: _polydisc(g, m, 2), lambda c: np.abs(c[:, 0] * c[:, 1]) < rho)
        q = np.stack([z[:, 0] + z[:, 1], z[:, 0] * z[:, 1]], axis=-1)
        omega = rho * np.exp(2j * np.pi * rng.uniform(size=n))
        failures, worst = 0, 0.0
        for qi, wi in zip(q, omega):
            try:
                x = preimage_phi(qi, wi)
            except ValueError:
                failures += 1
                continue
            err = float(np.max(np.abs(phi(wi, x) - qi)))
            worst = max(worst, err)
            failures += int(not in_e(x) or err > 1e-12)
        res.add(f"preimage_rho_{rho:g}", failures == 0, points=n, failures=failures, max_roundtrip=worst)

    for rho in (0.25, 0.5, 0.75):
        radii = 1.05 * np.array([1.0 + rho, rho])
        q = _filtered(rng, n, lambda g, m: _polydisc(g, m, 2, radii),
                      lambda c: np.abs(g2rho_defining(c, rho)) > 1e-6)
        closed = in_g2rho(q, rho)
        oracle = _fiber_membership(q, rho)
        disagree = int(np.sum(closed != oracle))
        res.add(f"closed_form_rho_{rho:g}", disagree == 0, points=n, inside=int(closed.sum()),
                disagreements=disagree)

    q = _polydisc(rng, 10 * n, 2, 2.0)
    disagree = int(np.sum(in_g2rho(q, 1.0) != in_g2(q)))
    res.add("rho_one_is_g2", disagree == 0, points=10 * n, disagreements=disagree)
    return res


def suite_lemma2(seed: int, sizes: Sizes, tol: Tolerance) -> SuiteResult:
    """Separating hyperplanes at exterior points contain the point and miss the tetrablock."""
    res = SuiteResult("lemma2")
    rng = _rng(seed, "lemma2")
    n = sizes.lemma2_points
    x = _filtered(rng, n, lambda g, m: _polydisc(g, m, 3, 1.25), lambda c: e_defining(c) > 1e-3)
    E = tetrablock()
    sampler = _pool_sampler(E.sample(rng, 200_000))
    worst, failures = 0.0, 0
    for i, xi in enumerate(x):
        h = separating_hyperplane_e(xi)
        omega = worst_omega(xi)
        s, p = xi[0] + omega * xi[1], omega * xi[2]
        _, mu = _roots(s, p)
        # the hyperplane is -mu y1 - omega mu y2 + omega y3 = -mu^2, which holds at x iff mu is a root
        resid = abs(h.constant + mu * mu)
        worst = max(worst, float(resid))
        ok = resid <= 1e-12 and _misses(h, E, sizes.lemma2_miss, seed + i, sampler)
        failures += int(not ok)
    res.add("separating_hyperplanes", failures == 0, points=n, miss_samples=sizes.lemma2_miss,
            max_residual=worst, failures=failures)

    q = np.array([[2.0, 1.0], [3.0, 2.0], [0.0, 4.0]], dtype=complex)
    q = np.concatenate([q, _filtered(rng, 200, lambda g, m: _polydisc(g, m, 2, [2.5, 1.5]),
                                     lambda c: g2_defining(c) > 1e-3)])
    z = _polydisc(rng, 10 * sizes.lemma2_points, 2)
    inner = np.stack([z[:, 0] + z[:, 1], z[:, 0] * z[:, 1]], axis=-1)
    bad = 0
    for qi in q:
        cls, d = separating_line_g2(qi)
        a = cls.array
        on_line = np.abs(inner @ a - d) <= 1e-10
        bad += int(abs(qi @ a - d) > 1e-12 or on_line.any())
    res.add("planar_separators", bad == 0, points=len(q), g2_samples=len(z), failures=bad)
    return res


def suite_lemma3(seed: int, sizes: Sizes, tol: Tolerance) -> SuiteResult:
    """Lifted hyperplanes miss the tetrablock exactly when the planar lines miss ``G_{2,|omega|}``."""
    res = SuiteResult("lemma3")
    rng = _rng(seed, "lemma3")
    n = sizes.lemma3_trials
    x = boundary_points_e(rng, n)
    E = tetrablock()
    e_sampler = _pool_sampler(E.sample(rng, 100_000))
    domains: dict[float, Domain] = {}
    disagree, both_miss, both_hit = 0, 0, 0
    for i, xi in enumerate(x):
        variant = Lift.PHI if i % 2 == 0 else Lift.PSI
        base = xi if variant is Lift.PHI else sigma_swap(xi)
        kind = i % 3
        if kind == 2:
            omega = complex(np.sqrt(rng.uniform(0.01, 1.0)) * np.exp(2j * np.pi * rng.uniform()))
        else:
            omega = complex(worst_omega(base))
        q = phi(omega, base)
        if kind == 0:
            a, c = separating_line_g2(q, check=False)[0].coords
        elif kind == 1:
            a, c = separating_line_g2(q, check=False)[0].array + 0.3 * (rng.standard_normal(2) + 1j * rng.standard_normal(2))
        else:
            a, c = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        rho = round(abs(omega), 12)
        dom = domains.setdefault(rho, g2rho(min(rho, 1.0)))
        planar = _misses(AffineHyperplane.through(q, (a, c)), dom, sizes.miss_samples, seed + i)
        lifted = _misses(AffineHyperplane.through(xi, lift_line_to_e(a, c, omega, variant)), E,
                         sizes.miss_samples, seed + i, e_sampler)
        disagree += int(planar != lifted)
        both_miss += int(planar and lifted)
        both_hit += int(not planar and not lifted)
    res.add("lift_equivalence", disagree == 0, trials=n, both_miss=both_miss, both_hit=both_hit,
            disagreements=disagree, miss_samples=sizes.miss_samples)
    return res


def _central_wirtinger(f: Callable, x: np.ndarray, h: float = 1e-6) -> np.ndarray:
    out = np.empty(3, dtype=complex)
    for j in range(3):
        e = np.zeros(3, dtype=complex)
        e[j] = h
        dx = (f(x + e) - f(x - e)) / (2 * h)
        dy = (f(x + 1j * e) - f(x - 1j * e)) / (2 * h)
        out[j] = 0.5 * (dx - 1j * dy)
    return out


def suite_thm1(seed: int, sizes: Sizes, tol: Tolerance) -> SuiteResult:
    """Supporting hyperplanes at ``(1, r, r)`` and tangent hyperplanes at smooth points."""
    res = SuiteResult("thm1")
    rng = _rng(seed, "thm1")
    n = sizes.thm1_members
    E = tetrablock()
    sampler = _pool_sampler(E.sample(rng, 100_000))
    for r in (0.0, 0.3, 0.7):
        x = np.array([1.0, r, r], dtype=complex)
        omega = np.sqrt(rng.uniform(size=n)) * np.exp(2j * np.pi * rng.uniform(size=n))
        omega[:4] = [0.0, 1.0, -1.0, 1j]
        missed = 0
        for i, w in enumerate(omega):
            v = ProjVec.of(-1.0, -w, w)
            missed += int(gamma_membership_e_1rr(v, r) and _misses(AffineHyperplane.through(x, v), E, sizes.miss_samples, seed + i, sampler))
        res.add(f"members_miss_r_{r:g}", missed == n, r=r, members=n, missing=missed)

        hits = 0
        for i in range(n):
            a = complex(np.exp(2j * np.pi * rng.uniform()))
            if i % 2 == 0:
                # b + c != 0
                b, c = rng.standard_normal(2) + 1j * rng.standard_normal(2)
            else:
                # b + c = 0 but |c| > |a|
                c = a * rng.uniform(1.05, 3.0) * np.exp(2j * np.pi * rng.uniform())
                b = -c
            v = ProjVec.of(a, b, c)
            if gamma_membership_e_1rr(v, r):
                continue
            hits += int(not _misses(AffineHyperplane.through(x, v), E, sizes.miss_samples, seed + n + i, sampler))
        res.add(f"non_members_hit_r_{r:g}", hits == n, r=r, non_members=n, hitting=hits)

    m = sizes.thm1_gradient_points
    pts = []
    while len(pts) < m:
        for xi in boundary_points_e(rng, 2 * m):
            cls = classify_boundary_e(xi, tol)
            x1, x2, x3 = xi
            if (cls.variant is Variant.SMOOTH_BOUNDARY and abs(x1 - np.conj(x2) * x3) > 1e-3
                    and abs(x2 - np.conj(x1) * x3) > 1e-3):
                pts.append(xi)
    worst, mismatched = 0.0, 0
    for xi in pts[:m]:
        g = wirtinger_gradient(xi)
        fd = _central_wirtinger(lambda y: float(e_defining(y)), xi)
        worst = max(worst, float(np.linalg.norm(g - fd) / np.linalg.norm(g)))
        mismatched += int(not proj_equal(tangent_hyperplane_smooth(xi, tol).cls, ProjVec.of(g)))
    res.add("tangent_gradient", worst <= 1e-6 and mismatched == 0, points=m, step=1e-6,
            max_relative_error=worst, tangent_mismatches=mismatched)
    return res


def _planar_point(l1: complex, l2: complex) -> np.ndarray:
    return np.array([l1 + l2, l1 * l2], dtype=complex)


def suite_thm2(seed: int, sizes: Sizes, tol: Tolerance) -> SuiteResult:
    """Supporting sets of ``G_{2,rho}``: the two singleton cases and the corner predicate."""
    res = SuiteResult("thm2")
    rng = _rng(seed, "thm2")
    n = sizes.thm2_points
    rhos = (0.25, 0.5, 0.75)
    for bullet in (1, 2):
        confirmed = 0
        for i in range(n):
            rho = rhos[i % 3]
            a1, a2 = np.exp(2j * np.pi * rng.uniform(size=2))
            if bullet == 1:
                l1, l2 = rng.uniform(0.0, 0.95 * rho) * a1, a2
                expected = ProjVec.of(-l2, 1.0)
            else:
                m1 = rng.uniform(rho + 0.02 * (1 - rho), 1.0 - 0.02 * (1 - rho))
                l1, l2 = m1 * a1, rho / m1 * a2
                expected = ProjVec.of(0.0, 1.0)
            q = _planar_point(l1, l2)
            gset = gamma_g2rho(q, rho, tol)
            dom = g2rho(rho)
            ok = isinstance(gset, Singleton) and proj_equal(gset.member, expected, 1e-8)
            ok = ok and _misses(AffineHyperplane.through(q, gset.member), dom, sizes.miss_samples, seed + i)
            for k in range(sizes.thm2_perturbed):
                if not ok:
                    break
                bump = rng.uniform(0.05, 0.5) * (rng.standard_normal(2) + 1j * rng.standard_normal(2)) / np.sqrt(2)
                v = ProjVec.of(expected.array + bump)
                ok = not _misses(AffineHyperplane.through(q, v), dom, 4000, seed + 1000 * i + k)
            confirmed += int(ok)
        res.add(f"singleton_bullet_{bullet}", confirmed == n, points=n, perturbed=sizes.thm2_perturbed,
                confirmed=confirmed)

    # corner pi(0.5, 1) = (1.5, 0.5) of G_{2,0.5}
    pred_point = _planar_point(0.5, 1.0)
    pred = gamma_g2rho(pred_point, 0.5, tol)
    zero_ok = isinstance(pred, RatioPredicate) and bool(pred.contains_ratio(0.0))
    res.add("corner_contains_zero", zero_ok, rho=0.5, lambda1=0.5, lambda2=1.0, chart="w = -c/a")

    members = pred.member_ratios(256, seed)
    i, j = rng.integers(0, len(members), (2, sizes.thm2_midpoints))
    mid = pred.contains_ratio(0.5 * (members[i] + members[j]))
    res.add("corner_midpoint_convexity", bool(np.all(mid)), pairs=sizes.thm2_midpoints,
            member_pool=len(members), failures=int(np.sum(~mid)), grid=list(pred.grid))

    ray = pred.ray_ratios(12, seed)
    on_grid = bool(np.all(pred.contains_ratio(ray)))
    ray_missed = sum(
        _misses(AffineHyperplane.through(pred_point, class_of_ratio(w)), g2rho(0.5), sizes.miss_samples, seed + k)
        for k, w in enumerate(ray)
    )
    res.add("corner_ray_members_miss", on_grid and ray_missed == len(ray), members=len(ray),
            missing=int(ray_missed), accepted_by_grid=on_grid)

    # the line through (1.5, 0.5) and pi(0.6, 0.6) = (1.2, 0.36) has a / c = -7/15
    witness = ProjVec.of(-7.0, 15.0)
    through_inner = in_g2rho(_planar_point(0.6, 0.6), 0.5)
    res.add("corner_rejects_witness", not pred.contains(witness) and bool(through_inner),
            witness_class=witness.as_list(), chart_value=ratio_of(witness))

    corners, all_ok = 0, True
    for _ in range(60):
        rho = float(rng.uniform(0.1, 0.9))
        l1 = rho * np.exp(2j * np.pi * rng.uniform())
        l2 = np.exp(2j * np.pi * rng.uniform())
        p = RatioPredicate(complex(l1), complex(l2), rho)
        all_ok &= p.contains(ProjVec.of(0.0, 1.0))
        corners += 1
    res.add("corner_contains_vertical_class", all_ok, corners=corners, member=[[0.0, 0.0], [1.0, 0.0]])

    coarse = RatioPredicate(0.5, 1.0, 0.5, (16, 32))
    fine = RatioPredicate(0.5, 1.0, 0.5, (64, 128))
    w = 3.0 * (rng.standard_normal(500) + 1j * rng.standard_normal(500))
    grew = int(np.sum(fine.contains_ratio(w) & ~coarse.contains_ratio(w)))
    res.add("grid_refinement_monotone", grew == 0, probes=500, gained=grew,
            mu1_points=[len(mu1_grid(0.5, (16, 32))), len(mu1_grid(0.5, (64, 128)))])
    return res


def suite_corollary(seed: int, sizes: Sizes, tol: Tolerance) -> SuiteResult:
    """C-convexity scans and probes of the supporting sets at non-smooth points."""
    res = SuiteResult("corollary")
    domains = [tetrablock()] + [g2rho(r) for r in (0.25, 0.5, 0.75, 1.0)] + [polydisc(2)]
    for dom in domains:
        rep = cconvexity_scan(dom, sizes.scan_lines, seed, sizes.resolution)
        res.add(f"scan_{dom.name}", rep.passed, lines=rep.lines_tested, resolution=rep.resolution,
                min_blob=rep.min_blob, violations=len(rep.violations),
                violating_lines=[i for i, _, _ in rep.violations][:20])
    rep = cconvexity_scan(punctured_bidisc(0.3), sizes.control_lines, seed, sizes.resolution)
    res.add("scan_control_fails", not rep.passed, domain=rep.domain, lines=rep.lines_tested,
            violations=len(rep.violations))
    for x in ((0.5, 0.5, 1.0), (0.0, 0.0, 1.0), (1.0, 0.3, 0.3), (0.3, 1.0, 0.3)):
        probe = gamma_probe(np.array(x, dtype=complex), sizes.probe_samples, seed,
                            miss_samples=sizes.miss_samples, tol=tol)
        d = probe.as_dict()
        d.pop("passed")
        res.add(f"gamma_probe_{x[0]:g}_{x[1]:g}_{x[2]:g}", probe.passed, **d)
    return res


_RUNNERS = {
    "lemma1": suite_lemma1,
    "prop31": suite_prop31,
    "lemma2": suite_lemma2,
    "lemma3": suite_lemma3,
    "thm1": suite_thm1,
    "thm2": suite_thm2,
    "corollary": suite_corollary,
}


def run_suite(name: str, seed: int = 42, sizes: Sizes | None = None, tol: Tolerance = DEFAULT_TOL) -> SuiteResult:
    if name not in _RUNNERS:
        raise KeyError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    start = time.perf_counter()
    result = _RUNNERS[name](seed, sizes or Sizes(), tol)
    result.elapsed = time.perf_counter() - start
    return result


def run(names, seed: int = 42, sizes: Sizes | None = None, tol: Tolerance = DEFAULT_TOL, progress=None):
    """Run suites in order; ``progress(result)`` is called after each one."""
    if isinstance(names, str):
        names = [names]
    names = list(SUITES) if list(names) == ["all"] else list(names)
    out = []
    for name in names:
        r = run_suite(name, seed, sizes, tol)
        if progress is not None:
            progress(r)
        out.append(r)
    return out


__all__ = ["SUITES", "Check", "Sizes", "SuiteResult", "boundary_points_e", "run", "run_suite"]
