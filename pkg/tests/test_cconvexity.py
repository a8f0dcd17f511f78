from collections import deque

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from tetrablock import PreconditionError
from tetrablock.cconvexity import (
    AffineLine,
    _blob_sizes,
    cconvexity_scan,
    check_line,
    gamma_probe,
    random_line,
    raster_slice,
    slice_topology,
)
from tetrablock.domains import Domain, g2rho, polydisc, punctured_bidisc, tetrablock


def _flood(bits, neighbours):
    # plain breadth-first labelling; returns the list of components as pixel sets
    h, w = bits.shape
    seen = np.zeros_like(bits, dtype=bool)
    comps = []
    for i in range(h):
        for j in range(w):
            if not bits[i, j] or seen[i, j]:
                continue
            comp, queue = [], deque([(i, j)])
            seen[i, j] = True
            while queue:
                a, b = queue.popleft()
                comp.append((a, b))
                for da, db in neighbours:
                    u, v = a + da, b + db
                    if 0 <= u < h and 0 <= v < w and bits[u, v] and not seen[u, v]:
                        seen[u, v] = True
                        queue.append((u, v))
            comps.append(comp)
    return comps


FOUR = [(1, 0), (-1, 0), (0, 1), (0, -1)]
EIGHT = FOUR + [(1, 1), (1, -1), (-1, 1), (-1, -1)]


def _oracle(bits):
    h, w = bits.shape
    comps = _flood(bits, FOUR)
    holes = [
        c for c in _flood(~bits, EIGHT)
        if not any(a in (0, h - 1) or b in (0, w - 1) for a, b in c)
    ]
    return sorted(len(c) for c in comps), sorted(len(c) for c in holes)


@settings(max_examples=80)
@given(arrays(bool, st.tuples(st.integers(1, 12), st.integers(1, 12))))
def test_blob_sizes_match_flood_fill(bits):
    comp, holes = _blob_sizes(bits)
    want_comp, want_holes = _oracle(bits)
    assert sorted(comp.tolist()) == want_comp
    assert sorted(holes.tolist()) == want_holes


def test_ring_has_one_hole():
    bits = np.zeros((7, 7), dtype=bool)
    bits[1:6, 1:6] = True
    bits[2:5, 2:5] = False
    comp, holes = _blob_sizes(bits)
    assert comp.tolist() == [16] and holes.tolist() == [9]


def test_diagonal_gap_closes_hole_under_eight_connectivity():
    # the complement leaks through a corner, so this ring has no hole
    bits = np.ones((7, 7), dtype=bool)
    bits[0, :] = bits[-1, :] = bits[:, 0] = bits[:, -1] = False
    bits[2:5, 2:5] = False
    bits[1, 1] = False
    comp, holes = _blob_sizes(bits)
    assert comp.tolist() == [15]
    assert holes.tolist() == []


# -- slices -------------------------------------------------------------------------


def _line(base, d):
    return AffineLine(tuple(np.asarray(base, dtype=complex)), tuple(np.asarray(d, dtype=complex)))


def test_affine_line_normalizes_direction():
    line = _line([0, 0], [2, 1j])
    assert max(abs(c) for c in line.dir) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        _line([0, 0], [0, 0])


def test_e_axis_line_is_a_disc():
    line = _line([0, 0, 0], [1, 0, 0])
    r = raster_slice(tetrablock(), line, 128)
    topo = slice_topology(r)
    assert (topo.component_count, topo.hole_count, topo.empty) == (1, 0, False)
    passed, _ = check_line(tetrablock(), line, 128)
    assert passed


def test_disc_area_converges():
    r = raster_slice(polydisc(2), _line([0, 0], [1, 0]), 256)
    area = r.bits.sum() * (2 * r.halfwidth / r.resolution) ** 2
    assert area == pytest.approx(np.pi, rel=1e-2)


def test_control_annulus_line():
    dom = punctured_bidisc(0.3)
    line = _line([0, 0], [1, 0])
    passed, topo = check_line(dom, line, 256)
    assert not passed
    assert topo.hole_count == 1 and topo.component_count == 1


def test_empty_slice():
    line = _line([3, 0], [0, 1])
    passed, topo = check_line(polydisc(2), line, 64)
    assert passed and topo.empty


@pytest.mark.parametrize("dom", [tetrablock(), g2rho(0.5), g2rho(1.0), polydisc(2), punctured_bidisc(0.3)],
                         ids=lambda d: d.name)
def test_compiled_raster_matches_numpy(dom):
    numpy_dom = Domain(dom.name, dom.dim, dom.defining, dom.sample, None, dom.radii)
    for i in range(20):
        line = random_line(dom.dim, 7, i, dom.bounds)
        a = raster_slice(dom, line, 96).bits
        b = raster_slice(numpy_dom, line, 96).bits
        assert np.array_equal(a, b)


def test_window_covers_slice_outside_unit_polydisc():
    # G_2 reaches |s| close to 2; the window scales with the bounding radii
    dom = g2rho(1.0)
    r = raster_slice(dom, _line([0, 0], [1, 0]), 128)
    assert not r.bits[0].any() and not r.bits[-1].any()
    assert not r.bits[:, 0].any() and not r.bits[:, -1].any()


def _two_balls():
    centres = np.array([[0.5, 0], [-0.5, 0]], dtype=complex)

    def defining(z):
        z = np.asarray(z, dtype=complex)
        d = [np.sum(np.abs(z - c) ** 2, axis=-1) for c in centres]
        return np.minimum(*d) - 0.3 ** 2

    return Domain("TWO_BALLS", 2, defining, lambda rng, n: None)


def test_disconnected_slice_is_caught():
    passed, topo = check_line(_two_balls(), _line([0, 0], [1, 0]), 256)
    assert not passed
    assert topo.component_count == 2


def test_small_blobs_are_ignored():
    passed, _ = check_line(_two_balls(), _line([0, 0], [1, 0]), 256, min_blob=10**6)
    assert passed


# -- scans ----------------------------------------------------------------------------


def test_random_line_is_deterministic_and_order_free():
    assert random_line(3, 42, 17) == random_line(3, 42, 17)
    assert random_line(3, 42, 17) != random_line(3, 42, 18)
    line = random_line(2, 1, 0, radii=(2.0, 0.5))
    assert abs(line.base[1]) <= 0.5


def test_scan_is_deterministic():
    a = cconvexity_scan(punctured_bidisc(0.3), 60, seed=3, resolution=96)
    b = cconvexity_scan(punctured_bidisc(0.3), 60, seed=3, resolution=96)
    assert a.as_dict() == b.as_dict()


@pytest.mark.parametrize("dom", [tetrablock(), g2rho(0.25), g2rho(1.0), polydisc(2)], ids=lambda d: d.name)
def test_c_convex_domains_pass_short_scan(dom):
    rep = cconvexity_scan(dom, 150, seed=11, resolution=128)
    assert rep.passed, rep.as_dict()["violations"][:2]


def test_control_domain_fails_scan():
    rep = cconvexity_scan(punctured_bidisc(0.3), 300, seed=42, resolution=128)
    assert not rep.passed
    assert rep.as_dict()["violation_count"] == len(rep.violations)


def test_control_violations_persist_at_double_resolution():
    dom = punctured_bidisc(0.3)
    rep = cconvexity_scan(dom, 300, seed=42, resolution=96)
    with_holes = [(i, line) for i, line, topo in rep.violations if topo.hole_count >= 1]
    assert with_holes
    for _, line in with_holes[:10]:
        passed, topo = check_line(dom, line, 192)
        assert not passed and topo.hole_count >= 1


def test_scan_rejects_zero_lines():
    with pytest.raises(ValueError):
        cconvexity_scan(polydisc(2), 0)


# -- gamma probes ----------------------------------------------------------------------


def test_probe_rr1_common_member():
    rep = gamma_probe([0.5, 0.5, 1], n_samples=10, miss_samples=3000)
    assert rep.common_member_ok
    assert rep.passed


def test_probe_1rr():
    rep = gamma_probe([1, 0.3, 0.3], n_samples=10, miss_samples=3000)
    assert rep.common_member_ok is None
    assert rep.passed and rep.n_sampled == 10


def test_probe_r_zero():
    rep = gamma_probe([0, 0, 1], n_samples=6, miss_samples=3000)
    assert rep.passed


def test_probe_rejects_non_canonical():
    with pytest.raises(PreconditionError):
        gamma_probe([0.5j, 0.5, 1j])
    with pytest.raises(PreconditionError):
        gamma_probe([0.5, 0.5, 0])
