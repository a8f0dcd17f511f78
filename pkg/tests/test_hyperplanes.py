import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import points
from tetrablock import DegenerateCaseError, PreconditionError
from tetrablock.domains import e_defining, g2_defining, g2rho, g2rho_defining, in_e, polydisc, tetrablock
from tetrablock.hyperplanes import (
    AffineHyperplane,
    Lift,
    OmegaFamily,
    ProjVec,
    RatioPredicate,
    Singleton,
    UnionFamily,
    class_of_ratio,
    gamma_e_point,
    gamma_g2rho,
    gamma_membership_e_1rr,
    gamma_polydisc_corner_membership,
    hyperplane_misses_domain,
    lift_line_to_e,
    proj_equal,
    ratio_of,
    ratio_set_membership,
    ring_omegas,
    separating_hyperplane_e,
    separating_line_g2,
    tangent_hyperplane_smooth,
    wirtinger_gradient,
)
from tetrablock.maps import phi


def _corner(l1, l2):
    return np.array([l1 + l2, l1 * l2])


# -- projective classes ------------------------------------------------------------


def test_projvec_normalizes_by_largest_component():
    v = ProjVec.of(2, -4, 1)
    np.testing.assert_allclose(v.array, [-0.5, 1, -0.25])


def test_projvec_scale_invariance():
    assert ProjVec.of(1, 2j, 3) == ProjVec.of(2j * np.array([1, 2j, 3]))
    assert proj_equal(ProjVec.of(1, 1), [3 - 1j, 3 - 1j])
    assert not proj_equal(ProjVec.of(1, 1), [1, -1])


def test_projvec_rejects_zero():
    with pytest.raises(ValueError):
        ProjVec.of(0, 0)


def test_affine_hyperplane_constant():
    h = AffineHyperplane.through([1, 2], [3, 4])
    assert h.constant == 11
    assert h.functional([1, 2]) == 0


# -- separation --------------------------------------------------------------------


def test_separating_line_g2_example():
    cls, const = separating_line_g2([2.0, 1.0])
    # mu = 1: the line -s + p = -1
    assert proj_equal(cls, [-1, 1])
    # constant is reported in the scale of the normalized class and the line passes through q
    assert const == pytest.approx(np.dot(cls.array, [2.0, 1.0]))
    assert const * (-1) / cls[0] == pytest.approx(-1.0)


def test_separating_line_g2_rejects_inside():
    with pytest.raises(PreconditionError):
        separating_line_g2([0.0, 0.0])


@pytest.mark.parametrize(
    "x, cls, const",
    [([2, 0, 0], [-2, -2, 1], -4), ([0, 0, 1], [-1j, -1j, 1], 1)],
)
def test_separating_hyperplane_examples(x, cls, const):
    h = separating_hyperplane_e(np.array(x, dtype=complex))
    assert proj_equal(h.cls, cls)
    # compare the constant in the scale of the expected representative
    k = int(np.argmax(np.abs(cls)))
    assert h.constant * cls[k] / h.coeffs[k] == pytest.approx(const, abs=1e-12)


def test_separating_hyperplane_rejects_inside():
    with pytest.raises(PreconditionError):
        separating_hyperplane_e([0, 0, 0])


@settings(max_examples=25)
@given(points(3, 2.0))
def test_separating_hyperplane_misses_e(x):
    if e_defining(x) > 1e-3:
        h = separating_hyperplane_e(x)
        assert abs(h.functional(x)) <= 1e-12 * (1 + abs(h.constant))
        assert hyperplane_misses_domain(h, tetrablock(), 4000, seed=1).misses


def test_lift_variants():
    assert lift_line_to_e(1, 2, 0.5, Lift.PHI) == ProjVec.of(1, 0.5, 1)
    assert lift_line_to_e(1, 2, 0.5, "PSI") == ProjVec.of(0.5, 1, 1)
    with pytest.raises(ValueError):
        lift_line_to_e(0, 0, 0.5)


def test_lift_of_separator_misses_e():
    x = np.array([1.2, 0.3, 0.4], dtype=complex)
    w = 0.8 * np.exp(0.4j)
    q = phi(w, x)
    if g2_defining(q) > 0:
        cls, _ = separating_line_g2(q)
        h = AffineHyperplane.through(x, lift_line_to_e(*cls.coords, w))
        assert hyperplane_misses_domain(h, tetrablock(), 6000, seed=3).misses


# -- miss checker ------------------------------------------------------------------


def test_miss_checker_finds_witness_through_interior():
    h = AffineHyperplane.through([0, 0, 0], [1, 1, 1])
    res = hyperplane_misses_domain(h, tetrablock(), 2000)
    assert not res.misses
    assert in_e(res.witness)
    assert abs(h.functional(res.witness)) < 1e-12


def test_miss_checker_far_hyperplane():
    h = AffineHyperplane.through([5, 5], [1, 0])
    res = hyperplane_misses_domain(h, polydisc(2), 100)
    assert res.misses


def test_miss_checker_polydisc_supporting_line():
    h = AffineHyperplane.through([1, 1], [1, 1])
    assert hyperplane_misses_domain(h, polydisc(2), 5000).misses
    assert not hyperplane_misses_domain(AffineHyperplane.through([1, 1], [1, -1]), polydisc(2), 5000).misses


# -- tangent hyperplane ------------------------------------------------------------------


def test_wirtinger_gradient_matches_finite_differences():
    x = np.array([0.5, 0.3j, 0.1], dtype=complex)
    x = x * 1.0
    g = wirtinger_gradient(x)
    h = 1e-6
    fd = []
    for j in range(3):
        e = np.zeros(3, dtype=complex)
        e[j] = 1
        dre = (e_defining(x + h * e) - e_defining(x - h * e)) / (2 * h)
        dim = (e_defining(x + 1j * h * e) - e_defining(x - 1j * h * e)) / (2 * h)
        fd.append(0.5 * (dre - 1j * dim))
    np.testing.assert_allclose(g, fd, rtol=1e-6, atol=1e-8)


def test_tangent_hyperplane_at_smooth_point():
    h = tangent_hyperplane_smooth([0.5, 0.5, 0])
    assert h.functional([0.5, 0.5, 0]) == pytest.approx(0)
    assert hyperplane_misses_domain(h, tetrablock(), 6000).misses


def test_tangent_hyperplane_rejects_corner():
    with pytest.raises(PreconditionError):
        tangent_hyperplane_smooth([0.5, 0.5, 1])


# -- supporting sets of the tetrablock ----------------------------------------------------


def test_membership_1rr():
    assert gamma_membership_e_1rr(ProjVec.of(-1, -0.5j, 0.5j), 0.3)
    assert not gamma_membership_e_1rr(ProjVec.of(-1, -0.5, 0.4), 0.3)
    assert not gamma_membership_e_1rr(ProjVec.of(-0.5, -1, 1), 0.3)


@pytest.mark.parametrize("r", [0.0, 0.3, 0.7])
def test_omega_family_members_miss(r):
    x = np.array([1, r, r], dtype=complex)
    gset = gamma_e_point(x)
    assert isinstance(gset, OmegaFamily)
    for i, v in enumerate(gset.sample(8, seed=2)):
        assert gset.contains(v)
        assert hyperplane_misses_domain(AffineHyperplane.through(x, v), tetrablock(), 4000, seed=i).misses


def test_omega_family_non_member_hits():
    x = np.array([1, 0.3, 0.3], dtype=complex)
    v = ProjVec.of(-1, -0.5, 0.2)  # b + c != 0
    assert not gamma_e_point(x).contains(v)
    assert not hyperplane_misses_domain(AffineHyperplane.through(x, v), tetrablock(), 4000).misses


def test_rotated_omega_family_contains_rotated_members():
    theta, tau = 0.7, -1.1
    x = np.array([1, 0.3, 0.3]) * np.exp(1j * np.array([theta, tau, theta + tau]))
    gset = gamma_e_point(x)
    v = gset.member(0.4j)
    assert gset.contains(v)
    assert hyperplane_misses_domain(AffineHyperplane.through(x, v), tetrablock(), 4000).misses


def test_r1r_case_is_swapped():
    gset = gamma_e_point(np.array([0.3, 1, 0.3], dtype=complex))
    assert isinstance(gset, OmegaFamily) and gset.swapped
    assert gset.contains(ProjVec.of(-0.5, -1, 0.5))


def test_union_family_common_member():
    gset = gamma_e_point(np.array([0.5, 0.5, 1], dtype=complex))
    assert isinstance(gset, UnionFamily)
    assert proj_equal(gset.common_member, [0, 0, 1])
    fams = gset.sample_families(10)
    for members in fams.values():
        assert any(proj_equal(gset.common_member, v) for v in members)


def test_smooth_point_gives_singleton():
    gset = gamma_e_point(np.array([0.5, 0.5, 0], dtype=complex))
    assert isinstance(gset, Singleton)


def test_gamma_e_rejects_interior():
    with pytest.raises(PreconditionError):
        gamma_e_point([0, 0, 0])


def test_polydisc_corner_membership():
    assert gamma_polydisc_corner_membership([1, 2, 0.5])
    assert gamma_polydisc_corner_membership([1j, 2j])
    assert not gamma_polydisc_corner_membership([1, -1])
    assert not gamma_polydisc_corner_membership([1, 1j])


def test_ring_omegas():
    w = ring_omegas(20, include_zero=True)
    assert len(w) == 20 and w[0] == 0
    assert np.all(np.abs(w) <= 1 + 1e-15)
    np.testing.assert_array_equal(ring_omegas(20, seed=4), ring_omegas(20, seed=4))


# -- supporting sets of G_{2,rho} ------------------------------------------------------


def test_bullet_one_singleton():
    # |lambda1| < rho, |lambda2| = 1: root-pencil class
    q = _corner(0.2, np.exp(0.5j))
    g = gamma_g2rho(q, 0.5)
    assert isinstance(g, Singleton)
    assert proj_equal(g.member, [-np.exp(0.5j), 1])
    assert hyperplane_misses_domain(AffineHyperplane.through(q, g.member), g2rho(0.5), 6000).misses


def test_bullet_two_singleton():
    # |p| = rho with both roots strictly inside the annulus
    l1 = np.sqrt(0.5) * np.exp(0.3j)
    q = _corner(l1, np.sqrt(0.5) * np.exp(1.1j))
    g = gamma_g2rho(q, 0.5)
    assert isinstance(g, Singleton)
    assert proj_equal(g.member, [0, 1])


def test_corner_ratio_predicate():
    g = gamma_g2rho(_corner(0.5, 1.0), 0.5)
    assert isinstance(g, RatioPredicate)
    assert g.contains_ratio(0.0)
    assert g.contains(ProjVec.of(0, 1))
    # the excluded class [(-7, 15)] has chart value 15/7
    assert not g.contains(ProjVec.of(-7, 15))
    assert ratio_of(ProjVec.of(-7, 15)) == pytest.approx(15 / 7)


def test_corner_members_miss_domain():
    q = _corner(0.5, 1.0)
    g = gamma_g2rho(q, 0.5)
    for i, v in enumerate(g.sample(6)):
        assert hyperplane_misses_domain(AffineHyperplane.through(q, v), g2rho(0.5), 6000, seed=i).misses


def test_corner_ray_on_rotated_corner():
    rho, l1, l2 = 0.3, 0.3 * np.exp(1j), np.exp(-0.4j)
    q = _corner(l1, l2)
    g = gamma_g2rho(q, rho)
    origin, direction = g.ray()
    assert origin == pytest.approx(1 / l2)
    ws = g.ray_ratios(5, seed=1)
    assert np.all(g.contains_ratio(ws))
    for i, w in enumerate(ws):
        h = AffineHyperplane.through(q, class_of_ratio(w))
        assert hyperplane_misses_domain(h, g2rho(rho), 6000, seed=i).misses
    # just before the origin of the ray the line enters the domain
    h = AffineHyperplane.through(q, class_of_ratio(origin - 0.2 * direction))
    assert not hyperplane_misses_domain(h, g2rho(rho), 6000).misses


def test_grid_predicate_is_outer_approximation():
    # off the ray, a grid member can still meet the domain in a thin sliver
    q = _corner(0.5, 1.0)
    g = gamma_g2rho(q, 0.5)
    w = 0.0199 - 0.0713j
    assert g.contains_ratio(w)
    # dense polar scan of the line (s, p) = q + t (w, 1)
    t = np.geomspace(1e-6, 4, 1500)[:, None] * np.exp(2j * np.pi * np.arange(720) / 720)
    pts = np.stack([q[0] + w * t, q[1] + t], axis=-1)
    assert g2rho_defining(pts, 0.5).min() < -1e-5


def test_collapsed_family_at_annulus_edge_not_excluded():
    # w = 1 / lambda2 is the tip of the ray; mu1 = lambda2 lies on the grid edge
    assert ratio_set_membership(1.0, 0.5, 1.0, 0.5)


def test_excluded_class_hits_domain():
    q = _corner(0.5, 1.0)
    h = AffineHyperplane.through(q, ProjVec.of(-7, 15))
    assert not hyperplane_misses_domain(h, g2rho(0.5), 20000).misses


@settings(max_examples=40)
@given(st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False),
       st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False))
def test_ratio_set_is_midpoint_convex(w1, w2):
    args = (0.5, 1.0, 0.5)
    if ratio_set_membership(w1, *args) and ratio_set_membership(w2, *args):
        assert ratio_set_membership(0.5 * (w1 + w2), *args)


def test_grid_refinement_shrinks_set():
    w = 3.0 * np.exp(2j * np.pi * np.arange(200) / 200) * np.linspace(0.1, 1, 200)
    coarse = ratio_set_membership(w, 0.5, 1.0, 0.5, grid=(16, 32))
    fine = ratio_set_membership(w, 0.5, 1.0, 0.5, grid=(64, 128))
    assert not np.any(fine & ~coarse)


def test_ratio_chart_roundtrip():
    assert ratio_of(class_of_ratio(0.3 - 0.2j)) == pytest.approx(0.3 - 0.2j)
    assert ratio_of(ProjVec.of(0, 1)) is None


def test_gamma_g2rho_preconditions():
    with pytest.raises(PreconditionError):
        gamma_g2rho([0, 0], 0.5)
    with pytest.raises(PreconditionError):
        gamma_g2rho(_corner(0.5, 1.0), 1.0)


def test_gamma_g2rho_degenerate_band():
    # |lambda1| within tolerance of rho but |lambda2| inside: ambiguous between cases
    q = _corner(0.5 + 1e-12, 1.0 - 1e-3)
    with pytest.raises((DegenerateCaseError, PreconditionError)):
        gamma_g2rho(q, 0.5)
