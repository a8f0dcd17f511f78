"""Complex hyperplanes: projective classes, separation, supporting sets and a miss-checker."""

from .gamma import (
    DEFAULT_GRID,
    GammaSet,
    OmegaFamily,
    RatioPredicate,
    Singleton,
    UnionFamily,
    class_of_ratio,
    gamma_e_point,
    gamma_g2rho,
    gamma_membership_e_1rr,
    gamma_polydisc_corner_membership,
    mu1_grid,
    ratio_of,
    ratio_set_membership,
    ring_omegas,
)
from .projective import AffineHyperplane, ProjVec, proj_equal
from .search import MissResult, hyperplane_misses_domain
from .separation import (
    Lift,
    lift_line_to_e,
    separating_hyperplane_e,
    separating_line_g2,
    tangent_hyperplane_smooth,
    wirtinger_gradient,
)

__all__ = [
    "AffineHyperplane",
    "DEFAULT_GRID",
    "GammaSet",
    "Lift",
    "MissResult",
    "OmegaFamily",
    "ProjVec",
    "RatioPredicate",
    "Singleton",
    "UnionFamily",
    "class_of_ratio",
    "gamma_e_point",
    "gamma_g2rho",
    "gamma_membership_e_1rr",
    "gamma_polydisc_corner_membership",
    "hyperplane_misses_domain",
    "lift_line_to_e",
    "mu1_grid",
    "proj_equal",
    "ratio_of",
    "ratio_set_membership",
    "ring_omegas",
    "separating_hyperplane_e",
    "separating_line_g2",
    "tangent_hyperplane_smooth",
    "wirtinger_gradient",
]
