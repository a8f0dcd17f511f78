"""Projective classes of complex hyperplanes and affine hyperplanes through a point."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .._validation import check_points

_TIE_RTOL = 1e-12


def _pivot(arr: np.ndarray) -> int:
    mods = np.abs(arr)
    top = mods.max()
    return int(np.flatnonzero(mods >= top * (1.0 - _TIE_RTOL))[0])


@dataclass(frozen=True)
class ProjVec:
    """A point ``[(c_1, ..., c_n)]`` of complex projective space.

    The stored representative has its largest-modulus component equal to 1
    (ties go to the lower index), so equal classes compare equal up to
    rounding.  The hyperplane ``{y : sum c_j y_j = 0}`` is identified with
    this class.
    """

    coords: tuple[complex, ...]

    def __post_init__(self):
        arr = np.asarray(self.coords, dtype=complex)
        if arr.ndim != 1 or arr.size < 2:
            raise ValueError("a projective vector needs at least two components")
        if not np.all(np.isfinite(arr)):
            raise ValueError("non-finite projective coordinates")
        if not np.any(arr != 0):
            raise ValueError("the zero vector has no projective class")
        arr = arr / arr[_pivot(arr)]
        object.__setattr__(self, "coords", tuple(complex(c) for c in arr))

    @classmethod
    def of(cls, *components) -> "ProjVec":
        if len(components) == 1:
            components = tuple(np.ravel(components[0]))
        return cls(tuple(complex(c) for c in components))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coords, dtype=complex)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def permuted(self, order) -> "ProjVec":
        return ProjVec.of(self.array[list(order)])

    def scaled(self, factors) -> "ProjVec":
        return ProjVec.of(self.array * np.asarray(factors))

    def as_list(self) -> list[list[float]]:
        return [[c.real, c.imag] for c in self.coords]

    def __repr__(self) -> str:
        inner = ", ".join(f"{c:.6g}" for c in self.coords)
        return f"[({inner})]"


def proj_equal(u, v, tol: float = 1e-9) -> bool:
    """Whether two vectors define the same projective class, componentwise within ``tol``."""
    a = u.array if isinstance(u, ProjVec) else ProjVec.of(u).array
    b = np.asarray(v.array if isinstance(v, ProjVec) else v, dtype=complex)
    if a.shape != b.shape:
        return False
    # scale both by u's pivot so near-ties in modulus cannot flip the representative
    k = _pivot(a)
    if abs(b[k]) == 0 or abs(b[k]) < tol * np.max(np.abs(b)):
        return False
    return bool(np.max(np.abs(a / a[k] - b / b[k])) <= tol)


@dataclass(frozen=True)
class AffineHyperplane:
    """``{y : sum_j coeffs_j (y_j - base_j) = 0}``.

    ``coeffs`` keeps the representative it was built with, so ``constant``
    (the right-hand side of ``sum coeffs_j y_j = constant``) is reported in
    that scale; ``cls`` gives the normalized projective class.
    """

    base: tuple[complex, ...]
    coeffs: tuple[complex, ...]

    def __post_init__(self):
        base = check_points(self.base, len(self.coeffs))
        object.__setattr__(self, "base", tuple(complex(c) for c in base))
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))
        ProjVec(self.coeffs)  # rejects the zero vector

    @classmethod
    def through(cls, base, coeffs) -> "AffineHyperplane":
        coeffs = coeffs.coords if isinstance(coeffs, ProjVec) else tuple(np.ravel(coeffs))
        return cls(tuple(np.ravel(np.asarray(base, dtype=complex))), tuple(coeffs))

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    @property
    def cls(self) -> ProjVec:
        return ProjVec(self.coeffs)

    @property
    def constant(self) -> complex:
        return complex(np.dot(self.coeffs, self.base))

    def functional(self, y):
        y = np.asarray(y, dtype=complex)
        return y @ np.asarray(self.coeffs) - self.constant

    def as_dict(self) -> dict:
        return {
            "base": [[c.real, c.imag] for c in self.base],
            "coefficients": [[c.real, c.imag] for c in self.coeffs],
            "constant": [self.constant.real, self.constant.imag],
        }
