"""Compiled rasterization kernels for the built-in domains."""

import numba
import numpy as np

KIND_TETRABLOCK = 0
KIND_G2RHO = 1
KIND_POLYDISC = 2
KIND_PUNCTURED = 3


@numba.njit(cache=True)
def _inside(kind, param, y):
    n = y.shape[0]
    m = 0.0
    for j in range(n):
        a = abs(y[j])
        if a > m:
            m = a
    if kind == KIND_POLYDISC:
        return m < 1.0
    if kind == KIND_PUNCTURED:
        return param < m < 1.0
    if kind == KIND_TETRABLOCK:
        if m >= 1.0:
            return False
        x1, x2, x3 = y[0], y[1], y[2]
        val = abs(x1 - x2.conjugate() * x3) + abs(x2 - x1.conjugate() * x3) + abs(x3) ** 2 - 1.0
        return val < 0.0
    # symmetrized bidisc, cut by |p| < rho when rho < 1
    s, p = y[0], y[1]
    ap = abs(p)
    if param < 1.0 and ap >= param:
        return False
    return abs(s - s.conjugate() * p) + ap * ap - 1.0 < 0.0


@numba.njit(cache=True)
def raster(kind, param, radii, base, direction, halfwidth, res):
    out = np.zeros((res, res), dtype=np.uint8)
    n = base.shape[0]
    y = np.empty(n, dtype=np.complex128)
    step = 2.0 * halfwidth / res
    for i in range(res):
        im = -halfwidth + (i + 0.5) * step
        # |base_j + zeta dir_j| < radii_j is a disc in the zeta plane; intersect the row with all of them
        lo, hi = -halfwidth, halfwidth
        for j in range(n):
            a = abs(direction[j])
            if a == 0.0:
                if abs(base[j]) >= radii[j]:
                    hi = lo - 1.0
                continue
            c = -base[j] / direction[j]
            h2 = (radii[j] / a) ** 2 - (im - c.imag) ** 2
            if h2 <= 0.0:
                hi = lo - 1.0
                break
            h = np.sqrt(h2)
            lo = max(lo, c.real - h)
            hi = min(hi, c.real + h)
        if hi < lo:
            continue
        k0 = max(0, int(np.floor((lo + halfwidth) / step - 0.5)))
        k1 = min(res - 1, int(np.ceil((hi + halfwidth) / step - 0.5)))
        for k in range(k0, k1 + 1):
            re = -halfwidth + (k + 0.5) * step
            zeta = complex(re, im)
            for j in range(n):
                y[j] = base[j] + zeta * direction[j]
            if _inside(kind, param, y):
                out[i, k] = 1
    return out
