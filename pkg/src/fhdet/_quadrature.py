"""Graded-panel Gauss-Legendre grids for integrands with endpoint
singularities |t - t_j|^(2 Re a), Re a > -1/2, and jump discontinuities.

The domain is split at every singular point; each panel is halved and
dyadically graded (ratio 1/2) toward its endpoints, with the grading depth
chosen so the innermost cell's contribution falls below the tolerance.
A global cell-length cap resolves oscillatory/polynomial factors.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ConvergenceError

_GL_ORDER = 24
_GL_X, _GL_W = np.polynomial.legendre.leggauss(_GL_ORDER)

# Hard cap on cells per grid; beyond this the requested tolerance is
# declared unreachable.
_MAX_CELLS = 200_000
_MAX_DEPTH = 4000


def grading_depth(re_alpha: float, length: float, tol: float) -> int:
    """Dyadic depth so that (length * 2^-d)^(2 re_alpha + 1) <= tol."""
    expo = 2.0 * re_alpha + 1.0
    if expo <= 0:
        raise ValueError("endpoint exponent must satisfy Re alpha > -1/2")
    need = (math.log(max(length, 1e-300)) + math.log(1.0 / tol)) / (expo * math.log(2.0))
    return min(_MAX_DEPTH, max(4, int(math.ceil(need))))


def _graded_half(a: float, b: float, depth: int) -> list[tuple[float, float]]:
    # Cells of [a, b] graded toward a: [a, a+H/2^d], [a+H/2^d, a+H/2^(d-1)], ...
    H = b - a
    if depth <= 0:
        return [(a, b)]
    bounds = [a] + [a + H * 2.0 ** (-k) for k in range(depth, -1, -1)]
    return list(zip(bounds[:-1], bounds[1:]))


def graded_panel(a: float, b: float, depth_a: int, depth_b: int,
                 h_max: float) -> list[tuple[float, float]]:
    """Split [a, b] into cells graded toward both endpoints, capped at h_max."""
    m = 0.5 * (a + b)
    cells = _graded_half(a, m, depth_a)
    cells += [(b - (hi - a), b - (lo - a)) for lo, hi in reversed(_graded_half(a, m, depth_b))]
    out = []
    for lo, hi in cells:
        ln = hi - lo
        if ln <= h_max:
            out.append((lo, hi))
        else:
            nsub = int(math.ceil(ln / h_max))
            edges = np.linspace(lo, hi, nsub + 1)
            out.extend(zip(edges[:-1], edges[1:]))
    return out


def nodes_weights(cells: list[tuple[float, float]]) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes/weights over a list of cells."""
    if len(cells) > _MAX_CELLS:
        raise ConvergenceError(
            f"quadrature panel budget exceeded ({len(cells)} cells > {_MAX_CELLS})"
        )
    lo = np.array([c[0] for c in cells])
    hi = np.array([c[1] for c in cells])
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    x = (mid[:, None] + half[:, None] * _GL_X[None, :]).ravel()
    w = (half[:, None] * _GL_W[None, :]).ravel()
    return x, w


def split_grid(breakpoints: list[float], depths: list[int], lo: float, hi: float,
               h_max: float) -> tuple[np.ndarray, np.ndarray]:
    """Grid on [lo, hi] split at interior breakpoints with per-point grading.

    ``breakpoints`` must be sorted and within [lo, hi]; ``depths[i]`` is the
    grading depth at breakpoints[i].  Endpoints lo/hi may themselves be
    breakpoints (then graded one-sided toward them).
    """
    pts = list(breakpoints)
    dps = list(depths)
    if not pts or pts[0] > lo:
        pts.insert(0, lo)
        dps.insert(0, 0)
    if pts[-1] < hi:
        pts.append(hi)
        dps.append(0)
    cells: list[tuple[float, float]] = []
    for i in range(len(pts) - 1):
        a, b = pts[i], pts[i + 1]
        if b - a <= 0:
            continue
        cells += graded_panel(a, b, dps[i], dps[i + 1], h_max)
    return nodes_weights(cells)
