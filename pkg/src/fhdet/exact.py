"""Brute-force oracle: structured determinants, orthogonal-polynomial data,
and exact algebraic identities, all at moderate dimension for verification.

Determinants are evaluated through pivoted LU with log-magnitude
accumulation, which keeps geometrically growing or decaying values
representable up to n of a few hundred.  Everything here is pure given its
inputs; independent n values may be computed concurrently.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ._quadrature import grading_depth, split_grid
from .errors import SingularSystemError
from .specfun import LogComplex
from .symbol import (
    CoeffTable,
    FHSymbol,
    HankelWeight,
    WeightSingularity,
    coeff_table,
    eval_weight_many,
    even_symbol_to_weight,
    weight_to_even_symbol,
)

__all__ = [
    "DeterminantValue",
    "OrthoData",
    "toeplitz_det",
    "toeplitz_det_info",
    "hankel_det",
    "hankel_det_info",
    "hankel_moments",
    "tph_det",
    "TPH_VARIANTS",
    "orthogonal_polynomials",
    "monic_derivatives_at_zero",
    "check_shift_identity",
    "check_hankel_toeplitz_relation",
    "check_tph_reduction",
    "rel_residual",
    "scan_vanishing",
]

TPH_VARIANTS = ("plus_k", "minus_k2", "plus_k1", "minus_k1")

# (sign, offset c) in the entry f_{j-k} + sign * f_{j+k+c}
_TPH_STRUCTURE = {
    "plus_k": (+1, 0),
    "minus_k2": (-1, 2),
    "plus_k1": (+1, 1),
    "minus_k1": (-1, 1),
}

_GROWTH_LIMIT = 1e8
_PIVOT_RATIO_LIMIT = 1e-12


@dataclass(frozen=True)
class DeterminantValue:
    value: LogComplex
    n: int
    quality: str = "ok"


@dataclass(frozen=True, eq=False)
class OrthoData:
    """Degree-k orthogonal polynomial data for a symbol on the circle.

    ``monic`` and ``hat_monic`` hold coefficient vectors (ascending powers,
    leading coefficient exactly 1); ``chi`` is the leading coefficient of
    the orthonormal polynomial, with chi^2 = D_k / D_{k+1}.
    """

    degree: int
    chi: complex
    chi_sq: complex
    monic: np.ndarray
    hat_monic: np.ndarray
    phi0: complex
    hatphi0: complex
    residual: float
    quality: str = "ok"

    @property
    def monic_at_zero(self) -> complex:
        return complex(self.monic[0])

    @property
    def hat_monic_at_zero(self) -> complex:
        return complex(self.hat_monic[0])

    def monic_value(self, z: complex) -> complex:
        # compensated evaluation of the monic polynomial at z
        terms = [c * z ** p for p, c in enumerate(self.monic)]
        return complex(math.fsum(t.real for t in terms),
                       math.fsum(t.imag for t in terms))


def _logdet_lu(a: np.ndarray) -> tuple[LogComplex, str]:
    n = a.shape[0]
    if n == 0:
        return LogComplex.one(), "ok"
    scale = float(np.max(np.abs(a)))
    if scale == 0.0:
        return LogComplex.zero(), "ok"
    lu, piv = scipy.linalg.lu_factor(a, check_finite=False)
    diag = np.diag(lu)
    swaps = int(np.sum(piv != np.arange(n)))
    if np.any(diag == 0):
        return LogComplex.zero(), "singular"
    log_mag = float(np.sum(np.log(np.abs(diag))))
    arg = float(np.sum(np.angle(diag))) + math.pi * swaps
    quality = "ok"
    growth = float(np.max(np.abs(np.triu(lu)))) / scale
    dmin, dmax = float(np.min(np.abs(diag))), float(np.max(np.abs(diag)))
    if growth > _GROWTH_LIMIT or dmin / dmax < _PIVOT_RATIO_LIMIT:
        quality = "ill-conditioned"
    return LogComplex(log_mag, arg), quality


def _as_table(fcoeffs) -> CoeffTable:
    if isinstance(fcoeffs, CoeffTable):
        return fcoeffs
    arr = np.asarray(fcoeffs, dtype=complex)
    if arr.ndim != 1 or arr.size % 2 != 1:
        raise ValueError("plain coefficient arrays must be odd-length, centered at j=0")
    return CoeffTable(-(arr.size // 2), arr)


def _toeplitz_matrix(table: CoeffTable, n: int) -> np.ndarray:
    col = table.window(0, n - 1)
    row = table.window(-(n - 1), 0)[::-1]
    return scipy.linalg.toeplitz(col, row)


def toeplitz_det_info(fcoeffs, n: int) -> DeterminantValue:
    """det(f_{j-k}), j,k = 0..n-1, with a conditioning quality flag."""
    if n < 1:
        raise ValueError("n must be >= 1")
    table = _as_table(fcoeffs)
    value, quality = _logdet_lu(_toeplitz_matrix(table, n))
    return DeterminantValue(value, n, quality)


def toeplitz_det(fcoeffs, n: int) -> LogComplex:
    return toeplitz_det_info(fcoeffs, n).value


def _weight_grid(w: HankelWeight, tol: float, max_power: int):
    pts = [-1.0] + [p.lam for p in reversed(w.interior)] + [1.0]
    depths = [grading_depth(w.alpha_minus.real, 1.0, tol)]
    for p in reversed(w.interior):
        depths.append(grading_depth(p.alpha.real, 1.0, tol) if p.alpha != 0 else 0)
    depths.append(grading_depth(w.alpha_plus.real, 1.0, tol))
    h_max = min(0.25, 4.0 / max(1, max_power))
    return split_grid(pts, depths, -1.0, 1.0, h_max)


def hankel_moments(w: HankelWeight, max_power: int, tol: float) -> np.ndarray:
    """Moments int_{-1}^{1} x^q w(x) dx for q = 0..max_power."""
    nodes, weights = _weight_grid(w, tol, max_power)
    wv = eval_weight_many(w, nodes) * weights
    powers = np.vander(nodes, max_power + 1, increasing=True)
    return powers.T @ wv


def hankel_det_info(w: HankelWeight, n: int, tol: float) -> DeterminantValue:
    """Determinant of the moment matrix (m_{j+k}), j,k = 0..n-1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = hankel_moments(w, 2 * n - 2, tol)
    value, quality = _logdet_lu(scipy.linalg.hankel(m[:n], m[n - 1:]))
    return DeterminantValue(value, n, quality)


def hankel_det(w: HankelWeight, n: int, tol: float = 1e-12) -> LogComplex:
    return hankel_det_info(w, n, tol).value


def tph_det(fcoeffs, n: int, variant: str) -> LogComplex:
    """Toeplitz+Hankel determinant det(f_{j-k} +/- f_{j+k+c}) for an even symbol."""
    if variant not in _TPH_STRUCTURE:
        raise ValueError(f"unknown variant {variant!r}; expected one of {TPH_VARIANTS}")
    table = _as_table(fcoeffs)
    sign, c = _TPH_STRUCTURE[variant]
    top = 2 * (n - 1) + c
    win = table.window(-top, top) if top > 0 else table.window(0, 0)
    scale = max(float(np.max(np.abs(win))), 1e-30)
    for j in range(1, top + 1):
        if abs(table[j] - table[-j]) > 1e-10 * scale:
            raise ValueError(f"symbol is not even: f_{j} != f_{-j}")
    toep = _toeplitz_matrix(table, n)
    hank = np.array([[table[int(j + k + c)] for k in range(n)] for j in range(n)])
    value, _ = _logdet_lu(toep + sign * hank)
    return value


def orthogonal_polynomials(fcoeffs, k: int) -> OrthoData:
    """Monic orthogonal polynomial data of degree k from the moment system.

    Solves the k x k Toeplitz systems for the two monic families, and takes
    chi from the determinant ratio D_k / D_{k+1} (principal square root,
    positive real when the ratio is positive real).
    """
    if k < 0:
        raise ValueError("degree must be >= 0")
    table = _as_table(fcoeffs)
    if table.j_min > -k or table.j_max < k:
        raise ValueError(f"need coefficients for |j| <= {k}")

    if k == 0:
        f0 = table[0]
        if f0 == 0:
            raise SingularSystemError("determinant vanishes at k=1")
        chi_sq = 1.0 / f0
        chi = cmath.sqrt(chi_sq)
        one = np.array([1.0 + 0j])
        return OrthoData(0, chi, chi_sq, one, one, chi, chi, 0.0)

    m = _toeplitz_matrix(table, k)
    rhs = -np.array([table[j - k] for j in range(k)])
    rhs_hat = -np.array([table[k - j] for j in range(k)])
    try:
        lu, piv = scipy.linalg.lu_factor(m, check_finite=False)
    except scipy.linalg.LinAlgError as exc:
        raise SingularSystemError(f"determinant vanishes at k={k}") from exc
    if np.any(np.diag(lu) == 0):
        raise SingularSystemError(f"determinant vanishes at k={k}")
    a = scipy.linalg.lu_solve((lu, piv), rhs)
    a_hat = scipy.linalg.lu_solve((lu, piv), rhs_hat, trans=1)

    monic = np.concatenate([a, [1.0 + 0j]])
    hat_monic = np.concatenate([a_hat, [1.0 + 0j]])

    # orthogonality residual, relative to the matrix scale
    scale = float(np.max(np.abs(m))) * max(1.0, float(np.max(np.abs(monic))))
    res = max(
        float(np.max(np.abs(m @ a - rhs))),
        float(np.max(np.abs(m.T @ a_hat - rhs_hat))),
    ) / scale

    d_k, q1 = _logdet_lu(_toeplitz_matrix(table, k))
    d_k1, q2 = _logdet_lu(_toeplitz_matrix(table, k + 1))
    if d_k.is_zero or d_k1.is_zero:
        raise SingularSystemError(f"determinant vanishes at k={k}")
    chi_sq = (d_k / d_k1).to_complex()

    # independent route: 1/chi^2 = sum_p A_p f_{k-p}
    chi_sq_solve = 1.0 / complex(np.dot(monic, np.array([table[k - p] for p in range(k + 1)])))
    quality = "ok"
    if abs(chi_sq / chi_sq_solve - 1.0) > 1e-8 or res > 1e-8 or "ill" in (q1, q2):
        quality = "ill-conditioned"

    chi = cmath.sqrt(chi_sq)
    return OrthoData(k, chi, chi_sq, monic, hat_monic,
                     chi * monic[0], chi * hat_monic[0], res, quality)


def monic_derivatives_at_zero(data: OrthoData, max_order: int) -> np.ndarray:
    """(d^p/dz^p) Phi_k(0) = p! [z^p] Phi_k for p = 0..max_order."""
    if max_order >= data.degree and data.degree > 0:
        raise ValueError("max_order must be below the degree")
    return np.array([math.factorial(p) * data.monic[p] for p in range(max_order + 1)])


def rel_residual(lhs: LogComplex, rhs: LogComplex) -> float:
    """|L - R| / max(|L|, |R|); zero when both are exact zeros."""
    if lhs.is_zero and rhs.is_zero:
        return 0.0
    if lhs.is_zero or rhs.is_zero:
        return 1.0
    if lhs.log_mag >= rhs.log_mag:
        ratio = (rhs / lhs).to_complex()
    else:
        ratio = (lhs / rhs).to_complex()
    return abs(ratio - 1.0)


def check_shift_identity(f: FHSymbol, n: int, ell: int, tol: float = 1e-12) -> float:
    """Relative residual of the exact relation between det(z^ell f) and det(f).

    For ell >= 1 the ratio is (-1)^{ell n} F_n / prod_{j<ell} j! with F_n the
    ell x ell determinant of derivatives of the monic polynomials at zero;
    for ell = -1 it is (-1)^n Phi_hat_n(0).
    """
    if ell == 0:
        raise ValueError("ell must be a nonzero integer")
    if ell < -1:
        raise ValueError("only ell >= 1 and ell = -1 are implemented")
    j_need = n + abs(ell) + max(0, ell)
    table = coeff_table(f, j_need, tol)
    d_n = toeplitz_det(table, n)
    lhs = toeplitz_det(table.shifted(ell), n)

    if ell >= 1:
        fmat = np.empty((ell, ell), dtype=complex)
        for col in range(ell):
            data = orthogonal_polynomials(table, n + col)
            fmat[:, col] = monic_derivatives_at_zero(data, ell - 1)
        f_n = complex(np.linalg.det(fmat)) if ell > 1 else complex(fmat[0, 0])
        denom = 1.0
        for j in range(1, ell):
            denom *= math.factorial(j)
        factor = LogComplex.from_complex((-1.0) ** ((ell * n) % 2) * f_n / denom)
    else:
        data = orthogonal_polynomials(table, n)
        factor = LogComplex.from_complex((-1.0) ** (n % 2) * data.hat_monic_at_zero)

    rhs = factor * d_n
    return rel_residual(lhs, rhs)


def check_hankel_toeplitz_relation(w: HankelWeight, n: int, tol: float = 1e-12) -> float:
    """Residual of the square bridge between D_n(w) and D_{2n} of its even symbol.

    D_n(w)^2 = pi^{2n} 4^{-(n-1)^2}
               (1 + Phi_{2n}(0))^2 / (Phi_{2n}(1) Phi_{2n}(-1)) * D_{2n}(f).
    """
    f = weight_to_even_symbol(w)
    table = coeff_table(f, 2 * n + 1, tol)
    data = orthogonal_polynomials(table, 2 * n)
    d2n = toeplitz_det(table, 2 * n)
    dnw = hankel_det(w, n, tol)

    phi_at = {
        0: 1.0 + data.monic_at_zero,
        1: data.monic_value(1.0),
        -1: data.monic_value(-1.0),
    }
    num = LogComplex.from_complex(phi_at[0]).pow_real(2.0)
    den = LogComplex.from_complex(phi_at[1]) * LogComplex.from_complex(phi_at[-1])
    const = LogComplex(2 * n * math.log(math.pi) - (n - 1) ** 2 * math.log(4.0), 0.0)
    rhs = const * num / den * d2n
    lhs = dnw.pow_real(2.0)
    return rel_residual(lhs, rhs)


def _tph_weight(f: FHSymbol, variant: str) -> HankelWeight:
    w = even_symbol_to_weight(f)
    d_plus = {"plus_k": 0.0, "minus_k2": 0.5, "plus_k1": 0.0, "minus_k1": 0.5}[variant]
    d_minus = {"plus_k": 0.0, "minus_k2": 0.5, "plus_k1": 0.5, "minus_k1": 0.0}[variant]
    return HankelWeight(w.U, w.interior, w.alpha_plus + d_plus, w.alpha_minus + d_minus)


def check_tph_reduction(f: FHSymbol, n: int, variant: str, tol: float = 1e-12) -> float:
    """Residual of det(f_{j-k} +/- f_{j+k+c}) against the weighted Hankel form."""
    if variant not in _TPH_STRUCTURE:
        raise ValueError(f"unknown variant {variant!r}")
    table = coeff_table(f, 2 * n + 2, tol)
    lhs = tph_det(table, n, variant)
    w = _tph_weight(f, variant)
    log2pow = {
        "plus_k": n * n - 2 * n + 2,
        "minus_k2": n * n,
        "plus_k1": n * n - n,
        "minus_k1": n * n - n,
    }[variant]
    const = LogComplex(log2pow * math.log(2.0) - n * math.log(math.pi), 0.0)
    rhs = const * hankel_det(w, n, tol)
    return rel_residual(lhs, rhs)


def scan_vanishing(fcoeffs, k_max: int) -> list[int]:
    """Dimensions k <= k_max whose Toeplitz determinant is zero or untrustworthy."""
    table = _as_table(fcoeffs)
    out = []
    for k in range(1, k_max + 1):
        info = toeplitz_det_info(table, k)
        if info.value.is_zero or info.quality != "ok":
            out.append(k)
    return out
