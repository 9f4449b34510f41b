"""Fisher-Hartwig symbols on the unit circle and singular weights on [-1, 1].

A symbol is a smooth log-part (finite Fourier series) times a finite list of
singular factors |z - z_j|^(2 alpha_j) and jump factors with exponents
beta_j.  This module constructs symbols, evaluates them, computes Fourier
coefficients by graded-panel quadrature, produces Wiener-Hopf data, handles
integer shifts of the beta-parameters (representations), and maps Hankel
weights to their associated even symbols.

Symbols are immutable after construction; every operation here is pure, so
concurrent evaluation over grids or coefficient indices is safe.
"""

from __future__ import annotations

import cmath
import itertools
import json
import math
from dataclasses import dataclass

import numpy as np

from ._quadrature import grading_depth, split_grid
from .errors import ConfigError, ConvergenceError
from .specfun import log_gamma, recip_gamma

__all__ = [
    "FourierSeries",
    "Singularity",
    "FHSymbol",
    "Representation",
    "WeightSingularity",
    "HankelWeight",
    "CoeffTable",
    "eval_symbol",
    "eval_symbol_many",
    "eval_weight_many",
    "fourier_coefficients",
    "coeff_table",
    "wiener_hopf_logs",
    "szego_pair_sum",
    "beta_seminorm",
    "find_minimal_representations",
    "apply_representation",
    "is_degenerate",
    "weight_to_even_symbol",
    "even_symbol_to_weight",
    "is_even_symbol",
    "symbol_from_dict",
    "symbol_to_dict",
    "weight_from_dict",
    "weight_to_dict",
    "load_config",
]

TWO_PI = 2.0 * math.pi
_GL_POINTS_PER_WAVE = 48.0  # cell length cap: h <= this / max|j|


# ---------------------------------------------------------------------------
# data types
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FourierSeries:
    """Finite Fourier series sum_{|k| <= N} c_k z^k stored densely.

    ``coeffs[N + k]`` holds c_k.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=complex)
        if arr.ndim != 1 or arr.size % 2 != 1:
            raise ValueError("coefficient array must be 1-d with odd length")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    @classmethod
    def zero(cls) -> "FourierSeries":
        return cls(np.zeros(1, dtype=complex))

    @classmethod
    def from_pairs(cls, pairs) -> "FourierSeries":
        pairs = list(pairs)
        if not pairs:
            return cls.zero()
        ks = [int(k) for k, _ in pairs]
        if len(set(ks)) != len(ks):
            raise ValueError("duplicate Fourier index")
        n = max(abs(k) for k in ks)
        arr = np.zeros(2 * n + 1, dtype=complex)
        for k, v in pairs:
            arr[n + int(k)] = complex(v)
        return cls(arr)

    @property
    def order(self) -> int:
        return (self.coeffs.size - 1) // 2

    def coefficient(self, k: int) -> complex:
        n = self.order
        if abs(k) > n:
            return 0j
        return complex(self.coeffs[n + k])

    def values(self, thetas: np.ndarray) -> np.ndarray:
        th = np.asarray(thetas, dtype=float)
        n = self.order
        out = np.zeros(th.shape, dtype=complex)
        for i, c in enumerate(self.coeffs):
            if c != 0:
                out += c * np.exp(1j * (i - n) * th)
        return out

    def is_conjugate_symmetric(self, tol: float = 1e-13) -> bool:
        scale = max(1.0, float(np.max(np.abs(self.coeffs))))
        return bool(np.max(np.abs(self.coeffs - np.conj(self.coeffs[::-1]))) <= tol * scale)

    def is_even(self, tol: float = 1e-13) -> bool:
        scale = max(1.0, float(np.max(np.abs(self.coeffs))))
        return bool(np.max(np.abs(self.coeffs - self.coeffs[::-1])) <= tol * scale)

    def with_constant(self, c0: complex) -> "FourierSeries":
        arr = self.coeffs.copy()
        arr[self.order] = c0
        return FourierSeries(arr)


@dataclass(frozen=True)
class Singularity:
    """One singular point z_j = exp(i theta_j) with exponents (alpha, beta)."""

    theta: float
    alpha: complex
    beta: complex

    def __post_init__(self):
        object.__setattr__(self, "theta", float(self.theta))
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        if not 0.0 <= self.theta < TWO_PI:
            raise ValueError(f"theta must lie in [0, 2*pi), got {self.theta}")
        if self.alpha.real <= -0.5:
            raise ValueError(f"Re alpha must exceed -1/2 for integrability, got {self.alpha}")

    @property
    def is_trivial(self) -> bool:
        return self.alpha == 0 and self.beta == 0

    @property
    def z(self) -> complex:
        return cmath.exp(1j * self.theta)


@dataclass(frozen=True, eq=False)
class FHSymbol:
    """A Fisher-Hartwig symbol: smooth part V plus ordered singularities.

    The singularity list is sorted by angle and always begins with theta = 0
    (a trivial entry is inserted there when absent).
    """

    V: FourierSeries
    singularities: tuple[Singularity, ...]

    def __post_init__(self):
        sings = sorted(self.singularities, key=lambda s: s.theta)
        thetas = [s.theta for s in sings]
        if len(set(thetas)) != len(thetas):
            raise ValueError("singular angles must be strictly increasing")
        if not sings or sings[0].theta != 0.0:
            sings.insert(0, Singularity(0.0, 0j, 0j))
        object.__setattr__(self, "singularities", tuple(sings))
        if not isinstance(self.V, FourierSeries):
            object.__setattr__(self, "V", FourierSeries(np.asarray(self.V, dtype=complex)))

    @property
    def thetas(self) -> np.ndarray:
        return np.array([s.theta for s in self.singularities])

    @property
    def alphas(self) -> np.ndarray:
        return np.array([s.alpha for s in self.singularities])

    @property
    def betas(self) -> np.ndarray:
        return np.array([s.beta for s in self.singularities])

    @property
    def singular_indices(self) -> tuple[int, ...]:
        return tuple(j for j, s in enumerate(self.singularities) if not s.is_trivial)

    def with_betas(self, betas) -> "FHSymbol":
        sings = tuple(
            Singularity(s.theta, s.alpha, b)
            for s, b in zip(self.singularities, betas)
        )
        return FHSymbol(self.V, sings)


@dataclass(frozen=True)
class Representation:
    """An integer shift of the beta-parameters, sum of shifts zero.

    Only singular points may carry a nonzero shift; the represented function
    differs from the base symbol by the constant prod z_j^{n_j}.
    """

    base: FHSymbol
    shifts: tuple[int, ...]

    def __post_init__(self):
        shifts = tuple(int(n) for n in self.shifts)
        object.__setattr__(self, "shifts", shifts)
        if len(shifts) != len(self.base.singularities):
            raise ValueError("shift vector length must match the singularity list")
        if sum(shifts) != 0:
            raise ValueError("shifts must sum to zero")
        for s, n in zip(self.base.singularities, shifts):
            if n != 0 and s.is_trivial:
                raise ValueError("only singular points may be shifted")

    @property
    def effective_betas(self) -> tuple[complex, ...]:
        return tuple(s.beta + n for s, n in zip(self.base.singularities, self.shifts))

    @property
    def log_prefactor(self) -> complex:
        # log of prod z_j^{n_j} with z_j = exp(i theta_j)
        return 1j * sum(n * s.theta for s, n in zip(self.base.singularities, self.shifts))

    def shifted_symbol(self) -> FHSymbol:
        return self.base.with_betas(self.effective_betas)


@dataclass(frozen=True)
class WeightSingularity:
    """Interior singular point of a weight on (-1, 1)."""

    lam: float
    alpha: complex
    beta: complex

    def __post_init__(self):
        object.__setattr__(self, "lam", float(self.lam))
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        if not -1.0 < self.lam < 1.0:
            raise ValueError(f"interior point must lie in (-1, 1), got {self.lam}")
        if self.alpha.real <= -0.5:
            raise ValueError(f"Re alpha must exceed -1/2, got {self.alpha}")
        if not -0.5 < self.beta.real < 0.5:
            raise ValueError(f"Re beta must lie in (-1/2, 1/2), got {self.beta}")


@dataclass(frozen=True, eq=False)
class HankelWeight:
    """Weight w(x) = e^{U(x)} |x-1|^{2 a+} |x+1|^{2 a-} prod |x-l_j|^{2 a_j} w_j(x).

    ``U`` stores the circle-side log series: U(x) = V(e^{i theta}) at
    x = cos theta, which forces the stored series to be even in k.  Interior
    points are kept strictly decreasing in lambda; the jumps at the two
    endpoints are trivial by convention.
    """

    U: FourierSeries
    interior: tuple[WeightSingularity, ...]
    alpha_plus: complex  # exponent at x = +1
    alpha_minus: complex  # exponent at x = -1

    def __post_init__(self):
        object.__setattr__(self, "alpha_plus", complex(self.alpha_plus))
        object.__setattr__(self, "alpha_minus", complex(self.alpha_minus))
        pts = tuple(sorted(self.interior, key=lambda p: -p.lam))
        lams = [p.lam for p in pts]
        if len(set(lams)) != len(lams):
            raise ValueError("interior points must be strictly decreasing")
        object.__setattr__(self, "interior", pts)
        if self.alpha_plus.real <= -0.5 or self.alpha_minus.real <= -0.5:
            raise ValueError("endpoint exponents must have Re alpha > -1/2")
        if not self.U.is_even():
            raise ValueError("log-weight series must be even (U_k = U_{-k})")


@dataclass(frozen=True, eq=False)
class CoeffTable:
    """Fourier coefficients f_j for j_min <= j <= j_max, densely stored."""

    j_min: int
    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=complex).copy()
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "j_min", int(self.j_min))

    @property
    def j_max(self) -> int:
        return self.j_min + self.values.size - 1

    def __getitem__(self, j: int) -> complex:
        if not self.j_min <= j <= self.j_max:
            raise IndexError(f"coefficient f_{j} outside table [{self.j_min}, {self.j_max}]")
        return complex(self.values[j - self.j_min])

    def window(self, a: int, b: int) -> np.ndarray:
        """Coefficients f_a .. f_b inclusive."""
        if a < self.j_min or b > self.j_max:
            raise IndexError(f"window [{a}, {b}] outside table [{self.j_min}, {self.j_max}]")
        return self.values[a - self.j_min: b - self.j_min + 1]

    def shifted(self, ell: int) -> "CoeffTable":
        """Table of the symbol z^ell f, i.e. g_j = f_{j - ell}."""
        return CoeffTable(self.j_min + ell, self.values)


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def eval_symbol_many(f: FHSymbol, thetas: np.ndarray) -> np.ndarray:
    """Vectorized symbol values; assumes no node sits on a negative-power
    singularity."""
    th = np.asarray(thetas, dtype=float)
    beta_sum = complex(np.sum(f.betas))
    out = np.exp(f.V.values(th) + 1j * beta_sum * th)
    for s in f.singularities:
        if s.alpha != 0:
            root = np.abs(2.0 * np.sin(0.5 * (th - s.theta)))
            if s.alpha.real > 0:
                vals = np.zeros(th.shape, dtype=complex)
                nz = root > 0
                vals[nz] = np.exp(2.0 * s.alpha * np.log(root[nz]))
            else:
                with np.errstate(divide="ignore"):
                    vals = np.exp(2.0 * s.alpha * np.log(root))
            out = out * vals
        if s.beta != 0:
            jump = np.where(th < s.theta,
                            cmath.exp(1j * math.pi * s.beta),
                            cmath.exp(-1j * math.pi * s.beta))
            out = out * jump * cmath.exp(-1j * s.theta * s.beta)
    return out


def eval_symbol(f: FHSymbol, theta: float) -> complex:
    """Symbol value at one angle.

    The jump factor is left-closed: at theta = theta_j exactly, the branch
    for theta >= theta_j applies.
    """
    theta = float(theta)
    if not 0.0 <= theta < TWO_PI:
        raise ValueError(f"theta must lie in [0, 2*pi), got {theta}")
    for s in f.singularities:
        if theta == s.theta and s.alpha.real < 0:
            raise ValueError(f"symbol unbounded at singular angle theta={theta}")
    return complex(eval_symbol_many(f, np.array([theta]))[0])


def eval_weight_many(w: HankelWeight, x: np.ndarray) -> np.ndarray:
    """Vectorized weight values on (-1, 1)."""
    x = np.asarray(x, dtype=float)
    th = np.arccos(np.clip(x, -1.0, 1.0))
    out = np.exp(w.U.values(th))

    def root_factor(base: np.ndarray, alpha: complex) -> np.ndarray:
        if alpha == 0:
            return np.ones(base.shape, dtype=complex)
        vals = np.zeros(base.shape, dtype=complex)
        nz = base > 0
        if alpha.real > 0:
            vals[nz] = np.exp(2.0 * alpha * np.log(base[nz]))
        else:
            vals[nz] = np.exp(2.0 * alpha * np.log(base[nz]))
            vals[~nz] = np.inf
        return vals

    out = out * root_factor(np.abs(x - 1.0), w.alpha_plus)
    out = out * root_factor(np.abs(x + 1.0), w.alpha_minus)
    for p in w.interior:
        out = out * root_factor(np.abs(x - p.lam), p.alpha)
        if p.beta != 0:
            jump = np.where(x < p.lam,
                            cmath.exp(1j * math.pi * p.beta),
                            cmath.exp(-1j * math.pi * p.beta))
            out = out * jump
    return out


# ---------------------------------------------------------------------------
# Fourier coefficients
# ---------------------------------------------------------------------------

def _circle_grid(f: FHSymbol, tol: float, j_abs_max: int, extra_depth: int = 0):
    depths = []
    for s in f.singularities:
        if s.alpha != 0:
            depths.append(grading_depth(s.alpha.real, math.pi, tol) + extra_depth)
        else:
            # jump-only or trivial points: the integrand is one-sidedly
            # analytic there, a panel boundary suffices
            depths.append(0)
    # the theta = 0 singularity is also reached from the left at 2*pi
    pts = list(f.thetas) + [TWO_PI]
    dps = depths + [depths[0]]
    h_max = min(1.0, _GL_POINTS_PER_WAVE / max(1, j_abs_max))
    return split_grid(pts, dps, 0.0, TWO_PI, h_max)


def _coeffs_on_grid(fw: np.ndarray, nodes: np.ndarray, js: np.ndarray) -> np.ndarray:
    out = np.empty(js.size, dtype=complex)
    chunk = 64
    for i in range(0, js.size, chunk):
        jj = js[i: i + chunk]
        out[i: i + chunk] = np.exp(-1j * np.outer(jj, nodes)) @ fw
    return out


def _is_pure_single(f: FHSymbol):
    """A single nontrivial singularity and V identically zero."""
    if np.any(f.V.coeffs != 0):
        return None
    nontrivial = [s for s in f.singularities if not s.is_trivial]
    if len(nontrivial) == 1:
        return nontrivial[0]
    return None


def _closed_form_single(s: Singularity, js: np.ndarray) -> np.ndarray:
    # f_j = z0^{-j} (-1)^j Gamma(1+2a) / (Gamma(1+a+b-j) Gamma(1+a-b+j))
    lg_top = log_gamma(1.0 + 2.0 * s.alpha)
    out = np.empty(js.size, dtype=complex)
    for i, j in enumerate(js):
        r1 = recip_gamma(1.0 + s.alpha + s.beta - j)
        r2 = recip_gamma(1.0 + s.alpha - s.beta + j)
        if r1 == 0 or r2 == 0:
            out[i] = 0j
        else:
            out[i] = cmath.exp(lg_top) * r1 * r2
        out[i] *= (-1.0) ** (int(j) % 2) * cmath.exp(-1j * j * s.theta)
    return out


def fourier_coefficients(f: FHSymbol, j_min: int, j_max: int, tol: float,
                         *, method: str = "auto") -> np.ndarray:
    """Fourier coefficients f_j = (1/2pi) int f(e^{i theta}) e^{-i j theta}.

    Graded-panel Gauss-Legendre quadrature is the reference path; symbols
    that are a pure single root-jump factor may be routed through a
    Gamma-ratio closed form after a probe validation against the quadrature.

    Raises ConvergenceError when a refinement probe disagrees by more than
    the tolerance.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if j_min > j_max:
        raise ValueError("empty coefficient range")
    if method not in ("auto", "quadrature", "closed_form"):
        raise ValueError(f"unknown method {method!r}")
    js = np.arange(j_min, j_max + 1)

    single = _is_pure_single(f) if method in ("auto", "closed_form") else None
    if method == "closed_form":
        if single is None:
            raise ValueError("closed form requires a pure single-singularity symbol")
        return _closed_form_single(single, js)

    j_abs = max(abs(j_min), abs(j_max), 1)
    nodes, weights = _circle_grid(f, tol, j_abs)
    fw = eval_symbol_many(f, nodes) * weights / TWO_PI
    vals = _coeffs_on_grid(fw, nodes, js)
    scale = max(float(np.max(np.abs(vals))), 1e-30)

    # refinement probe: recompute a few coefficients on a finer grid; the
    # accuracy target is absolute, relative to the largest coefficient
    probe = np.unique(np.array([j_min, 0, j_max]))
    fine_nodes, fine_w = _circle_grid(f, tol * 1e-2, 2 * j_abs, extra_depth=4)
    fine_fw = eval_symbol_many(f, fine_nodes) * fine_w / TWO_PI
    coarse_probe = _coeffs_on_grid(fw, nodes, probe)
    fine_probe = _coeffs_on_grid(fine_fw, fine_nodes, probe)
    if float(np.max(np.abs(coarse_probe - fine_probe))) > 10.0 * tol * scale:
        raise ConvergenceError(
            "graded quadrature failed to reach the requested tolerance")

    if single is not None:
        closed = _closed_form_single(single, probe)
        if float(np.max(np.abs(closed - fine_probe))) <= 1e-10 * scale:
            return _closed_form_single(single, js)

    return vals


def coeff_table(f: FHSymbol, j_abs_max: int, tol: float = 1e-12, *,
                method: str = "auto") -> CoeffTable:
    """Symmetric coefficient window |j| <= j_abs_max as a CoeffTable."""
    vals = fourier_coefficients(f, -j_abs_max, j_abs_max, tol, method=method)
    return CoeffTable(-j_abs_max, vals)


# ---------------------------------------------------------------------------
# Wiener-Hopf data and the smooth-part pair sum
# ---------------------------------------------------------------------------

def wiener_hopf_logs(V: FourierSeries, theta: float) -> tuple[complex, complex, complex]:
    """(log b_+(z), V_0, log b_-(z)) at z = e^{i theta}.

    The logs are the literal truncated series sum_{k>0} V_k z^k and
    sum_{k<0} V_k z^k; powers of b_+- must be taken through these values so
    no branch ambiguity arises.
    """
    z = cmath.exp(1j * float(theta))
    n = V.order
    log_plus = 0j
    log_minus = 0j
    for k in range(1, n + 1):
        ck = V.coefficient(k)
        if ck != 0:
            log_plus += ck * z ** k
        cmk = V.coefficient(-k)
        if cmk != 0:
            log_minus += cmk * z ** (-k)
    return log_plus, V.coefficient(0), log_minus


def szego_pair_sum(V: FourierSeries) -> complex:
    """sum_{k=1}^{N} k V_k V_{-k}."""
    return sum(k * V.coefficient(k) * V.coefficient(-k)
               for k in range(1, V.order + 1)) + 0j


# ---------------------------------------------------------------------------
# representations
# ---------------------------------------------------------------------------

def _effective(obj) -> tuple[FHSymbol, tuple[complex, ...]]:
    if isinstance(obj, Representation):
        return obj.base, obj.effective_betas
    return obj, tuple(s.beta for s in obj.singularities)


def beta_seminorm(obj) -> float:
    """max |Re beta_j - Re beta_k| over pairs of singular points."""
    f, betas = _effective(obj)
    idx = f.singular_indices
    if len(idx) < 2:
        return 0.0
    re = [betas[j].real for j in idx]
    return max(re) - min(re)


def apply_representation(rep: Representation) -> tuple[FHSymbol, complex]:
    """The shifted symbol together with log of the scalar prefactor."""
    return rep.shifted_symbol(), rep.log_prefactor


def is_degenerate(rep: Representation, tol: float = 1e-10):
    """Whether some alpha_j +/- (beta_j + n_j) is a negative integer.

    Returns (flag, offending index or None).
    """
    offenders = _degeneracies(rep, tol)
    if offenders:
        return True, offenders[0][0]
    return False, None


def _degeneracies(rep: Representation, tol: float = 1e-10):
    out = []
    for j, (s, b) in enumerate(zip(rep.base.singularities, rep.effective_betas)):
        for sign in (+1, -1):
            v = s.alpha + sign * b
            if abs(v.imag) <= tol:
                r = round(v.real)
                if r <= -1 and abs(v.real - r) <= tol:
                    out.append((j, sign, v))
    return out


def find_minimal_representations(f: FHSymbol, *, tie_tol: float = 1e-9) -> list[Representation]:
    """All integer shift vectors minimizing sum_j (Re beta_j + n_j)^2.

    The reduction repeatedly raises a minimal-real-part beta by one while
    lowering a maximal one, until the spread is at most 1; candidate
    minimizers then differ from the reduced vector by raising some of the
    minimal entries and lowering equally many maximal ones.  Equal objectives
    are resolved with ``tie_tol`` and all ties are returned.
    """
    m1 = len(f.singularities)
    idx = list(f.singular_indices)
    if len(idx) <= 1:
        return [Representation(f, (0,) * m1)]

    re0 = np.array([f.singularities[j].beta.real for j in idx])
    shift = np.zeros(len(idx), dtype=int)
    # reduction phase; each step strictly lowers the objective while the
    # spread exceeds 1, so it terminates
    for _ in range(100_000):
        cur = re0 + shift
        s, t = int(np.argmin(cur)), int(np.argmax(cur))
        if cur[t] - cur[s] <= 1.0 + 1e-12:
            break
        shift[s] += 1
        shift[t] -= 1
    else:
        raise RuntimeError("representation reduction failed to terminate")

    cur = re0 + shift
    base_obj = float(np.sum(cur ** 2))
    lo, hi = float(np.min(cur)), float(np.max(cur))
    near_min = [i for i in range(len(idx)) if cur[i] <= lo + tie_tol]
    near_max = [i for i in range(len(idx)) if cur[i] >= hi - tie_tol]

    best = base_obj
    candidates: list[tuple[int, ...]] = []
    max_swaps = min(len(near_min), len(near_max))
    for k in range(0, max_swaps + 1):
        for raise_set in itertools.combinations(near_min, k):
            for lower_set in itertools.combinations(near_max, k):
                if set(raise_set) & set(lower_set):
                    continue
                v = shift.copy()
                for i in raise_set:
                    v[i] += 1
                for i in lower_set:
                    v[i] -= 1
                obj = float(np.sum((re0 + v) ** 2))
                if obj < best - tie_tol:
                    best = obj
                    candidates = [tuple(v)]
                elif obj <= best + tie_tol:
                    if tuple(v) not in candidates:
                        candidates.append(tuple(v))

    # drop members that ceased to be ties after the final minimum settled
    kept = []
    for v in candidates:
        if float(np.sum((re0 + np.array(v)) ** 2)) <= best + tie_tol:
            kept.append(v)

    reps = []
    for v in sorted(kept):
        full = [0] * m1
        for i, j in enumerate(idx):
            full[j] = int(v[i])
        reps.append(Representation(f, tuple(full)))
    return reps


# ---------------------------------------------------------------------------
# weight <-> even symbol bridge
# ---------------------------------------------------------------------------

def _bridge_constant(w: HankelWeight) -> complex:
    # constant absorbed into the smooth part so that f = w(cos th)|sin th|:
    # 2-powers from |x - l|^(2a) = (|z-z_j||z-conj z_j}|/2)^(2a) and from
    # |sin th| = |z-1||z+1|/2, plus the jump-pairing phase
    c = (2.0 * w.alpha_plus + 2.0 * w.alpha_minus + 1.0) * math.log(2.0)
    c += sum(2.0 * p.alpha for p in w.interior) * math.log(2.0)
    phase = sum(p.beta * (2.0 * math.acos(p.lam) - math.pi) for p in w.interior)
    return c + 1j * phase


def weight_to_even_symbol(w: HankelWeight) -> FHSymbol:
    """The even symbol f with w(x) = f(e^{i theta}) / |sin theta|, x = cos theta."""
    sings = [Singularity(0.0, 2.0 * w.alpha_plus + 0.5, 0j)]
    for p in w.interior:
        th = math.acos(p.lam)
        sings.append(Singularity(th, p.alpha, -p.beta))
        sings.append(Singularity(TWO_PI - th, p.alpha, p.beta))
    sings.append(Singularity(math.pi, 2.0 * w.alpha_minus + 0.5, 0j))
    v0 = w.U.coefficient(0) - _bridge_constant(w)
    return FHSymbol(w.U.with_constant(v0), tuple(sings))


def is_even_symbol(f: FHSymbol, tol: float = 1e-12) -> bool:
    """Structural test of f(e^{i theta}) = f(e^{-i theta})."""
    if not f.V.is_even(tol):
        return False
    for s in f.singularities:
        if s.theta == 0.0 or abs(s.theta - math.pi) <= tol:
            if abs(s.beta) > tol:
                return False
            continue
        mirror = next((t for t in f.singularities
                       if abs(TWO_PI - s.theta - t.theta) <= tol), None)
        if mirror is None:
            return False
        if abs(mirror.alpha - s.alpha) > tol or abs(mirror.beta + s.beta) > tol:
            return False
    return True


def even_symbol_to_weight(f: FHSymbol) -> HankelWeight:
    """Inverse bridge: the weight w with f(e^{i theta}) = w(cos theta)|sin theta|."""
    if not is_even_symbol(f):
        raise ValueError("symbol is not even")
    alpha_plus = -0.25 + 0j
    alpha_minus = -0.25 + 0j
    interior = []
    for s in f.singularities:
        if s.theta == 0.0:
            alpha_plus = (s.alpha - 0.5) / 2.0
        elif abs(s.theta - math.pi) <= 1e-12:
            alpha_minus = (s.alpha - 0.5) / 2.0
        elif 0.0 < s.theta < math.pi:
            interior.append(WeightSingularity(math.cos(s.theta), s.alpha, -s.beta))
    tmp = HankelWeight(f.V.with_constant(0), tuple(interior), alpha_plus, alpha_minus)
    u0 = f.V.coefficient(0) + _bridge_constant(tmp)
    return HankelWeight(f.V.with_constant(u0), tuple(interior), alpha_plus, alpha_minus)


# ---------------------------------------------------------------------------
# JSON configuration
# ---------------------------------------------------------------------------

def _require_keys(d: dict, allowed: set, context: str):
    unknown = set(d) - allowed
    if unknown:
        raise ConfigError(f"unknown keys in {context}: {sorted(unknown)}")


def _parse_pair(v, context: str) -> complex:
    if (not isinstance(v, (list, tuple)) or len(v) != 2
            or not all(isinstance(x, (int, float)) for x in v)):
        raise ConfigError(f"{context} must be a [re, im] pair")
    return complex(v[0], v[1])


def _parse_series(entries, context: str) -> FourierSeries:
    if not isinstance(entries, list):
        raise ConfigError(f"{context} must be a list of [k, re, im] triples")
    pairs = []
    for e in entries:
        if (not isinstance(e, (list, tuple)) or len(e) != 3
                or not isinstance(e[0], int)
                or not all(isinstance(x, (int, float)) for x in e[1:])):
            raise ConfigError(f"{context} entries must be [k, re, im] triples")
        pairs.append((e[0], complex(e[1], e[2])))
    try:
        return FourierSeries.from_pairs(pairs)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def symbol_from_dict(d: dict) -> FHSymbol:
    if not isinstance(d, dict):
        raise ConfigError("symbol config must be a JSON object")
    _require_keys(d, {"V", "singularities"}, "symbol config")
    V = _parse_series(d.get("V", []), '"V"')
    sing_entries = d.get("singularities", [])
    if not isinstance(sing_entries, list):
        raise ConfigError('"singularities" must be a list')
    sings = []
    for e in sing_entries:
        if not isinstance(e, dict):
            raise ConfigError("each singularity must be an object")
        _require_keys(e, {"theta", "alpha", "beta"}, "singularity")
        if not isinstance(e.get("theta"), (int, float)):
            raise ConfigError('"theta" must be a number')
        try:
            sings.append(Singularity(float(e["theta"]),
                                     _parse_pair(e.get("alpha", [0, 0]), '"alpha"'),
                                     _parse_pair(e.get("beta", [0, 0]), '"beta"')))
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    try:
        return FHSymbol(V, tuple(sings))
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def symbol_to_dict(f: FHSymbol) -> dict:
    n = f.V.order
    vlist = [[k, f.V.coefficient(k).real, f.V.coefficient(k).imag]
             for k in range(-n, n + 1) if f.V.coefficient(k) != 0]
    return {
        "V": vlist,
        "singularities": [
            {"theta": s.theta,
             "alpha": [s.alpha.real, s.alpha.imag],
             "beta": [s.beta.real, s.beta.imag]}
            for s in f.singularities
        ],
    }


def weight_from_dict(d: dict) -> HankelWeight:
    if not isinstance(d, dict):
        raise ConfigError("weight config must be a JSON object")
    _require_keys(d, {"U", "interior", "alpha_plus", "alpha_minus"}, "weight config")
    U = _parse_series(d.get("U", []), '"U"')
    pts = []
    entries = d.get("interior", [])
    if not isinstance(entries, list):
        raise ConfigError('"interior" must be a list')
    for e in entries:
        if not isinstance(e, dict):
            raise ConfigError("each interior point must be an object")
        _require_keys(e, {"lambda", "alpha", "beta"}, "interior point")
        if not isinstance(e.get("lambda"), (int, float)):
            raise ConfigError('"lambda" must be a number')
        try:
            pts.append(WeightSingularity(float(e["lambda"]),
                                         _parse_pair(e.get("alpha", [0, 0]), '"alpha"'),
                                         _parse_pair(e.get("beta", [0, 0]), '"beta"')))
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    try:
        return HankelWeight(U,
                            tuple(pts),
                            _parse_pair(d.get("alpha_plus", [0, 0]), '"alpha_plus"'),
                            _parse_pair(d.get("alpha_minus", [0, 0]), '"alpha_minus"'))
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def weight_to_dict(w: HankelWeight) -> dict:
    n = w.U.order
    ulist = [[k, w.U.coefficient(k).real, w.U.coefficient(k).imag]
             for k in range(-n, n + 1) if w.U.coefficient(k) != 0]
    return {
        "U": ulist,
        "interior": [
            {"lambda": p.lam,
             "alpha": [p.alpha.real, p.alpha.imag],
             "beta": [p.beta.real, p.beta.imag]}
            for p in w.interior
        ],
        "alpha_plus": [w.alpha_plus.real, w.alpha_plus.imag],
        "alpha_minus": [w.alpha_minus.real, w.alpha_minus.imag],
    }


def load_config(path: str):
    """Parse a JSON file into an FHSymbol or a HankelWeight by schema."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            d = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(d, dict):
        raise ConfigError("config root must be a JSON object")
    if "singularities" in d or "V" in d:
        return symbol_from_dict(d)
    if {"U", "interior", "alpha_plus", "alpha_minus"} & set(d):
        return weight_from_dict(d)
    raise ConfigError("config matches neither the symbol nor the weight schema")
