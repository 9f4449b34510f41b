"""Exact-vs-asymptotic comparison sweeps, identity residual suites, and
error-decay rate estimation.

Sweeps are deterministic given their configuration and seed.  Ratio
comparisons are done in log space so geometrically growing determinants
never overflow.  Rows within a sweep are independent; when FHDET_THREADS
allows, they are computed on a thread pool and re-sorted by n.
"""

from __future__ import annotations

import concurrent.futures
import math
import os
from dataclasses import dataclass

import numpy as np

from .asymptotics import (
    basor_tracy_sum,
    hankel_asymptotic,
    polynomial_asymptotics,
    tph_asymptotic,
)
from .errors import FHDetError
from .exact import (
    check_hankel_toeplitz_relation,
    check_shift_identity,
    check_tph_reduction,
    hankel_det_info,
    orthogonal_polynomials,
    rel_residual,
    toeplitz_det,
    toeplitz_det_info,
    tph_det,
)
from .specfun import LogComplex
from .symbol import (
    CoeffTable,
    FHSymbol,
    FourierSeries,
    HankelWeight,
    Singularity,
    WeightSingularity,
    coeff_table,
)

__all__ = [
    "ComparisonRow",
    "RateFit",
    "sweep_toeplitz",
    "sweep_hankel",
    "sweep_tph",
    "sweep_poly",
    "fit_error_rate",
    "identity_suite",
    "write_rows_csv",
    "geometric_grid",
    "thread_count",
]

CSV_HEADER = "n,exact_logmag,exact_arg,pred_logmag,pred_arg,ratio_re,ratio_im,ratio_error,quality"


@dataclass(frozen=True)
class ComparisonRow:
    n: int
    exact: LogComplex
    predicted: LogComplex
    ratio: complex
    ratio_error: float
    quality: str = "ok"


@dataclass(frozen=True)
class RateFit:
    slope: float
    intercept: float
    r_squared: float


def thread_count() -> int:
    """Worker cap from FHDET_THREADS (default 1, i.e. sequential)."""
    raw = os.environ.get("FHDET_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def geometric_grid(lo: int, hi: int, factor: int = 2) -> list[int]:
    """lo, lo*factor, ... up to hi inclusive."""
    if lo < 1 or hi < lo:
        raise ValueError("need 1 <= lo <= hi")
    out = []
    n = lo
    while n <= hi:
        out.append(n)
        n *= factor
    return out


def _row(n: int, exact: LogComplex, predicted: LogComplex, quality: str) -> ComparisonRow:
    if predicted.is_zero:
        ratio = complex(math.inf, 0.0)
        err = math.inf if not exact.is_zero else 0.0
    else:
        ratio = (exact / predicted).to_complex()
        err = abs(ratio - 1.0)
    return ComparisonRow(n, exact, predicted, ratio, err, quality)


def _error_row(n: int, exc: Exception) -> ComparisonRow:
    return ComparisonRow(n, LogComplex.zero(), LogComplex.zero(),
                         complex(math.nan, math.nan), math.nan,
                         f"error:{type(exc).__name__}")


def _run_rows(n_values, one) -> list[ComparisonRow]:
    n_values = list(n_values)
    if sorted(n_values) != n_values:
        raise ValueError("n_values must be increasing")

    def safe(n):
        try:
            return one(n)
        except (FHDetError, ValueError, ZeroDivisionError) as exc:
            return _error_row(n, exc)

    workers = thread_count()
    if workers > 1 and len(n_values) > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(safe, n_values))
    else:
        rows = [safe(n) for n in n_values]
    return sorted(rows, key=lambda r: r.n)


def sweep_toeplitz(f: FHSymbol, n_values, tol: float = 1e-10) -> list[ComparisonRow]:
    """Exact Toeplitz determinants against the representation-sum prediction."""
    table = coeff_table(f, max(n_values) + 1, tol)

    def one(n):
        info = toeplitz_det_info(table, n)
        pred = basor_tracy_sum(f, n)
        return _row(n, info.value, pred.log_value, info.quality)

    return _run_rows(n_values, one)


def sweep_hankel(w: HankelWeight, n_values, tol: float = 1e-10) -> list[ComparisonRow]:
    def one(n):
        info = hankel_det_info(w, n, tol)
        return _row(n, info.value, hankel_asymptotic(w, n), info.quality)

    return _run_rows(n_values, one)


def sweep_tph(f: FHSymbol, variant: str, n_values, tol: float = 1e-10) -> list[ComparisonRow]:
    table = coeff_table(f, 2 * max(n_values) + 2, tol)

    def one(n):
        return _row(n, tph_det(table, n, variant), tph_asymptotic(f, n, variant), "ok")

    return _run_rows(n_values, one)


def sweep_poly(f: FHSymbol, n_values, tol: float = 1e-10) -> dict[str, list[ComparisonRow]]:
    """Rows for chi_{n-1}^2, phi_n(0)/chi_n and hatphi_n(0)/chi_n."""
    table = coeff_table(f, max(n_values) + 1, tol)
    out: dict[str, list[ComparisonRow]] = {"chi2": [], "phi0": [], "hatphi0": []}
    for n in n_values:
        try:
            pred = polynomial_asymptotics(f, n)
            data = orthogonal_polynomials(table, n)
            chi2 = toeplitz_det(table, n - 1) / toeplitz_det(table, n)
            out["chi2"].append(_row(n, chi2,
                                    LogComplex.from_complex(pred.chi_sq), data.quality))
            out["phi0"].append(_row(n, LogComplex.from_complex(data.monic_at_zero),
                                    LogComplex.from_complex(pred.phi0_over_chi), data.quality))
            out["hatphi0"].append(_row(n, LogComplex.from_complex(data.hat_monic_at_zero),
                                       LogComplex.from_complex(pred.hatphi0_over_chi),
                                       data.quality))
        except (FHDetError, ValueError, ZeroDivisionError) as exc:
            for key in out:
                out[key].append(_error_row(n, exc))
    return out


def fit_error_rate(rows) -> RateFit:
    """Least-squares slope of log(ratio_error) against log(n).

    Rows with oracle quality flags or unusable errors are excluded; at least
    four usable rows are required.
    """
    pts = [(r.n, r.ratio_error) for r in rows
           if r.quality == "ok" and math.isfinite(r.ratio_error) and r.ratio_error > 0.0]
    if len(pts) < 4:
        raise ValueError("need at least 4 usable rows for a rate fit")
    x = np.log([p[0] for p in pts])
    y = np.log([p[1] for p in pts])
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    var = float(np.sum((y - np.mean(y)) ** 2))
    r2 = 1.0 - float(np.sum(resid ** 2)) / var if var > 0 else 1.0
    return RateFit(float(slope), float(intercept), r2)


def write_rows_csv(path: str, rows) -> None:
    """CSV contract: fixed header, 17 significant digits, LF endings."""
    def fmt(x: float) -> str:
        return f"{x:.17g}"

    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(CSV_HEADER + "\n")
        for r in rows:
            fh.write(",".join([
                str(r.n),
                fmt(r.exact.log_mag), fmt(r.exact.arg),
                fmt(r.predicted.log_mag), fmt(r.predicted.arg),
                fmt(r.ratio.real), fmt(r.ratio.imag),
                fmt(r.ratio_error), r.quality,
            ]) + "\n")


# ---------------------------------------------------------------------------
# identity suite
# ---------------------------------------------------------------------------

def _fixed_corpus() -> list[tuple[str, FHSymbol]]:
    v_small = FourierSeries.from_pairs([(1, 0.2), (-1, 0.2)])
    v_cplx = FourierSeries.from_pairs([(1, 0.1 + 0.05j), (-1, 0.1 - 0.05j), (2, 0.05), (-2, 0.05)])
    return [
        ("smooth", FHSymbol(v_small, ())),
        ("tridiagonal", FHSymbol(FourierSeries.zero(), (Singularity(0.0, 1.0, 0.0),))),
        ("root-jump", FHSymbol(v_small, (Singularity(0.0, 0.3, 0.1),))),
        ("two-point", FHSymbol(v_small, (Singularity(0.0, 0.2, 0.15),
                                         Singularity(math.pi / 2, 0.35, -0.1)))),
        ("three-point", FHSymbol(FourierSeries.zero(),
                                 (Singularity(0.0, 0.25, 0.1),
                                  Singularity(1.5, 0.3, 0.0),
                                  Singularity(4.0, 0.0, 0.2)))),
        ("complex-v", FHSymbol(v_cplx, (Singularity(2.2, 0.4, 0.05j),))),
    ]


def _random_symbol(rng: np.random.Generator) -> FHSymbol:
    n_sing = int(rng.integers(1, 3))
    thetas = np.sort(rng.uniform(0.0, 2 * math.pi, size=n_sing))
    sings = []
    for th in thetas:
        alpha = rng.uniform(0.0, 0.5)
        beta = rng.uniform(-0.3, 0.3)
        sings.append(Singularity(float(th), alpha, beta))
    v = FourierSeries.from_pairs([(1, rng.uniform(-0.2, 0.2)), (-1, rng.uniform(-0.2, 0.2))])
    return FHSymbol(v, tuple(sings))


def identity_suite(seed: int = 0, tol: float = 1e-12, *,
                   shift_n=(6, 12, 16), bridge_n=(2, 4), tph_n=(2, 6, 12),
                   n_random: int = 8) -> dict:
    """Exact-identity residuals over a fixed and a seeded random corpus."""
    report: dict = {"shift": [], "hankel_bridge": [], "tph_reduction": [], "random": []}

    for name, f in _fixed_corpus():
        for n in shift_n:
            for ell in (1, 2, 3, -1):
                res = check_shift_identity(f, n, ell, tol)
                report["shift"].append(
                    {"symbol": name, "n": n, "ell": ell, "residual": res})

    bridge_weights = [
        ("one", HankelWeight(FourierSeries.zero(), (), 0, 0)),
        ("sqrt", HankelWeight(FourierSeries.zero(), (), 0.25, 0.25)),
        ("jump", HankelWeight(FourierSeries.zero(),
                              (WeightSingularity(0.0, 0.0, 0.3),), 0, 0)),
    ]
    for name, w in bridge_weights:
        for n in bridge_n:
            res = check_hankel_toeplitz_relation(w, n, tol)
            report["hankel_bridge"].append({"weight": name, "n": n, "residual": res})

    even_syms = [
        ("one", FHSymbol(FourierSeries.zero(), ())),
        ("alpha-pair", FHSymbol(FourierSeries.zero(),
                                (Singularity(math.pi / 2, 0.4, 0.0),
                                 Singularity(3 * math.pi / 2, 0.4, 0.0)))),
        ("even-tridiag", FHSymbol(FourierSeries.zero(),
                                  (Singularity(0.0, 1.0, 0.0),
                                   Singularity(math.pi, 1.0, 0.0)))),
    ]
    for name, f in even_syms:
        for variant in ("plus_k", "minus_k2", "plus_k1", "minus_k1"):
            for n in tph_n:
                res = check_tph_reduction(f, n, variant, tol)
                report["tph_reduction"].append(
                    {"symbol": name, "variant": variant, "n": n, "residual": res})

    rng = np.random.default_rng(seed)
    for i in range(n_random):
        f = _random_symbol(rng)
        n = int(rng.integers(4, 10))
        ell = int(rng.choice([1, 2, -1]))
        res = check_shift_identity(f, n, ell, tol)
        report["random"].append({"index": i, "n": n, "ell": ell, "residual": res})

    residuals = [e["residual"] for group in report.values() for e in group]
    report["max_residual"] = max(residuals)
    report["histogram"] = np.histogram(
        np.log10(np.clip(residuals, 1e-18, None)), bins=np.arange(-18.0, 1.0))[0].tolist()
    return report
