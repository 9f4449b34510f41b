"""Closed-form leading asymptotics for the structured determinants and the
orthogonal-polynomial quantities, evaluated in log form.

Branch conventions, frozen here and relied on by the tests:
  * n^x := exp(x ln n) with the real logarithm;
  * |.|^x always uses the real positive base;
  * (z_k / (z_j e^{i pi}))^x := exp(x * i(theta_k - theta_j - pi)) for
    j < k with raw angles in [0, 2 pi), so the effective argument lies in
    (-pi, pi);
  * powers of b_+- go through the literal Wiener-Hopf log series, never
    through a re-branched logarithm;
  * inside nu_j, (z_j / z_p)^{alpha_p} := exp(i alpha_p (theta_j - theta_p))
    with raw angles;
  * pair products run over j < k in order of increasing angle.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateRepresentationError, HypothesisError
from .specfun import LogComplex, log_barnes_g, log_gamma, recip_gamma
from .symbol import (
    FHSymbol,
    FourierSeries,
    HankelWeight,
    Representation,
    beta_seminorm,
    find_minimal_representations,
    is_even_symbol,
    szego_pair_sum,
    wiener_hopf_logs,
)

__all__ = [
    "AsymptoticTerm",
    "AsymptoticResult",
    "PolyAsymptotics",
    "szego_fh_leading",
    "basor_tracy_sum",
    "polynomial_asymptotics",
    "bt1_asymptotic",
    "legendre_hankel_det",
    "hankel_asymptotic",
    "tph_asymptotic",
    "log_sum",
]

TWO_PI = 2.0 * math.pi
_STRICT = 1e-12


@dataclass(frozen=True)
class AsymptoticTerm:
    """One representation's contribution, prefactor (prod z_j^{n_j})^n included."""

    rep: Representation
    log_value: LogComplex


@dataclass(frozen=True, eq=False)
class AsymptoticResult:
    n: int
    value: complex
    log_value: LogComplex
    terms: tuple[AsymptoticTerm, ...]
    delta: float


@dataclass(frozen=True)
class PolyAsymptotics:
    """Leading predictions for chi_{n-1}^2, phi_n(0)/chi_n, hatphi_n(0)/chi_n."""

    chi_sq: complex
    phi0_over_chi: complex
    hatphi0_over_chi: complex
    delta: float


def log_sum(terms: list[LogComplex]) -> LogComplex:
    """Sum of log-represented values, scaled to avoid overflow."""
    finite = [t for t in terms if not t.is_zero]
    if not finite:
        return LogComplex.zero()
    m = max(t.log_mag for t in finite)
    s = sum(cmath.exp(complex(t.log_mag - m, t.arg)) for t in finite)
    if s == 0:
        return LogComplex.zero()
    return LogComplex(m + math.log(abs(s)), cmath.phase(s))


def _delta(f: FHSymbol, betas, n: int) -> float:
    idx = f.singular_indices
    if not idx:
        return float(n) ** (-2.0)
    re = [betas[j].real for j in idx]
    return float(n) ** (2.0 * (max(re) - min(re)) - 2.0)


def _asd_log(f: FHSymbol, n: int) -> complex:
    """Log of the leading-term product for the Toeplitz determinant of f."""
    v = f.V
    ln_n = math.log(n)
    acc = n * v.coefficient(0) + szego_pair_sum(v)
    sings = f.singularities
    for s in sings:
        lbp, _, lbm = wiener_hopf_logs(v, s.theta)
        acc += (-s.alpha + s.beta) * lbp + (-s.alpha - s.beta) * lbm
        acc += (s.alpha * s.alpha - s.beta * s.beta) * ln_n
        acc += (log_barnes_g(1.0 + s.alpha + s.beta)
                + log_barnes_g(1.0 + s.alpha - s.beta)
                - log_barnes_g(1.0 + 2.0 * s.alpha))
    for j in range(len(sings)):
        for k in range(j + 1, len(sings)):
            sj, sk = sings[j], sings[k]
            dist = abs(2.0 * math.sin(0.5 * (sj.theta - sk.theta)))
            acc += 2.0 * (sj.beta * sk.beta - sj.alpha * sk.alpha) * math.log(dist)
            acc += (sj.alpha * sk.beta - sk.alpha * sj.beta) * 1j * (sk.theta - sj.theta - math.pi)
    return acc


def _check_rep(rep: Representation):
    offenders = _rep_degeneracies(rep)
    if offenders:
        raise DegenerateRepresentationError(rep.shifts, offenders)


def _rep_degeneracies(rep: Representation, tol: float = 1e-10):
    out = []
    for j, (s, b) in enumerate(zip(rep.base.singularities, rep.effective_betas)):
        for sign in (+1, -1):
            v = s.alpha + sign * b
            if abs(v.imag) <= tol:
                r = round(v.real)
                if r <= -1 and abs(v.real - r) <= tol:
                    out.append((j, sign, v))
    return out


def szego_fh_leading(rep: Representation | FHSymbol, n: int) -> LogComplex:
    """Leading Toeplitz asymptotics of one representation, without the
    error factor and without the representation prefactor.

    Requires the effective beta real parts to span strictly less than 1
    across the singular points; boundary and wider cases belong to
    ``basor_tracy_sum``.
    """
    if isinstance(rep, FHSymbol):
        rep = Representation(rep, (0,) * len(rep.singularities))
    if n < 1:
        raise ValueError("n must be >= 1")
    if beta_seminorm(rep) >= 1.0 - _STRICT:
        raise HypothesisError(
            "Re beta spread is >= 1; use basor_tracy_sum, which sums over "
            "the minimizing representations")
    _check_rep(rep)
    return LogComplex.from_log(_asd_log(rep.shifted_symbol(), n))


def basor_tracy_sum(f: FHSymbol, n: int) -> AsymptoticResult:
    """Leading asymptotics as the sum over all minimizing representations."""
    if n < 1:
        raise ValueError("n must be >= 1")
    reps = find_minimal_representations(f)
    for rep in reps:
        offenders = _rep_degeneracies(rep)
        if offenders:
            raise DegenerateRepresentationError(rep.shifts, offenders)
    terms = []
    for rep in reps:
        log_val = complex(n) * rep.log_prefactor + _asd_log(rep.shifted_symbol(), n)
        terms.append(AsymptoticTerm(rep, LogComplex.from_log(log_val)))
    total = log_sum([t.log_value for t in terms])
    value = sum(t.log_value.to_complex() for t in terms)
    delta = _delta(f, reps[0].effective_betas, n)
    return AsymptoticResult(n, value, total, tuple(terms), delta)


def _nu_log(f: FHSymbol, j: int) -> complex:
    sings = f.singularities
    sj = sings[j]
    acc = -1j * math.pi * (sum(s.alpha for s in sings[:j]) - sum(s.alpha for s in sings[j + 1:]))
    for p, sp in enumerate(sings):
        if p == j:
            continue
        acc += 1j * sp.alpha * (sj.theta - sp.theta)
        dist = abs(2.0 * math.sin(0.5 * (sj.theta - sp.theta)))
        acc += 2.0 * sp.beta * math.log(dist)
    return acc


def polynomial_asymptotics(f: FHSymbol, n: int) -> PolyAsymptotics:
    """Leading behaviour of the orthonormal-polynomial data at degree n.

    Summands whose coefficient carries a reciprocal Gamma factor at a
    nonpositive integer vanish exactly.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if beta_seminorm(f) >= 1.0 - _STRICT:
        raise HypothesisError("Re beta spread must be strictly below 1")
    rep0 = Representation(f, (0,) * len(f.singularities))
    _check_rep(rep0)

    sings = f.singularities
    ln_n = math.log(n)
    v0 = f.V.coefficient(0)
    nus = [cmath.exp(_nu_log(f, j)) for j in range(len(sings))]
    wh = [wiener_hopf_logs(f.V, s.theta) for s in sings]

    s1 = sum(s.alpha * s.alpha - s.beta * s.beta for s in sings)
    cross = 0j
    for j, sj in enumerate(sings):
        for k, sk in enumerate(sings):
            if k == j:
                continue
            r1 = recip_gamma(sj.alpha - sj.beta)
            r2 = recip_gamma(sk.alpha + sk.beta)
            if r1 == 0 or r2 == 0:
                continue
            num = cmath.exp(log_gamma(1.0 + sj.alpha + sj.beta)
                            + log_gamma(1.0 + sk.alpha - sk.beta))
            zj, zk = cmath.exp(1j * sj.theta), cmath.exp(1j * sk.theta)
            cross += (zk / (zj - zk)
                      * cmath.exp(1j * n * (sj.theta - sk.theta))
                      * cmath.exp(2.0 * (sk.beta - sj.beta - 1.0) * ln_n)
                      * (nus[j] / nus[k]) * num * r1 * r2
                      * cmath.exp(wh[j][0] + wh[k][2] - wh[j][2] - wh[k][0]))
    chi_sq = cmath.exp(-v0) * (1.0 - s1 / n + cross)

    phi0 = 0j
    hat0 = 0j
    for j, sj in enumerate(sings):
        r = recip_gamma(sj.alpha - sj.beta)
        if r != 0:
            phi0 += (cmath.exp((-2.0 * sj.beta - 1.0) * ln_n)
                     * cmath.exp(1j * n * sj.theta) * nus[j]
                     * cmath.exp(log_gamma(1.0 + sj.alpha + sj.beta)) * r
                     * cmath.exp(wh[j][0] - wh[j][2]))
        r = recip_gamma(sj.alpha + sj.beta)
        if r != 0:
            hat0 += (cmath.exp((2.0 * sj.beta - 1.0) * ln_n)
                     * cmath.exp(-1j * n * sj.theta) / nus[j]
                     * cmath.exp(log_gamma(1.0 + sj.alpha - sj.beta)) * r
                     * cmath.exp(wh[j][2] - wh[j][0]))
    betas = tuple(s.beta for s in sings)
    return PolyAsymptotics(chi_sq, phi0, hat0, _delta(f, betas, n))


def bt1_asymptotic(f_pm: FHSymbol, base: FHSymbol, j0: int, sign: int, n: int) -> complex:
    """Asymptotics of a single-shift symbol via the extremal-index sum.

    ``f_pm`` must equal ``base`` with beta_{j0} replaced by beta_{j0} + sign.
    The sum runs over the singular indices whose Re beta is minimal
    (sign = +1) or maximal (sign = -1); each contributes the leading
    product with its beta shifted by sign.
    """
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    if n < 1:
        raise ValueError("n must be >= 1")
    sings = base.singularities
    if not 0 <= j0 < len(sings):
        raise ValueError("j0 outside the singularity list")
    idx = base.singular_indices
    if len(idx) < 2:
        raise HypothesisError("need more than one singular point")
    for j in idx:
        s = sings[j]
        if not -0.5 - _STRICT < s.beta.real <= 0.5 + _STRICT:
            raise HypothesisError("base Re beta must lie in (-1/2, 1/2]")
        if abs(s.alpha + s.beta) <= _STRICT or abs(s.alpha - s.beta) <= _STRICT:
            raise HypothesisError("requires alpha_j +/- beta_j != 0 at singular points")

    # consistency of the shifted symbol with the claimed base
    if len(f_pm.singularities) != len(sings):
        raise ValueError("f_pm must share the singularity list of the base")
    for j, (a, b) in enumerate(zip(f_pm.singularities, sings)):
        expect = b.beta + (sign if j == j0 else 0)
        if abs(a.theta - b.theta) > _STRICT or abs(a.alpha - b.alpha) > _STRICT \
                or abs(a.beta - expect) > 1e-10:
            raise ValueError("f_pm is not the claimed single-shift of the base")

    re = [sings[j].beta.real for j in idx]
    target = min(re) if sign > 0 else max(re)
    extremal = [j for j in idx if abs(sings[j].beta.real - target) <= 1e-12]

    terms = []
    for j in extremal:
        betas = list(s.beta for s in sings)
        betas[j] = betas[j] + sign
        shifted = base.with_betas(betas)
        phase = 1j * sign * n * (sings[j].theta - sings[j0].theta)
        terms.append(LogComplex.from_log(phase + _asd_log(shifted, n)))
    return log_sum(terms).to_complex()


def legendre_hankel_det(n: int) -> tuple[LogComplex, LogComplex]:
    """Constant-weight moment determinant on [-1, 1]: exact product form and
    its leading asymptotics."""
    if n < 1:
        raise ValueError("n must be >= 1")
    exact = n * n * math.log(2.0) + math.fsum(
        3.0 * math.lgamma(k + 1) - math.lgamma(n + k + 1) for k in range(n))
    g_half = log_barnes_g(0.5).real
    asym = ((n + 0.5) * math.log(math.pi) + 2.0 * g_half
            - n * (n - 1) * math.log(2.0) - 0.25 * math.log(n))
    return LogComplex(exact, 0.0), LogComplex(asym, 0.0)


def hankel_asymptotic(w: HankelWeight, n: int) -> LogComplex:
    """Leading asymptotics of the singular-weight moment determinant.

    The constant-weight factor enters through its own leading asymptotics,
    so the w = 1 case reduces to ``legendre_hankel_det``'s second output.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    for p in w.interior:
        if not -0.5 + _STRICT < p.beta.real < 0.5 - _STRICT:
            raise HypothesisError("interior Re beta must lie strictly inside (-1/2, 1/2)")

    v = w.U
    ln_n = math.log(n)
    a_plus, a_minus = w.alpha_plus, w.alpha_minus
    v0 = v.coefficient(0)
    v_at_1 = sum(v.coefficient(k) for k in range(-v.order, v.order + 1))
    v_at_m1 = sum((-1.0) ** (k % 2) * v.coefficient(k)
                  for k in range(-v.order, v.order + 1))
    pair_sum = 0.5 * sum(k * v.coefficient(k) ** 2 for k in range(1, v.order + 1))

    # ordered list lambda_0 = 1 > interior > lambda_{r+1} = -1
    lams = [1.0] + [p.lam for p in w.interior] + [-1.0]
    alphas = [a_plus] + [p.alpha for p in w.interior] + [a_minus]
    betas = [0j] + [p.beta for p in w.interior] + [0j]
    big_a = sum(alphas)

    acc = legendre_hankel_det(n)[1].log_mag + 0j
    acc += (n + a_plus + a_minus) * v0 - a_plus * v_at_1 - a_minus * v_at_m1 + pair_sum

    for p in w.interior:
        th = math.acos(p.lam)
        lbp, _, lbm = wiener_hopf_logs(v, th)
        acc += (-p.alpha - p.beta) * lbp + (-p.alpha + p.beta) * lbm

    osc = 2.0 * (n + big_a) * sum(p.beta * math.asin(p.lam) for p in w.interior)
    for j in range(len(lams)):
        for k in range(j + 1, len(lams)):
            osc += math.pi * (alphas[j] * betas[k] - alphas[k] * betas[j])
    acc += 1j * osc

    four_pow = (big_a * n + a_plus * a_plus + a_minus * a_minus
                + sum(alphas[j] * alphas[k]
                      for j in range(len(lams)) for k in range(j + 1, len(lams)))
                + sum(p.beta ** 2 for p in w.interior))
    acc += -four_pow * math.log(4.0)
    acc += (a_plus + a_minus) * math.log(TWO_PI)
    acc += (2.0 * (a_plus ** 2 + a_minus ** 2)
            + sum(p.alpha ** 2 - p.beta ** 2 for p in w.interior)) * ln_n

    for j in range(len(lams)):
        for k in range(j + 1, len(lams)):
            d = abs(lams[j] - lams[k])
            acc += -2.0 * (alphas[j] * alphas[k] + betas[j] * betas[k]) * math.log(d)
            bb = betas[j] * betas[k]
            if bb != 0:
                cross = abs(lams[j] * lams[k] - 1.0
                            + math.sqrt((1.0 - lams[j] ** 2) * (1.0 - lams[k] ** 2)))
                acc += 2.0 * bb * math.log(cross)

    acc -= log_barnes_g(1.0 + 2.0 * a_plus) + log_barnes_g(1.0 + 2.0 * a_minus)
    for p in w.interior:
        acc += -(p.alpha ** 2 + p.beta ** 2) / 2.0 * math.log(1.0 - p.lam ** 2)
        acc += (log_barnes_g(1.0 + p.alpha + p.beta)
                + log_barnes_g(1.0 + p.alpha - p.beta)
                - log_barnes_g(1.0 + 2.0 * p.alpha))
    return LogComplex.from_log(acc)


_TPH_ST = {
    "plus_k": (-0.5, -0.5),
    "minus_k2": (0.5, 0.5),
    "plus_k1": (-0.5, 0.5),
    "minus_k1": (0.5, -0.5),
}


def _tph_p(variant: str, n: int) -> int:
    return {"plus_k": -2 * n + 2, "minus_k2": 0,
            "plus_k1": -n, "minus_k1": -n}[variant]


def tph_asymptotic(f: FHSymbol, n: int, variant: str) -> LogComplex:
    """Leading asymptotics of the four Toeplitz+Hankel determinants of an
    even symbol, using the symbol's own parameters on the upper half circle."""
    if variant not in _TPH_ST:
        raise ValueError(f"unknown variant {variant!r}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if not is_even_symbol(f):
        raise HypothesisError("symbol must be even")
    s, t = _TPH_ST[variant]
    p = _tph_p(variant, n)

    alpha0 = 0j
    alpha_pi = 0j
    interior = []
    for sg in f.singularities:
        if sg.theta == 0.0:
            alpha0 = sg.alpha
        elif abs(sg.theta - math.pi) <= 1e-12:
            alpha_pi = sg.alpha
        elif 0.0 < sg.theta < math.pi:
            interior.append(sg)
    for sg in interior:
        if not -0.5 + _STRICT < sg.beta.real < 0.5 - _STRICT:
            raise HypothesisError("interior Re beta must lie strictly inside (-1/2, 1/2)")

    v = f.V
    ln_n = math.log(n)
    v0 = v.coefficient(0)
    v_at_1 = sum(v.coefficient(k) for k in range(-v.order, v.order + 1))
    v_at_m1 = sum((-1.0) ** (k % 2) * v.coefficient(k)
                  for k in range(-v.order, v.order + 1))
    pair_sum = sum(k * v.coefficient(k) ** 2 for k in range(1, v.order + 1))

    est = alpha0 + alpha_pi + s + t
    acc = n * v0 + 0.5 * (est * v0 - (alpha0 + s) * v_at_1
                          - (alpha_pi + t) * v_at_m1 + pair_sum)

    for sg in interior:
        lbp, _, lbm = wiener_hopf_logs(v, sg.theta)
        acc += (-sg.alpha + sg.beta) * lbp + (-sg.alpha - sg.beta) * lbm

    beta_sum = sum(sg.beta for sg in interior)
    osc = (alpha0 + s + sum(sg.alpha for sg in interior)) * beta_sum
    for j in range(len(interior)):
        for k in range(j + 1, len(interior)):
            osc += (interior[j].alpha * interior[k].beta
                    - interior[k].alpha * interior[j].beta)
    acc += -1j * math.pi * osc

    two_pow = ((1.0 - s - t) * n + p
               + sum(sg.alpha ** 2 - sg.beta ** 2 for sg in interior)
               - 0.5 * est ** 2 + 0.5 * est)
    acc += two_pow * math.log(2.0)
    acc += (0.5 * (alpha0 ** 2 + alpha_pi ** 2) + alpha0 * s + alpha_pi * t
            + sum(sg.alpha ** 2 - sg.beta ** 2 for sg in interior)) * ln_n

    for j in range(len(interior)):
        for k in range(j + 1, len(interior)):
            sj, sk = interior[j], interior[k]
            d_direct = abs(2.0 * math.sin(0.5 * (sj.theta - sk.theta)))
            d_mirror = abs(2.0 * math.sin(0.5 * (sj.theta + sk.theta)))
            acc += -2.0 * (sj.alpha * sk.alpha - sj.beta * sk.beta) * math.log(d_direct)
            acc += -2.0 * (sj.alpha * sk.alpha + sj.beta * sk.beta) * math.log(d_mirror)

    a_tilde = 0.5 * est + sum(sg.alpha for sg in interior)
    for sg in interior:
        acc += 2.0 * a_tilde * sg.beta * 1j * sg.theta
        acc += -(sg.alpha ** 2 + sg.beta ** 2) * math.log(abs(2.0 * math.sin(sg.theta)))
        acc += -2.0 * sg.alpha * (alpha0 + s) * math.log(abs(2.0 * math.sin(0.5 * sg.theta)))
        acc += -2.0 * sg.alpha * (alpha_pi + t) * math.log(abs(2.0 * math.cos(0.5 * sg.theta)))

    acc += 0.5 * (est + 1.0) * math.log(math.pi) + 2.0 * log_barnes_g(0.5).real
    acc -= log_barnes_g(1.0 + alpha0 + s) + log_barnes_g(1.0 + alpha_pi + t)
    for sg in interior:
        acc += (log_barnes_g(1.0 + sg.alpha + sg.beta)
                + log_barnes_g(1.0 + sg.alpha - sg.beta)
                - log_barnes_g(1.0 + 2.0 * sg.alpha))
    return LogComplex.from_log(acc)
