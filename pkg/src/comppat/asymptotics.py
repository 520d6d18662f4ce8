"""Growth constants for pattern-avoiding compositions over the naturals.

For each statistic, the avoidance generating function (y = 0, z = 1,
unrestricted parts) is a meromorphic function C(x) = N(x)/D(x) on the unit
disk, built from infinite sums and products that this module evaluates
numerically with certified truncation-tail bounds.  The number of avoiding
compositions of n grows like K * v^n where

    rho = smallest positive zero of f = D/N,   v = 1/rho,
    K   = -1 / (rho * f'(rho)),

and a winding-number computation of f over a circle certifies that rho is
the only (simple) zero inside it.  Four of the six statistics have N = 1;
peak and valley share a nontrivial numerator.

All evaluators take a point x with |x| <= 0.8 and a tolerance eps, and
return ``(value, bound)`` where bound is a guaranteed upper bound on the
truncation error (floating-point rounding aside).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

from .patterns import PatternId

EVAL_EPS = 1e-15
RHO_TOL = 1e-11
FD_STEP = 1e-6
WINDING_SAMPLES = 4096
WINDING_RADIUS = 0.7
_MAX_ABS = 0.8

Eval = Callable[[complex, float], tuple[complex, float]]


class AsymptoticsError(Exception):
    """Base class for numeric failures in this module."""


class DomainError(AsymptoticsError):
    """Evaluation point too close to the unit circle for the tail bounds."""


class RootNotFoundError(AsymptoticsError):
    """No sign change of f on the bracket scan."""


class UndersamplingError(AsymptoticsError):
    """A winding-number phase step exceeded pi/2; double the samples."""


@dataclass(frozen=True)
class AnalyticGF:
    """Numerator and denominator evaluators of one avoidance series.

    ``C(x) = numerator(x)/denominator(x)`` and ``f(x) = 1/C(x)``.  For the
    statistics 111, 112, 221 and 123 the numerator is identically 1 and
    its evaluator returns exactly (1, 0).
    """

    pattern: PatternId
    numerator: Eval
    denominator: Eval


@dataclass(frozen=True)
class AsymptoticEstimate:
    """Dominant-pole data for one statistic: the avoider count of n is
    approximately constant_K * growth_v ** n."""

    pattern: PatternId
    rho: float
    growth_v: float
    constant_K: float
    winding: int
    tolerances: dict


def _check_domain(x) -> float:
    ax = abs(x)
    if ax > _MAX_ABS:
        raise DomainError(
            f"|x| = {ax:.4f} exceeds {_MAX_ABS}; tail bounds unavailable")
    return ax


def _const_one(x, eps: float):
    return 1.0, 0.0


def _den_111(x, eps: float):
    """1 - sum_{i>=1} x^i (1 + x^i) / (1 + x^i (1 + x^i))."""
    ax = _check_domain(x)
    if ax == 0:
        return 1.0 + 0 * x, 0.0
    total = 0 * x
    xi = 1
    i = 0
    while True:
        i += 1
        xi = xi * x
        total += xi * (1 + xi) / (1 + xi * (1 + xi))
        t = ax ** (i + 1)
        if t * (1 + t) < 0.5:
            # remaining terms are bounded by c * ax^j with j > i
            c = (1 + t) / (1 - t * (1 + t))
            tail = c * t / (1 - ax)
            if tail < eps:
                return 1 - total, tail
        if i > 100000:
            raise AsymptoticsError("111 series did not reach the tolerance")


def _den_112(x, eps: float):
    """1 - sum_{j>=1} x^j prod_{i<j} (1 - x^{2i})."""
    ax = _check_domain(x)
    if ax == 0:
        return 1.0 + 0 * x, 0.0
    # |prod (1 - x^{2i})| <= prod (1 + ax^{2i}) <= exp(ax^2/(1-ax^2))
    cap = math.exp(ax * ax / (1 - ax * ax))
    total = 0 * x
    prod = 1
    xj = 1
    j = 0
    while True:
        j += 1
        xj = xj * x
        total += xj * prod
        prod = prod * (1 - xj * xj)
        tail = cap * ax ** (j + 1) / (1 - ax)
        if tail < eps:
            return 1 - total, tail
        if j > 100000:
            raise AsymptoticsError("112 series did not reach the tolerance")


def _den_221(x, eps: float):
    """1 - sum_{i>=1} x^i prod_{j>=i+1} (1 - x^{2j}).

    The infinite guard products are truncated at a common index L once the
    omitted factors differ from 1 by less than eps in sum, then formed as
    suffix products.
    """
    ax = _check_domain(x)
    if ax == 0:
        return 1.0 + 0 * x, 0.0
    cap = math.exp(ax * ax / (1 - ax * ax))
    L = 1
    while cap * ax ** (L + 1) / (1 - ax) >= eps / 2 \
            or ax ** (2 * (L + 1)) / (1 - ax * ax) >= eps / 4:
        L += 1
    prod_tail_sum = ax ** (2 * (L + 1)) / (1 - ax * ax)
    prod_err = math.expm1(prod_tail_sum)
    suffix = [1 + 0 * x] * (L + 2)  # suffix[i] = prod_{j=i+1..L} (1 - x^{2j})
    for i in range(L - 1, 0, -1):
        suffix[i] = suffix[i + 1] * (1 - x ** (2 * (i + 1)))
    total = 0 * x
    for i in range(1, L + 1):
        total += x ** i * suffix[i]
    outer_tail = cap * ax ** (L + 1) / (1 - ax)
    inner_tail = prod_err * cap * ax / (1 - ax)
    return 1 - total, outer_tail + inner_tail


def _qpoch_lower(ax: float) -> float:
    """Rigorous positive lower bound for prod_{j>=1} (1 - ax^j)."""
    prod = 1.0
    j = 1
    while ax ** j > 1e-19:
        prod *= 1 - ax ** j
        j += 1
    return prod * (1 - ax ** j / (1 - ax))


def _den_123(x, eps: float):
    """1 - x/(1-x) - sum_{p>=3} (-1)^p sum_{j=0}^{p-3}
    C(p-3, j) x^{T(p+j)} / (x;x)_{p+j}  with T(q) = q(q+1)/2."""
    ax = _check_domain(x)
    if ax == 0:
        return 1.0 + 0 * x, 0.0
    c_min = _qpoch_lower(ax)
    poch = [1]  # poch[q] = (x;x)_q
    total = x / (1 - x)

    def ensure_poch(q: int):
        while len(poch) <= q:
            poch.append(poch[-1] * (1 - x ** len(poch)))

    p = 2
    while True:
        p += 1
        inner = 0 * x
        for j in range(p - 2):
            q = p + j
            ensure_poch(q)
            inner += math.comb(p - 3, j) * x ** (q * (q + 1) // 2) / poch[q]
        total += (-1) ** p * inner
        bound_next = (2 ** (p - 2)) * ax ** ((p + 1) * (p + 2) // 2) / c_min
        ratio = 2 * ax ** (p + 2)
        if ratio < 0.5 and bound_next / (1 - ratio) < eps:
            return 1 - total, bound_next / (1 - ratio)
        if p > 1000:
            raise AsymptoticsError("123 series did not reach the tolerance")


def _peak_num(x, eps: float):
    """1 + sum_{j>=1} x^{j(j+2)} / (x;x)_{2j}."""
    return _super_sum(x, eps, lambda j: j * (j + 2), lambda j: 2 * j,
                      start=1, constant=1)


def _peak_den(x, eps: float):
    """peak numerator minus sum_{j>=0} x^{j^2+3j+1} / (x;x)_{2j+1}."""
    nv, nb = _peak_num(x, eps / 2)
    sv, sb = _super_sum(x, eps / 2, lambda j: j * j + 3 * j + 1,
                        lambda j: 2 * j + 1, start=0, constant=0)
    return nv - sv, nb + sb


def _valley_den(x, eps: float):
    """peak numerator minus sum_{j>=0} x^{(j+1)^2} / (x;x)_{2j+1}."""
    nv, nb = _peak_num(x, eps / 2)
    sv, sb = _super_sum(x, eps / 2, lambda j: (j + 1) * (j + 1),
                        lambda j: 2 * j + 1, start=0, constant=0)
    return nv - sv, nb + sb


def _super_sum(x, eps: float, x_exp, poch_idx, start: int, constant: int):
    """constant + sum_{j>=start} x^{x_exp(j)} / (x;x)_{poch_idx(j)} for
    superexponentially growing exponents (x_exp(j+1) - x_exp(j) >= 2)."""
    ax = _check_domain(x)
    if ax == 0:
        return constant + 0 * x, 0.0
    c_min = _qpoch_lower(ax)
    poch = [1]

    def ensure_poch(q: int):
        while len(poch) <= q:
            poch.append(poch[-1] * (1 - x ** len(poch)))

    total = constant + 0 * x
    j = start
    while True:
        q = poch_idx(j)
        ensure_poch(q)
        total += x ** x_exp(j) / poch[q]
        bound_next = ax ** x_exp(j + 1) / c_min
        if bound_next / (1 - ax) < eps:
            return total, bound_next / (1 - ax)
        j += 1
        if j > 10000:
            raise AsymptoticsError("sum did not reach the tolerance")


_GFS = {
    PatternId.P111: (_const_one, _den_111),
    PatternId.P112: (_const_one, _den_112),
    PatternId.P221: (_const_one, _den_221),
    PatternId.P123: (_const_one, _den_123),
    PatternId.PEAK: (_peak_num, _peak_den),
    PatternId.VALLEY: (_peak_num, _valley_den),
}


def analytic_gf(p: PatternId) -> AnalyticGF:
    num, den = _GFS[p]
    return AnalyticGF(p, num, den)


def eval_f(p: PatternId, x, eps: float = EVAL_EPS):
    """f(x) = denominator/numerator of the avoidance series, with a bound
    on the truncation error.  Real input stays real."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    gf = analytic_gf(p)
    dv, db = gf.denominator(x, eps)
    nv, nb = gf.numerator(x, eps)
    if abs(nv) < 1e-9:
        raise AsymptoticsError(
            f"numerator nearly vanishes at {x}; f undefined there")
    value = dv / nv
    return value, (db + abs(value) * nb) / abs(nv)


def find_rho(p: PatternId, tol: float = RHO_TOL,
             eps: float = EVAL_EPS) -> float:
    """Smallest positive root of f, by bracket scan then bisection.

    Scans x = 0.5, 0.51, ... for the first sign change from positive
    (every f starts at f(0) = 1) and bisects the bracket down to width
    `tol`.  The scan is capped at 0.8, the evaluators' domain; all six
    statistics root well below that.
    """
    if tol < 1e-12:
        raise ValueError("tol below 1e-12 exceeds double-precision headroom")
    xs = 0.5
    f_prev = eval_f(p, xs, eps)[0]
    lo = hi = None
    while xs < _MAX_ABS - 1e-12:
        x_next = round(xs + 0.01, 10)
        if x_next > _MAX_ABS:
            break
        f_next = eval_f(p, x_next, eps)[0]
        if f_prev > 0 >= f_next:
            lo, hi = xs, x_next
            break
        xs, f_prev = x_next, f_next
    if lo is None:
        raise RootNotFoundError(
            f"no sign change of f_{p.value} on (0.5, {_MAX_ABS})")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if eval_f(p, mid, eps)[0] > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def winding_of(fn: Callable[[complex], complex], radius: float,
               samples: int) -> int:
    """Winding number of fn's image of the circle |x| = radius around 0.

    Accumulates principal-branch phase increments between consecutive
    samples and refuses to guess across jumps larger than pi/2, which
    signals under-sampling.
    """
    if samples < 1024:
        raise ValueError("need at least 1024 samples")
    if radius >= _MAX_ABS:
        raise ValueError(f"radius must be below {_MAX_ABS}")
    values = []
    for idx in range(samples):
        point = radius * cmath.exp(2j * cmath.pi * idx / samples)
        value = complex(fn(point))
        if value == 0:
            raise UndersamplingError(
                f"f vanishes at sample {idx}; perturb radius or samples")
        values.append(value)
    total = 0.0
    for idx in range(samples):
        step = cmath.phase(values[(idx + 1) % samples] / values[idx])
        if abs(step) > math.pi / 2:
            raise UndersamplingError(
                f"phase step {step:.3f} at sample {idx} exceeds pi/2; "
                "double the sample count")
        total += step
    return round(total / (2 * math.pi))


def winding_number(p: PatternId, radius: float = WINDING_RADIUS,
                   samples: int = WINDING_SAMPLES,
                   eps: float = EVAL_EPS) -> int:
    """Winding number of f over |x| = radius: the count of zeros of f
    inside (zeros of the denominator minus zeros of the numerator)."""
    return winding_of(lambda x: eval_f(p, x, eps)[0], radius, samples)


def estimate(p: PatternId) -> AsymptoticEstimate:
    """Dominant-pole estimate: rho, v = 1/rho, K = -1/(rho f'(rho)), and
    the winding certificate at the standard radius.

    f'(rho) comes from central differences at steps h and h/2 combined by
    one Richardson extrapolation level.
    """
    rho = find_rho(p, RHO_TOL)

    def df(h: float) -> float:
        return (eval_f(p, rho + h)[0] - eval_f(p, rho - h)[0]) / (2 * h)

    d1 = df(FD_STEP)
    d2 = df(FD_STEP / 2)
    fprime = (4 * d2 - d1) / 3
    k = -1 / (rho * fprime)
    return AsymptoticEstimate(
        pattern=p,
        rho=rho,
        growth_v=1 / rho,
        constant_K=k,
        winding=winding_number(p),
        tolerances={"rho_tol": RHO_TOL, "tail_eps": EVAL_EPS,
                    "fd_step": FD_STEP, "winding_samples": WINDING_SAMPLES,
                    "winding_radius": WINDING_RADIUS},
    )


def predict_count(p: PatternId, n: int,
                  est: AsymptoticEstimate | None = None) -> float:
    """K * v^n, the dominant-pole approximation of the number of
    p-avoiding compositions of n."""
    if est is None:
        est = estimate(p)
    return est.constant_K * est.growth_v ** n


def emit_curve(p: PatternId, radius: float = WINDING_RADIUS,
               samples: int = WINDING_SAMPLES, eps: float = EVAL_EPS,
               ) -> list[tuple[float, float, float, float]]:
    """Sampled image of the circle |x| = radius under f, as rows
    (re x, im x, re f, im f) starting at angle 0."""
    if radius >= _MAX_ABS:
        raise ValueError(f"radius must be below {_MAX_ABS}")
    rows = []
    for idx in range(samples):
        point = radius * cmath.exp(2j * cmath.pi * idx / samples)
        value = complex(eval_f(p, point, eps)[0])
        rows.append((point.real, point.imag, value.real, value.imag))
    return rows
