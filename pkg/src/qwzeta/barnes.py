"""Barnes multiple Hurwitz zeta, multiple gamma and multiple sine.

``zeta_r(s, x, w) = sum_{n in N^r} (n.w + x)**-s`` is continued in s by two
elementary pieces:

* the ladder ``zeta_r(s, y) = zeta_{r-1}(s, y, w') + zeta_r(s, y + w_r)``,
  applied until ``y`` passes a threshold X.  With rational weights every
  point visited is ``x`` plus a multiple of ``1/L``, so values are memoized by
  integer offset and each level costs O(X L) evaluations instead of J**r;
* for ``y >= X`` the asymptotic tail
  ``sum_{k<K} b_k Gamma(s+k-r)/Gamma(s) y**(r-k-s)``, where
  ``t**r / prod(1 - exp(-w_j t)) = sum b_k t**k`` has exact rational b_k.

For r = 1 this is Euler-Maclaurin summation of the Hurwitz zeta.  The
gamma-ratio is a rational function of s, so ``d/ds`` at s = 0 is taken in
closed form for the multiple gamma.  Truncation error (first omitted tail
term) and a roundoff bound (eps times the sum of magnitudes) are carried
alongside every value.  The magnitudes grow like X**r, so when the roundoff
bound alone misses the target the same ladder is rerun in mpmath with just
enough extra digits; results are always returned as doubles.
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import Callable, NamedTuple, Sequence

import mpmath

_EPS = sys.float_info.epsilon
# roundoff allowance per unit of accumulated magnitude
_ROUNDOFF = 8 * _EPS


class PoleError(ValueError):
    """s sits on a pole of the continued zeta function."""


class AccuracyError(ArithmeticError):
    """The error estimate exceeds the requested tolerance."""


class DomainError(ValueError):
    """An argument lies outside the region where the function is evaluated."""


@dataclass(frozen=True)
class BarnesEvalConfig:
    #: ladder length J in units of max(w); ``None`` picks ceil((K + |s|) / pi)
    shift_count: int | None = None
    #: number K of asymptotic tail terms
    expansion_order: int = 24
    target_rel_tol: float = 1e-10
    #: retry once with doubled J and K before raising AccuracyError
    escalate: bool = True
    #: use the closed form of Gamma_1 as the bottom level of log Gamma_r
    closed_form_base: bool = True

    def __post_init__(self):
        if self.shift_count is not None and self.shift_count < 0:
            raise ValueError("shift_count must be >= 0")
        if self.expansion_order < 1:
            raise ValueError("expansion_order must be >= 1")
        if not self.target_rel_tol > 0:
            raise ValueError("target_rel_tol must be positive")

    def shifts_for(self, s: complex) -> int:
        if self.shift_count is not None:
            return self.shift_count
        return max(1, math.ceil((self.expansion_order + abs(s)) / math.pi))

    def escalated(self) -> BarnesEvalConfig:
        j = None if self.shift_count is None else 2 * max(self.shift_count, 1)
        return replace(self, shift_count=j, expansion_order=2 * self.expansion_order, escalate=False)


DEFAULT_CONFIG = BarnesEvalConfig()


class Estimate(NamedTuple):
    value: complex | float
    #: absolute error bound (truncation + roundoff)
    error: float

    @property
    def rel_error(self) -> float:
        return self.error / abs(self.value) if self.value else math.inf


def _weights(omega: Sequence) -> tuple[Fraction, ...]:
    ws = tuple(Fraction(w) for w in omega)
    if not ws:
        raise ValueError("need at least one weight")
    if any(w <= 0 for w in ws):
        raise ValueError("weights must be positive")
    return ws


@lru_cache(maxsize=256)
def _bernoulli_cached(omega: tuple[Fraction, ...], k_max: int) -> tuple[Fraction, ...]:
    out = [Fraction(1)] + [Fraction(0)] * (k_max - 1)
    for w in omega:
        # (1 - exp(-w t)) / t = sum (-1)^k w^(k+1) t^k / (k+1)!
        a = [Fraction((-1) ** k) * w ** (k + 1) / math.factorial(k + 1) for k in range(k_max)]
        inv = [1 / a[0]]
        for n in range(1, k_max):
            inv.append(-sum(a[j] * inv[n - j] for j in range(1, n + 1)) / a[0])
        out = [sum(out[j] * inv[n - j] for j in range(n + 1)) for n in range(k_max)]
    return tuple(out)


def barnes_bernoulli_coeffs(omega: Sequence, K: int) -> list[Fraction]:
    """Exact b_0..b_{K-1} with ``t**r / prod_j (1 - exp(-w_j t)) = sum b_k t**k``."""
    if K < 1:
        raise ValueError("K must be >= 1")
    return list(_bernoulli_cached(_weights(omega), K))


# -- the ladder ----------------------------------------------------------------

# (value, accumulated magnitude, truncation error)
_Node = tuple


def _ladder(
    omega: tuple[Fraction, ...],
    x: float,
    threshold: float,
    leaf_level: int,
    point: Callable[[int, int], object],
    leaf: Callable[[object], _Node],
    tail: Callable[[int, object], _Node],
) -> _Node:
    """Run the ladder down to ``leaf_level``; ``point(o, L)`` is ``x + o/L``."""
    r = len(omega)
    scale = math.lcm(*(w.denominator for w in omega))
    units = [int(w * scale) for w in omega]
    plan = []
    needed = {0}
    for level in range(r, leaf_level, -1):
        u = units[level - 1]
        inner: set[int] = set()
        tails: set[int] = set()
        for o in needed:
            while o not in inner and x + o / scale < threshold:
                inner.add(o)
                o += u
            if o not in inner:
                tails.add(o)
        plan.append((level, u, inner, tails))
        needed = inner
    below = {o: leaf(point(o, scale)) for o in needed}
    for level, u, inner, tails in reversed(plan):
        vals = {o: tail(level, point(o, scale)) for o in tails}
        for o in sorted(inner, reverse=True):
            a, b = below[o], vals[o + u]
            vals[o] = (a[0] + b[0], a[1] + b[1], a[2] + b[2])
        below = vals
    return below[0]


class _Arith:
    """Scalar operations for the ladder, in double or mpmath precision."""

    def __init__(self, dps: int | None):
        self.dps = dps
        self.eps = _EPS if dps is None else 10.0 ** (1 - dps)

    def num(self, v):
        if self.dps is None:
            return float(v) if not isinstance(v, complex) else v
        if isinstance(v, Fraction):
            return mpmath.mpf(v.numerator) / v.denominator
        return mpmath.mpmathify(v)

    def log(self, y):
        return math.log(y) if self.dps is None else mpmath.log(y)

    def exp(self, z):
        return cmath.exp(z) if self.dps is None else mpmath.exp(z)

    def pi(self):
        return math.pi if self.dps is None else +mpmath.pi

    def lgamma(self, y):
        return math.lgamma(y) if self.dps is None else mpmath.loggamma(y)

    def point(self, x: float):
        if self.dps is None:
            return lambda o, scale: x + o / scale
        xm = mpmath.mpf(x)
        return lambda o, scale: xm + mpmath.mpf(o) / scale


def _zeta_tail_factory(omega, s: complex, K: int, ar: _Arith):
    """Tail evaluators ``sum_k b_k g_k(s) Y**(l-k-s)`` for each level l."""
    cache = {}
    s = ar.num(s)

    def coefficients(level):
        if level not in cache:
            b = [ar.num(c) for c in _bernoulli_cached(omega[:level], K + 1)]
            g = []
            for k in range(K + 1):
                if k < level:
                    v = ar.num(1.0 + 0j)
                    for i in range(1, level - k + 1):
                        v /= s - i
                elif k == level:
                    v = ar.num(1.0 + 0j)
                else:
                    v = g[-1] * (s + k - level - 1)
                g.append(v)
            cache[level] = [bk * gk for bk, gk in zip(b, g)]
        return cache[level]

    def tail(level, y):
        c = coefficients(level)
        power = ar.exp((level - s) * ar.log(y))
        inv_y = 1 / y
        total, mag = 0, 0.0
        for k in range(K):
            term = c[k] * power
            total += term
            mag += float(abs(term))
            power *= inv_y
        return total, mag, float(abs(c[K] * power))

    return tail


def _dlog_tail_factory(omega, K: int, ar: _Arith):
    """Tail evaluators for ``d/ds`` at s = 0 of the zeta tail."""
    cache = {}

    def coefficients(level):
        if level not in cache:
            b = _bernoulli_cached(omega[:level], K + 1)
            c0, c1 = [], []
            for k in range(K + 1):
                if k < level:
                    j = level - k
                    g0 = Fraction((-1) ** j, math.factorial(j))
                    g1 = g0 * sum(Fraction(1, i) for i in range(1, j + 1))
                elif k == level:
                    g0, g1 = Fraction(1), Fraction(0)
                else:
                    g0, g1 = Fraction(0), Fraction(math.factorial(k - level - 1))
                c0.append(ar.num(b[k] * g0))
                c1.append(ar.num(b[k] * g1))
            cache[level] = (c0, c1)
        return cache[level]

    def tail(level, y):
        c0, c1 = coefficients(level)
        log_y = ar.log(y)
        power = y**level
        inv_y = 1 / y
        total, mag = 0, 0.0
        term = 0
        for k in range(K + 1):
            term = power * (c1[k] - c0[k] * log_y)
            if k == K:
                break
            total += term
            mag += float(abs(term))
            power *= inv_y
        return total, mag, float(abs(term))

    return tail


def _evaluate(compute, cfg: BarnesEvalConfig, scale_of, convert) -> Estimate:
    """Run ``compute(cfg, arith)``; fall back to extended precision if roundoff-limited.

    ``compute`` returns ``(value, magnitude, truncation)``.  Escalation (double
    J and K) is tried once when the truncation part is too large.
    """
    attempts = [cfg] + ([cfg.escalated()] if cfg.escalate else [])
    best = None
    for c in attempts:
        val, mag, trunc = compute(c, _Arith(None))
        val = convert(val)
        err = trunc + _ROUNDOFF * mag
        tol = cfg.target_rel_tol * scale_of(val)
        if err <= tol:
            return Estimate(val, err)
        if trunc <= 0.5 * tol:
            # 8 * 10**-dps * mag <= tol / 4
            dps = max(20, math.ceil(math.log10(32 * max(mag, 1.0) / tol)) + 2)
            with mpmath.workdps(dps):
                ar = _Arith(dps)
                v2, mag2, trunc2 = compute(c, ar)
                v2 = convert(v2)
            err = trunc2 + 8 * ar.eps * mag2 + 2 * _EPS * abs(v2)
            if err <= cfg.target_rel_tol * scale_of(v2):
                return Estimate(v2, err)
            val = v2
        if best is None or err < best.error:
            best = Estimate(val, err)
    raise AccuracyError(
        f"estimated error {best.error:.3g} exceeds tolerance {cfg.target_rel_tol:.3g} (value {best.value:.6g})"
    )


def _check_order(r: int, omega: tuple) -> None:
    if r != len(omega):
        raise ValueError(f"order r={r} does not match {len(omega)} weights")


def barnes_zeta_estimate(
    r: int, omega: Sequence, x: float, s: complex, cfg: BarnesEvalConfig = DEFAULT_CONFIG
) -> Estimate:
    """Like :func:`barnes_zeta` but also returns the absolute error bound."""
    ws = _weights(omega)
    _check_order(r, ws)
    x = float(x)
    if not x > 0:
        raise DomainError("x must be positive")
    s = complex(s)
    nearest = round(s.real)
    if 1 <= nearest <= r and abs(s - nearest) < 1e-12:
        raise PoleError(f"zeta_{r} has a pole at s={nearest}")
    w_max = float(max(ws))

    def compute(c: BarnesEvalConfig, ar: _Arith):
        threshold = x + c.shifts_for(s) * w_max
        tail = _zeta_tail_factory(ws, s, c.expansion_order, ar)
        ms = ar.num(s)

        def leaf(y):
            v = ar.exp(-ms * ar.log(y))
            return v, float(abs(v)), 0.0

        return _ladder(ws, x, threshold, 0, ar.point(x), leaf, tail)

    return _evaluate(compute, cfg, lambda v: max(abs(v), 1e-300), complex)


def barnes_zeta(r: int, omega: Sequence, x: float, s: complex, cfg: BarnesEvalConfig = DEFAULT_CONFIG) -> complex:
    """Continued ``zeta_r(s, x, omega)`` for real ``x > 0`` and s off {1..r}."""
    return barnes_zeta_estimate(r, omega, x, s, cfg).value


def hurwitz_zeta(s: complex, x: float, cfg: BarnesEvalConfig = DEFAULT_CONFIG) -> complex:
    """Classical ``zeta(s, x) = sum_{n>=0} (n + x)**-s`` (the case r = 1, w = 1)."""
    return barnes_zeta(1, (1,), x, s, cfg)


def log_multiple_gamma_estimate(
    r: int, omega: Sequence, x: float, cfg: BarnesEvalConfig = DEFAULT_CONFIG
) -> Estimate:
    """Like :func:`log_multiple_gamma` with an absolute error bound."""
    ws = _weights(omega)
    _check_order(r, ws)
    return _log_gamma_cached(ws, float(x), cfg)


@lru_cache(maxsize=4096)
def _log_gamma_cached(ws: tuple[Fraction, ...], x: float, cfg: BarnesEvalConfig) -> Estimate:
    if not x > 0:
        raise DomainError("x must be positive")
    w_max = float(max(ws))

    def compute(c: BarnesEvalConfig, ar: _Arith):
        threshold = x + c.shifts_for(0.0) * w_max
        tail = _dlog_tail_factory(ws, c.expansion_order, ar)
        if c.closed_form_base:
            w = ar.num(ws[0])
            half_log_2pi = ar.log(2 * ar.pi()) / 2
            log_w = ar.log(w)

            def leaf(y):
                lg = ar.lgamma(y / w)
                v = lg - half_log_2pi + (y / w - 0.5) * log_w
                return v, float(abs(v) + abs(lg)), 0.0

            base = 1
        else:

            def leaf(y):
                v = -ar.log(y)
                return v, float(abs(v)), 0.0

            base = 0
        return _ladder(ws, x, threshold, base, ar.point(x), leaf, tail)

    # log values: the error is measured against max(1, |value|)
    return _evaluate(compute, cfg, lambda v: max(abs(v), 1.0), float)


def log_multiple_gamma(r: int, omega: Sequence, x: float, cfg: BarnesEvalConfig = DEFAULT_CONFIG) -> float:
    """``log Gamma_r(x, omega) = d/ds zeta_r(s, x, omega)`` at s = 0."""
    return log_multiple_gamma_estimate(r, omega, x, cfg).value


def log_multiple_sine_estimate(
    r: int, omega: Sequence, x: float, cfg: BarnesEvalConfig = DEFAULT_CONFIG
) -> Estimate:
    ws = _weights(omega)
    total = float(sum(ws))
    if not 0 < x < total:
        raise DomainError(f"multiple sine needs 0 < x < {total:g}, got {x!r}")
    a = log_multiple_gamma_estimate(r, ws, x, cfg)
    b = log_multiple_gamma_estimate(r, ws, total - x, cfg)
    sign = -1 if r % 2 else 1
    return Estimate(-a.value + sign * b.value, a.error + b.error)


def multiple_sine(r: int, omega: Sequence, x: float, cfg: BarnesEvalConfig = DEFAULT_CONFIG) -> float:
    """``S_r(x) = Gamma_r(x)**-1 Gamma_r(|w| - x)**((-1)**r)`` for 0 < x < |w|."""
    return math.exp(log_multiple_sine_estimate(r, omega, x, cfg).value)


__all__ = [
    "AccuracyError",
    "BarnesEvalConfig",
    "DEFAULT_CONFIG",
    "DomainError",
    "Estimate",
    "PoleError",
    "barnes_bernoulli_coeffs",
    "barnes_zeta",
    "barnes_zeta_estimate",
    "hurwitz_zeta",
    "log_multiple_gamma",
    "log_multiple_gamma_estimate",
    "log_multiple_sine_estimate",
    "multiple_sine",
]
