"""Exact arithmetic in Q(sqrt 2) and dense univariate polynomials over it.

Rationals are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator).  :class:`QuadRat` is ``rat + irr*sqrt(2)`` with both
parts rational, and :class:`Poly` is a dense coefficient tuple, lowest degree
first, with trailing zeros trimmed.  Everything here is immutable.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Fraction

_SQRT2_FLOAT = math.sqrt(2.0)

Scalar = Union[int, Fraction, "QuadRat"]


class QuadRat:
    """An element ``rat + irr*sqrt(2)`` of the field Q(sqrt 2)."""

    __slots__ = ("rat", "irr")

    def __init__(self, rat: int | Fraction = 0, irr: int | Fraction = 0):
        self.rat = Fraction(rat)
        self.irr = Fraction(irr)

    @classmethod
    def _raw(cls, rat: Fraction, irr: Fraction) -> QuadRat:
        obj = object.__new__(cls)
        obj.rat = rat
        obj.irr = irr
        return obj

    @classmethod
    def coerce(cls, value: Scalar) -> QuadRat:
        if isinstance(value, QuadRat):
            return value
        if isinstance(value, (int, Fraction)):
            return cls._raw(Fraction(value), _FZERO)
        raise TypeError(f"cannot interpret {value!r} as an element of Q(sqrt 2)")

    def is_rational(self) -> bool:
        return self.irr == 0

    def is_zero(self) -> bool:
        return self.rat == 0 and self.irr == 0

    def conjugate(self) -> QuadRat:
        return QuadRat._raw(self.rat, -self.irr)

    def norm(self) -> Fraction:
        """Field norm ``(a + b sqrt2)(a - b sqrt2) = a^2 - 2 b^2``."""
        return self.rat * self.rat - 2 * self.irr * self.irr

    def __float__(self) -> float:
        return float(self.rat) + float(self.irr) * _SQRT2_FLOAT

    def __complex__(self) -> complex:
        return complex(float(self))

    def __add__(self, other):
        if isinstance(other, QuadRat):
            return QuadRat._raw(self.rat + other.rat, self.irr + other.irr)
        if isinstance(other, (int, Fraction)):
            return QuadRat._raw(self.rat + other, self.irr)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return QuadRat._raw(-self.rat, -self.irr)

    def __sub__(self, other):
        if isinstance(other, QuadRat):
            return QuadRat._raw(self.rat - other.rat, self.irr - other.irr)
        if isinstance(other, (int, Fraction)):
            return QuadRat._raw(self.rat - other, self.irr)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadRat._raw(other - self.rat, -self.irr)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, QuadRat):
            a, b, c, d = self.rat, self.irr, other.rat, other.irr
            if b == 0 and d == 0:
                return QuadRat._raw(a * c, _FZERO)
            return QuadRat._raw(a * c + 2 * b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return QuadRat._raw(self.rat * other, self.irr * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(sqrt 2)")
            return QuadRat._raw(self.rat / other, self.irr / other)
        if isinstance(other, QuadRat):
            if other.irr == 0:
                return self / other.rat
            return self * quad_inverse(other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return quad_inverse(self) * other
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return quad_inverse(self) ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadRat):
            return self.rat == other.rat and self.irr == other.irr
        if isinstance(other, (int, Fraction)):
            return self.irr == 0 and self.rat == other
        return NotImplemented

    def __hash__(self):
        if self.irr == 0:
            return hash(self.rat)
        return hash((self.rat, self.irr))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"QuadRat({format_quadrat(self)!r})"

    def __str__(self):
        return format_quadrat(self)


_FZERO = Fraction(0)
ZERO = QuadRat(0)
ONE = QuadRat(1)
SQRT2 = QuadRat(0, 1)


def quad_inverse(x: Scalar) -> QuadRat:
    """Multiplicative inverse in Q(sqrt 2); raises ZeroDivisionError on 0."""
    x = QuadRat.coerce(x)
    n = x.norm()
    if n == 0:
        # the norm form a^2 - 2b^2 is anisotropic over Q
        raise ZeroDivisionError("inverse of zero in Q(sqrt 2)")
    return QuadRat._raw(x.rat / n, -x.irr / n)


def format_quadrat(x: QuadRat) -> str:
    """Render as ``"p/q"``, ``"r/t√2"`` or ``"p/q+r/t√2"`` (no decimals)."""
    if x.irr == 0:
        return str(x.rat)
    irr = f"{x.irr}√2"
    if x.rat == 0:
        return irr
    sep = "+" if x.irr > 0 else ""
    return f"{x.rat}{sep}{irr}"


def parse_quadrat(text: str) -> QuadRat:
    """Inverse of :func:`format_quadrat`."""
    text = text.strip()
    if not text.endswith("√2"):
        return QuadRat(Fraction(text))
    body = text[: -len("√2")]
    # split at the last sign that is not the leading one and not inside a fraction
    for i in range(len(body) - 1, 0, -1):
        if body[i] in "+-" and body[i - 1] not in "/":
            return QuadRat(Fraction(body[:i]), Fraction(body[i:]))
    return QuadRat(0, Fraction(body))


class Poly:
    """Dense polynomial over Q(sqrt 2); ``coeffs[k]`` multiplies ``x**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [QuadRat.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[QuadRat, ...] = tuple(cs)

    @classmethod
    def _from_trimmed(cls, coeffs: Sequence[QuadRat]) -> Poly:
        obj = object.__new__(cls)
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> Poly:
        return cls([0] * degree + [coeff])

    @classmethod
    def x_power_minus_one(cls, n: int) -> Poly:
        return cls([-1] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> QuadRat:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_rational(self) -> bool:
        return all(c.irr == 0 for c in self.coeffs)

    def coeff(self, k: int) -> QuadRat:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def monic(self) -> Poly:
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic associate")
        inv = quad_inverse(self.lead)
        return Poly._from_trimmed([c * inv for c in self.coeffs])

    def conjugate(self) -> Poly:
        return Poly._from_trimmed([c.conjugate() for c in self.coeffs])

    def reverse(self, degree: int | None = None) -> Poly:
        """``x**degree * p(1/x)``; ``degree`` defaults to ``deg p``."""
        d = self.degree if degree is None else degree
        cs = list(self.coeffs) + [ZERO] * (d + 1 - len(self.coeffs))
        return Poly._from_trimmed(cs[d::-1])

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._from_trimmed(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._from_trimmed([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadRat)):
            other = QuadRat.coerce(other)
            return Poly._from_trimmed([c * other for c in self.coeffs])
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Poly._from_trimmed(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result, base = Poly([1]), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other):
        return poly_divmod(self, _as_poly(other))

    def __floordiv__(self, other):
        return poly_divmod(self, _as_poly(other))[0]

    def __mod__(self, other):
        return poly_divmod(self, _as_poly(other))[1]

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, QuadRat)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x: Scalar) -> QuadRat:
        """Exact Horner evaluation at a point of Q(sqrt 2)."""
        x = QuadRat.coerce(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"Poly([{', '.join(format_quadrat(c) for c in self.coeffs)}])"


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly([value])


def poly_divmod(p: Poly, d: Poly) -> tuple[Poly, Poly]:
    """Return ``(q, r)`` with ``p = q*d + r`` and ``deg r < deg d``."""
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p.coeffs)
    dd = d.degree
    if len(r) <= dd:
        return Poly(), p
    dc = d.coeffs
    inv_lead = quad_inverse(d.lead)
    monic_divisor = d.lead == 1
    q = [ZERO] * (len(r) - dd)
    for k in range(len(r) - 1, dd - 1, -1):
        c = r[k]
        if c.is_zero():
            continue
        if not monic_divisor:
            c = c * inv_lead
        q[k - dd] = c
        base = k - dd
        for j in range(dd):
            dj = dc[j]
            if not dj.is_zero():
                r[base + j] = r[base + j] - c * dj
        r[k] = ZERO
    return Poly._from_trimmed(q), Poly._from_trimmed(r[:dd])


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over Q(sqrt 2) by the Euclidean algorithm."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = p, q
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = poly_divmod(a, b)[1]
        a, b = b, (r.monic() if not r.is_zero() else r)
    return a.monic()


def poly_eval_complex(p: Poly, z: complex) -> complex:
    """Horner evaluation in double precision (coefficients rounded first)."""
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * z + float(c)
    return acc


def poly_to_floats(p: Poly) -> list[float]:
    return [float(c) for c in p.coeffs]


# -- cyclotomic polynomials ----------------------------------------------------


def _int_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (den monic), lowest degree first."""
    r = list(num)
    dd = len(den) - 1
    q = [0] * (len(r) - dd)
    for k in range(len(r) - 1, dd - 1, -1):
        c = r[k]
        if c:
            q[k - dd] = c
            for j in range(dd):
                if den[j]:
                    r[k - dd + j] -= c * den[j]
            r[k] = 0
    if any(r[:dd]):
        raise ArithmeticError("inexact cyclotomic division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, lowest first."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d < n:
            num = _int_divexact(num, list(cyclotomic_coeffs(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Poly:
    """The n-th cyclotomic polynomial Phi_n (Phi_1 = x - 1)."""
    return Poly(cyclotomic_coeffs(n))


def divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=8)
def indices_with_totient_at_most(bound: int) -> tuple[int, ...]:
    """All n >= 1 with phi(n) <= bound, in increasing order.

    Uses phi(n) >= sqrt(n/2) to cap the sieve at 2*bound**2.
    """
    limit = max(2 * bound * bound, 2)
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:
            for k in range(p, limit + 1, p):
                phi[k] -= phi[k] // p
    return tuple(n for n in range(1, limit + 1) if phi[n] <= bound)


def root_of_unity(n: int, k: int = 1) -> complex:
    return cmath.exp(2j * math.pi * k / n)
