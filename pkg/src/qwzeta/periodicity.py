"""Finite-period decision by stripping cyclotomic factors from the charpoly.

U is unitary, hence diagonalizable, so U**T = I exactly when every eigenvalue
is a T-th root of unity.  ``strip_cyclotomics`` divides out ``gcd(p, Phi_n)``
for every n that could possibly contribute (phi(n) <= 2 deg p, because a
primitive n-th root of unity has degree at least phi(n)/2 over Q(sqrt 2)); the
walk has finite period iff nothing but a constant is left.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

import gmpy2

from .algebra import Poly, cyclotomic, euler_phi, indices_with_totient_at_most, poly_divmod, poly_gcd
from .spectral import CharPoly, char_poly
from .walks import WalkOperator, WalkSpec, build_operator, check_unitary, matrix_power_is_identity

#: Finite periods up to this bound are re-checked by exact matrix powers.
POWER_CHECK_LIMIT = 10_000

class CoefficientRing(str, enum.Enum):
    Z = "Z"
    Q_NOT_Z = "QnotZ"
    NOT_Q = "notQ"


def integer_coefficient_test(p: Poly) -> CoefficientRing:
    """Classify the coefficients of a monic polynomial as Z, Q \\ Z, or not in Q.

    Only ``Q_NOT_Z`` carries information about periodicity: a monic rational
    polynomial whose roots are all roots of unity has integer coefficients.
    ``NOT_Q`` is inconclusive (x^2 - sqrt2 x + 1 divides Phi_8).
    """
    if not p.is_monic():
        raise ValueError("integer_coefficient_test expects a monic polynomial")
    if not p.is_rational():
        return CoefficientRing.NOT_Q
    if all(c.rat.denominator == 1 for c in p.coeffs):
        return CoefficientRing.Z
    return CoefficientRing.Q_NOT_Z


@dataclass(frozen=True)
class StripResult:
    multiplicities: dict[int, Fraction]
    factors: dict[int, Poly]
    residual: Poly

    def reconstruct(self) -> Poly:
        out = self.residual
        for n in sorted(self.factors):
            out = out * self.factors[n]
        return out


def _galois_representatives(n: int, rational: bool) -> list[int]:
    """Exponents j so that zeta_n**j meets every irreducible factor of Phi_n over the coefficient field."""
    if rational or n % 8:
        return [1]
    # sqrt2 is fixed exactly by j = +-1 mod 8; the other coset is j = +-3 mod 8
    j = next(j for j in range(3, n) if j % 8 in (3, 5) and math.gcd(j, n) == 1)
    return [1, j]


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _prime_with_roots_of_unity(order: int) -> tuple[int, int]:
    """Smallest prime q = 1 (mod order) above 2**40 and a primitive order-th root mod q."""
    k = (1 << 40) // order + 1
    while not gmpy2.is_prime(k * order + 1, 50):
        k += 1
    q = k * order + 1
    factors = _prime_factors(order)
    g = 2
    while True:
        w = pow(g, (q - 1) // order, q)
        if all(pow(w, order // f, q) != 1 for f in factors):
            return q, w
        g += 1


class _ModularScreen:
    """Exact necessary test for ``Phi_n``-roots of p via reduction into F_q.

    With q = 1 mod L (L = n, or lcm(n, 8) when p involves sqrt 2) the map
    zeta_L -> w is a ring homomorphism Z[zeta_L] -> F_q, sending sqrt 2 to
    w**(L/8) + w**(-L/8).  If p(zeta_n**j) = 0 then its image vanishes too, so a
    nonzero image rules the factor out; a zero image only schedules the exact
    division.
    """

    def __init__(self, p: Poly):
        self.coeffs = p.coeffs
        self.rational = p.is_rational()

    def may_divide(self, n: int) -> bool:
        order = n if self.rational else math.lcm(n, 8)
        q, w = _prime_with_roots_of_unity(order)
        s = 0 if self.rational else (pow(w, order // 8, q) + pow(w, -(order // 8), q)) % q
        image = []
        for c in self.coeffs:
            a = c.rat.numerator * pow(c.rat.denominator, -1, q)
            if c.irr:
                a += c.irr.numerator * pow(c.irr.denominator, -1, q) * s
            image.append(a % q)
        for j in _galois_representatives(n, self.rational):
            z = pow(w, (order // n) * j, q)
            acc = 0
            for c in reversed(image):
                acc = (acc * z + c) % q
            if acc == 0:
                return True
        return False


def strip_cyclotomics(p: Poly, candidates: Iterable[int] | None = None) -> StripResult:
    """Divide every cyclotomic factor out of ``p`` (monic, over Q(sqrt 2)).

    ``candidates`` overrides the enumeration (order included); by default all n
    with phi(n) <= 2 deg p are tried.  A modular screen (see
    ``_ModularScreen``) only skips n that provably contribute nothing.
    """
    if not p.is_monic() or p.degree < 1:
        raise ValueError("strip_cyclotomics expects a monic polynomial of degree >= 1")
    if candidates is None:
        candidates = indices_with_totient_at_most(2 * p.degree)
    rational = p.is_rational()
    multiplicities: dict[int, Fraction] = {}
    factors: dict[int, Poly] = {}
    residual = p
    screen = _ModularScreen(p)
    for n in candidates:
        if residual.degree < 1:
            break
        if not screen.may_divide(n):
            continue
        phi_n = cyclotomic(n)
        removed = Poly([1])
        while residual.degree >= 1:
            quotient, rem = poly_divmod(residual, phi_n)
            if rem.is_zero():
                # gcd(residual, Phi_n) = Phi_n
                residual, g = quotient, phi_n
            else:
                if rational:
                    break  # Phi_n is irreducible over Q
                g = poly_gcd(phi_n, rem)
                if g.degree < 1:
                    break
                residual, rem = poly_divmod(residual, g)
                if not rem.is_zero():
                    raise ArithmeticError("gcd does not divide exactly")
            removed = removed * g
        if removed.degree >= 1:
            multiplicities[n] = Fraction(removed.degree, euler_phi(n))
            factors[n] = removed
            if residual.degree >= 1:
                screen = _ModularScreen(residual)
    return StripResult(multiplicities, factors, residual)


@dataclass(frozen=True)
class PeriodResult:
    spec: WalkSpec
    #: least T with U**T = I, or None when no such T exists
    period: int | None
    cyclotomic_part: dict[int, Fraction]
    residual: Poly
    coefficient_ring: CoefficientRing
    char_poly: CharPoly = field(repr=False)
    factors: dict[int, Poly] = field(repr=False, default_factory=dict)

    @property
    def is_finite(self) -> bool:
        return self.period is not None

    @property
    def rational_but_not_integer(self) -> bool:
        return self.coefficient_ring is CoefficientRing.Q_NOT_Z

    def render_period(self) -> str:
        return "inf" if self.period is None else str(self.period)


def period_of_operator(op: WalkOperator, double_check: bool = True) -> PeriodResult:
    if not check_unitary(op):
        raise ArithmeticError(f"{op.spec.label}: operator is not unitary")
    cp = char_poly(op)
    stripped = strip_cyclotomics(cp.poly)
    ring = integer_coefficient_test(cp.poly)
    if stripped.residual.degree < 1:
        t = math.lcm(*stripped.multiplicities)
    else:
        t = None
    if t is not None and ring is CoefficientRing.Q_NOT_Z:
        raise ArithmeticError("finite period with non-integral rational charpoly")
    if double_check and t is not None and t <= POWER_CHECK_LIMIT:
        if not matrix_power_is_identity(op, t):
            raise ArithmeticError(f"{op.spec.label}: U^{t} != I despite cyclotomic charpoly")
    return PeriodResult(
        spec=op.spec,
        period=t,
        cyclotomic_part=stripped.multiplicities,
        residual=stripped.residual,
        coefficient_ring=ring,
        char_poly=cp,
        factors=stripped.factors,
    )


def period(spec: WalkSpec, double_check: bool = True) -> PeriodResult:
    """Exact period of the walk, with ``period=None`` meaning infinite."""
    return period_of_operator(build_operator(spec), double_check=double_check)


def proper_divisors(t: int) -> list[int]:
    return [d for d in range(1, t) if t % d == 0]
