"""Walk zeta functions ``zeta(u) = det(I - uU)**-1`` as signed (u^n - 1) products.

A product ``eps * prod_n (u^n - 1)**e_n`` has ``Phi_d``-multiplicity
``c_d = sum_{d | n} e_n``, so the exponents are recovered from the stripped
multiplicities by running d from the largest index down.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .algebra import Poly
from .periodicity import PeriodResult, StripResult, period_of_operator, strip_cyclotomics
from .spectral import CharPoly
from .walks import WalkSpec, build_operator


class NotAllRootsOfUnity(ArithmeticError):
    """The polynomial has a root off the roots of unity; no (u^n - 1) product exists."""


class InfinitePeriodError(ArithmeticError):
    """The walk has infinite period, so its zeta has no (u^n - 1) product form."""


@dataclass(frozen=True)
class ZetaProductForm:
    """``sign * x**(l/2) * prod (x^m - 1) / prod (x^n - 1)``."""

    sign: int
    l: int
    numer_exps: tuple[int, ...]
    denom_exps: tuple[int, ...]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        numer = tuple(sorted(int(m) for m in self.numer_exps))
        denom = tuple(sorted(int(n) for n in self.denom_exps))
        if any(e < 1 for e in numer + denom):
            raise ValueError("exponents must be positive integers")
        object.__setattr__(self, "numer_exps", numer)
        object.__setattr__(self, "denom_exps", denom)

    @property
    def a(self) -> int:
        return len(self.numer_exps)

    @property
    def b(self) -> int:
        return len(self.denom_exps)

    @property
    def degree(self) -> Fraction:
        return Fraction(self.l, 2) + sum(self.numer_exps) - sum(self.denom_exps)

    @property
    def weight(self) -> int:
        return self.l + sum(self.numer_exps) - sum(self.denom_exps)

    @property
    def C(self) -> int:
        return -1 if (self.a - self.b) % 2 else 1

    def exponents(self) -> dict[int, int]:
        """``{n: e_n}`` with ``e_n > 0`` for numerator factors."""
        e = Counter(self.numer_exps)
        e.subtract(Counter(self.denom_exps))
        return {n: k for n, k in sorted(e.items()) if k}

    def inverse(self) -> ZetaProductForm:
        return ZetaProductForm(self.sign, -self.l, self.denom_exps, self.numer_exps)

    def expand(self) -> tuple[Poly, Poly]:
        """Exact ``(numerator, denominator)`` polynomials; requires even l."""
        if self.l % 2:
            raise ValueError("odd l gives a half-integer power of x")
        num = Poly([self.sign])
        den = Poly([1])
        half = self.l // 2
        if half >= 0:
            num = num * Poly.monomial(half)
        else:
            den = den * Poly.monomial(-half)
        for m in self.numer_exps:
            num = num * Poly.x_power_minus_one(m)
        for n in self.denom_exps:
            den = den * Poly.x_power_minus_one(n)
        return num, den

    def __call__(self, x: float) -> float:
        if x <= 0:
            raise ValueError("evaluation is only implemented for x > 0")
        lx = math.log(x)
        out = self.sign * math.exp(0.5 * self.l * lx)
        for m in self.numer_exps:
            out *= math.expm1(m * lx)
        for n in self.denom_exps:
            out /= math.expm1(n * lx)
        return out

    def render(self, var: str = "u") -> str:
        def block(exps: Sequence[int]) -> str:
            counts = Counter(exps)
            parts = []
            for n in sorted(counts):
                base = f"({var}^{n}-1)" if n > 1 else f"({var}-1)"
                parts.append(base + (f"^{counts[n]}" if counts[n] > 1 else ""))
            return "".join(parts) or "1"

        body = block(self.numer_exps)
        if self.l:
            body = f"{var}^({self.l}/2)" + ("" if body == "1" else body)
        if self.denom_exps:
            den = block(self.denom_exps)
            body = f"{body}/({den})" if len(set(self.denom_exps)) > 1 else f"{body}/{den}"
        return ("-" if self.sign < 0 else "") + body


def reciprocal_char_poly(cp: CharPoly | Poly) -> Poly:
    """``det(I - uU) = u**d f(1/u)`` for the monic charpoly f of degree d."""
    p = cp.poly if isinstance(cp, CharPoly) else cp
    if not p.is_monic():
        raise ValueError("expected a monic characteristic polynomial")
    return p.reverse()


def _exponents_from_multiplicities(mult: dict[int, int]) -> dict[int, int]:
    """Solve ``c_d = sum_{d | n} e_n`` for e, largest d first."""
    e: dict[int, int] = {}
    top = max(mult, default=0)
    for d in range(top, 0, -1):
        v = mult.get(d, 0) - sum(e.get(n, 0) for n in range(2 * d, top + 1, d))
        if v:
            e[d] = v
    return e


def to_product_form(q: Poly, stripped: StripResult | None = None) -> ZetaProductForm:
    """Write ``q`` (with ``q(0) = +-1``) as ``eps * prod (u^n - 1)**e_n``.

    Positive exponents land in ``numer_exps``.  ``stripped`` may be passed to
    reuse an earlier cyclotomic stripping of ``q``, or of its reversal, since
    both have the same Phi_d multiplicities.
    """
    q0 = q.coeff(0)
    if q0 not in (1, -1):
        raise ValueError("q(0) must be +1 or -1")
    if stripped is None:
        stripped = strip_cyclotomics(q.monic()) if q.degree >= 1 else StripResult({}, {}, Poly([1]))
    if stripped.residual.degree >= 1:
        raise NotAllRootsOfUnity(
            f"residual factor of degree {stripped.residual.degree} has roots off the unit roots"
        )
    mult = {}
    for d, share in stripped.multiplicities.items():
        if share.denominator != 1:
            raise NotAllRootsOfUnity(f"Phi_{d} appears only partially (share {share})")
        mult[d] = int(share)
    e = _exponents_from_multiplicities(mult)
    parity = sum(e.values()) % 2
    sign = (1 if q0 == 1 else -1) * (-1 if parity else 1)
    form = ZetaProductForm(
        sign,
        0,
        tuple(n for n, k in e.items() if k > 0 for _ in range(k)),
        tuple(n for n, k in e.items() if k < 0 for _ in range(-k)),
    )
    num, den = form.expand()
    if q * den != num:
        raise ArithmeticError("product form does not re-expand to the input")
    return form


def zeta_of_walk(spec: WalkSpec) -> ZetaProductForm:
    """Product form of ``zeta(u) = det(I - uU)**-1``; needs a finite period."""
    return zeta_from_period(period_of_operator(build_operator(spec), double_check=False))


def zeta_from_period(result: PeriodResult) -> ZetaProductForm:
    """Same as ``zeta_of_walk`` but reusing an existing period analysis."""
    if not result.is_finite:
        raise InfinitePeriodError(f"{result.spec.label} has infinite period")
    q = reciprocal_char_poly(result.char_poly)
    det_form = to_product_form(q, _strip_of_reversal(result))
    return det_form.inverse()


def _strip_of_reversal(result) -> StripResult:
    # reversal maps Phi_1 to -Phi_1 and fixes Phi_d (d > 1), so multiplicities carry over
    return StripResult(dict(result.cyclotomic_part), {}, Poly([1]))


class AutomorphicWeight(NamedTuple):
    C: int
    D: int
    max_rel_residual: float


def automorphic_weight(form: ZetaProductForm, num_samples: int = 20, tol: float = 1e-9) -> AutomorphicWeight:
    """``(C, D)`` with ``f(1/x) = C x**-D f(x)``, checked at points of (1, 3)."""
    c, d = form.C, form.weight
    worst = 0.0
    for x in _open_grid(1.0, 3.0, num_samples):
        lhs = form(1.0 / x)
        rhs = c * x ** (-d) * form(x)
        worst = max(worst, abs(lhs - rhs) / max(abs(lhs), abs(rhs)))
    if worst >= tol:
        raise ArithmeticError(f"weight identity fails: relative residual {worst:.3g}")
    return AutomorphicWeight(c, d, worst)


def _open_grid(lo: float, hi: float, k: int) -> Iterable[float]:
    step = (hi - lo) / (k + 1)
    return (lo + (i + 1) * step for i in range(k))


__all__ = [
    "AutomorphicWeight",
    "InfinitePeriodError",
    "NotAllRootsOfUnity",
    "ZetaProductForm",
    "automorphic_weight",
    "reciprocal_char_poly",
    "to_product_form",
    "zeta_from_period",
    "zeta_of_walk",
]
