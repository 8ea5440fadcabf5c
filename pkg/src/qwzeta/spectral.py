"""Characteristic polynomials of walk operators and the closed product formulas.

``char_poly`` is exact: ``det(x I - U)`` is sampled at the integer abscissae
``0..d`` by exact sparse Gaussian elimination and then interpolated.  When U is
a scalar multiple ``U = M / c`` of an integer matrix (c = 3 for the Grover
coins, c = sqrt 2 for the Hadamard coins) the sampling runs on M over Z/Q and
``f_U(x) = c**-d f_M(c x)`` is applied coefficientwise; otherwise the samples
are taken directly over Q(sqrt 2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from math import lcm
from typing import Sequence

import gmpy2

from .algebra import ONE, ZERO, SQRT2, Poly, QuadRat, poly_eval_complex
from .walks import CoinType, Family, WalkOperator, WalkSpec, build_operator, determinant


class UnsupportedFamilyError(ValueError):
    """No closed product formula is available for this walk."""


@dataclass(frozen=True)
class CharPoly:
    spec: WalkSpec
    poly: Poly

    @property
    def is_rational(self) -> bool:
        return self.poly.is_rational()

    @property
    def degree(self) -> int:
        return self.poly.degree


def _integer_scaling(op: WalkOperator):
    """Return ``(c, M)`` with ``c*U = M`` integral, or ``None``."""
    values = [v for row in op.rows for v in row.values()]
    if all(v.irr == 0 for v in values):
        q = lcm(*(v.rat.denominator for v in values)) if values else 1
        rows = [{j: int(v.rat * q) for j, v in row.items()} for row in op.rows]
        return QuadRat(q), rows
    if all(v.rat == 0 for v in values):
        # sqrt2 * (b sqrt2) = 2b
        q = lcm(*((2 * v.irr).denominator for v in values))
        rows = [{j: int(2 * v.irr * q) for j, v in row.items()} for row in op.rows]
        return SQRT2 * q, rows
    return None


def _det_shifted(rows: Sequence[dict[int, int]], x0: int):
    """Exact ``det(x0 I - M)`` for sparse integer M (as an mpq)."""
    n = len(rows)
    a: list[dict[int, object]] = []
    col_rows: list[set[int]] = [set() for _ in range(n)]
    for i, row in enumerate(rows):
        r = {j: gmpy2.mpq(-v) for j, v in row.items()}
        r[i] = r.get(i, gmpy2.mpq(0)) + x0
        r = {j: v for j, v in r.items() if v != 0}
        a.append(r)
        for j in r:
            col_rows[j].add(i)
    perm = [0] * n
    det = gmpy2.mpq(1)
    for k in range(n):
        cands = col_rows[k]
        if not cands:
            return gmpy2.mpq(0)
        p = min(cands, key=lambda i: (len(a[i]), i))
        prow = a[p]
        for c in prow:
            col_rows[c].discard(p)
        pk = prow[k]
        det *= pk
        perm[k] = p
        for j in list(cands):
            rj = a[j]
            f = rj[k] / pk
            for c, v in prow.items():
                nv = rj.get(c, 0) - f * v
                if nv == 0:
                    if c in rj:
                        del rj[c]
                        col_rows[c].discard(j)
                else:
                    if c not in rj:
                        col_rows[c].add(j)
                    rj[c] = nv
    # sign of the row permutation k -> perm[k]
    seen = [False] * n
    sign = 1
    for i in range(n):
        if not seen[i]:
            length, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return det * sign


def _newton_integer_interpolation(values: Sequence[int]) -> list[int]:
    """Coefficients of the integer polynomial through ``(k, values[k])``, k=0..d."""
    d = len(values) - 1
    diffs = list(values)
    forward = [diffs[0]]
    for j in range(1, d + 1):
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
        forward.append(diffs[0])
    coeffs = [0] * (d + 1)
    falling = [1]  # x (x-1) ... (x-j+1)
    fact = 1
    for j in range(d + 1):
        if j:
            fact *= j
            falling = [0] + falling
            for i in range(len(falling) - 1):
                falling[i] -= (j - 1) * falling[i + 1]
        c, rem = divmod(forward[j], fact)
        if rem:
            raise ArithmeticError("interpolated polynomial is not integral")
        for i, f in enumerate(falling):
            coeffs[i] += c * f
    return coeffs


def _newton_field_interpolation(xs: Sequence[int], ys: Sequence[QuadRat]) -> Poly:
    n = len(xs)
    table = list(ys)
    newton = [table[0]]
    for j in range(1, n):
        table = [(table[i + 1] - table[i]) / (xs[i + j] - xs[i]) for i in range(n - j)]
        newton.append(table[0])
    poly = Poly([newton[-1]])
    for j in range(n - 2, -1, -1):
        poly = poly * Poly([-xs[j], 1]) + Poly([newton[j]])
    return poly


def char_poly(op: WalkOperator) -> CharPoly:
    """Exact ``det(x I - U)`` by evaluation at 0..d and interpolation."""
    d = op.dim
    scaled = _integer_scaling(op)
    if scaled is None:
        dense = op.entries
        xs = list(range(d + 1))
        ys = []
        for x0 in xs:
            shifted = [
                [(x0 if i == j else 0) - dense[i][j] for j in range(d)] for i in range(d)
            ]
            ys.append(determinant(shifted))
        poly = _newton_field_interpolation(xs, ys)
    else:
        c, m_rows = scaled
        values = []
        for k in range(d + 1):
            v = _det_shifted(m_rows, k)
            if v.denominator != 1:
                raise ArithmeticError("integer determinant is not integral")
            values.append(int(v.numerator))
        m_coeffs = _newton_integer_interpolation(values)
        inv_c = 1 / c
        coeffs = [ZERO] * (d + 1)
        power = ONE  # c**-(d-k)
        for k in range(d, -1, -1):
            coeffs[k] = power * m_coeffs[k]
            power = power * inv_c
        poly = Poly(coeffs)
    if not poly.is_monic() or poly.degree != d:
        raise ArithmeticError("characteristic polynomial is not monic of full degree")
    return CharPoly(op.spec, poly)


def char_poly_of(spec: WalkSpec) -> CharPoly:
    return char_poly(build_operator(spec))


def product_formula_eval(spec: WalkSpec, x: complex) -> complex:
    """Evaluate the printed closed-form product for ``det(x I - U)``.

    The Grover F-type formula is evaluated verbatim even though it does not
    match the operator; see :func:`cross_check_factorization`.
    """
    n = spec.n
    if spec.family is Family.HADAMARD2:
        if spec.coin_type is not CoinType.F:
            raise UnsupportedFamilyError("no product formula for the M-type Hadamard walk")
        out = 1 + 0j
        for k in range(n):
            out *= x * x - math.sqrt(2) * math.cos(2 * math.pi * k / n) * x + 1
        return out
    sign = 1.0 if spec.coin_type is CoinType.M else -1.0
    out = (x - 1) ** n
    for k in range(n):
        out *= x * x + sign * (2.0 / 3.0) * (2 + math.cos(2 * math.pi * k / n)) * x + 1
    return out


@dataclass(frozen=True)
class FactorizationCheck:
    spec: WalkSpec
    max_rel_err: float
    num_samples: int

    @property
    def consistent(self) -> bool:
        return self.max_rel_err < 1e-6


def cross_check_factorization(
    spec: WalkSpec, num_samples: int = 100, cp: CharPoly | None = None
) -> FactorizationCheck:
    """Compare the product formula with the exact charpoly on ``|x| = 2``."""
    if num_samples < 1:
        raise ValueError("num_samples must be >= 1")
    if cp is None:
        cp = char_poly_of(spec)
    worst = 0.0
    for j in range(num_samples):
        # offset keeps the samples off the real axis symmetries
        z = 2.0 * cmath.exp(2j * math.pi * (j + 0.37) / num_samples)
        exact = poly_eval_complex(cp.poly, z)
        formula = product_formula_eval(spec, z)
        worst = max(worst, abs(formula - exact) / abs(exact))
    return FactorizationCheck(spec, worst, num_samples)


def det_at(op: WalkOperator, x0) -> QuadRat:
    """Dense exact ``det(x0 I - U)``; an independent check on :func:`char_poly`."""
    x0 = QuadRat.coerce(x0)
    dense = op.entries
    d = op.dim
    return determinant([[(x0 if i == j else ZERO) - dense[i][j] for j in range(d)] for i in range(d)])


__all__ = [
    "CharPoly",
    "FactorizationCheck",
    "UnsupportedFamilyError",
    "char_poly",
    "char_poly_of",
    "cross_check_factorization",
    "det_at",
    "product_formula_eval",
]

