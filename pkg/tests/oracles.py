"""Independent reference computations used across the test modules.

Nothing here calls into the library's numerics: determinants come from numpy,
special functions from mpmath or scipy, lattice sums from explicit counting.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import mpmath
import numpy as np


def float_matrix(op) -> np.ndarray:
    return np.array([[float(v) for v in row] for row in op.entries], dtype=float)


def numpy_charpoly_at(op, x0: complex) -> complex:
    u = float_matrix(op)
    return complex(np.linalg.det(x0 * np.eye(u.shape[0]) - u))


def totient_by_gcd(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def cyclotomic_by_roots(n: int) -> list[int]:
    """Integer coefficients of prod (x - zeta^k) over primitive n-th roots, rounded."""
    coeffs = np.array([1.0 + 0j])
    for k in range(1, n + 1):
        if math.gcd(k, n) == 1:
            root = np.exp(2j * np.pi * k / n)
            coeffs = np.convolve(coeffs, [-root, 1.0])
    return [int(round(c.real)) for c in coeffs]


def lattice_counts(omega: tuple[int, ...], k_max: int) -> list[int]:
    """#{n in N^r : n.omega = k} for k < k_max, by direct enumeration of the lattice."""
    counts = [0] * k_max
    ranges = [range(0, (k_max - 1) // w + 1) for w in omega]
    for n in itertools.product(*ranges):
        k = sum(a * w for a, w in zip(n, omega))
        if k < k_max:
            counts[k] += 1
    return counts


def lattice_zeta_truncated(omega, x: float, s: complex, k_max: int) -> complex:
    """Plain lattice sum over n.omega < k_max."""
    counts = lattice_counts(tuple(omega), k_max)
    return complex(sum(c * mpmath.power(x + k, -s) for k, c in enumerate(counts) if c))


def lattice_zeta_exact(omega: tuple[int, ...], x: float, s, dps: int = 30, derivative: int = 0) -> complex:
    """The lattice sum regrouped by residue class mod L = lcm(omega).

    On each class k = rho + m L the lattice count is a polynomial of degree
    r - 1 in m (fitted exactly from enumerated counts), so the sum becomes a
    finite combination of Hurwitz zetas evaluated by mpmath.  With
    ``derivative=1`` the s-derivative is returned instead.
    """
    r = len(omega)
    big_l = math.lcm(*omega)
    counts = lattice_counts(omega, big_l * (r + 1))
    total = mpmath.mpc(0)
    with mpmath.workdps(dps):
        for rho in range(big_l):
            samples = [Fraction(counts[rho + m * big_l]) for m in range(r)]
            poly = _fit_polynomial(samples)  # c(m) = sum poly[j] m^j
            # m = (y + m L - y)/L with y = x + rho; expand (z - y)^j / L^j
            y = mpmath.mpf(x) + rho
            for j, cj in enumerate(poly):
                if not cj:
                    continue
                for i in range(j + 1):
                    coef = mpmath.mpf(cj.numerator) / cj.denominator * math.comb(j, i) * (-y) ** (j - i) / mpmath.mpf(big_l) ** j
                    # sum_m (y + mL)^(i - s) = L^(i - s) zeta(s - i, y / L)
                    scale = coef * mpmath.power(big_l, i - s)
                    z = mpmath.zeta(s - i, y / big_l)
                    if derivative:
                        z = mpmath.zeta(s - i, y / big_l, 1) - mpmath.log(big_l) * z
                    total += scale * z
        return complex(total)


def _fit_polynomial(values: list[Fraction]) -> list[Fraction]:
    """Coefficients (low first) of the degree < len(values) polynomial through (m, values[m])."""
    n = len(values)
    rows = [[Fraction(m) ** j for j in range(n)] + [values[m]] for m in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if rows[i][c] != 0)
        rows[c], rows[piv] = rows[piv], rows[c]
        for i in range(n):
            if i != c and rows[i][c]:
                f = rows[i][c] / rows[c][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return [rows[i][n] / rows[i][i] for i in range(n)]


def rel(a, b) -> float:
    return abs(a - b) / max(abs(a), abs(b))
