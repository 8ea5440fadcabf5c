import itertools
from fractions import Fraction

import numpy as np
import pytest

from oracles import float_matrix, numpy_charpoly_at, rel
from qwzeta.algebra import QuadRat, poly_eval_complex
from qwzeta.spectral import (
    UnsupportedFamilyError,
    char_poly,
    char_poly_of,
    cross_check_factorization,
    det_at,
    product_formula_eval,
)
from qwzeta.walks import CoinType, Family, WalkSpec, build_operator

ALL_KINDS = list(itertools.product(Family, CoinType))


@pytest.mark.parametrize("family,coin", ALL_KINDS)
@pytest.mark.parametrize("n", [2, 3, 4])
def test_interpolation_matches_dense_determinant(family, coin, n):
    op = build_operator(WalkSpec(family, coin, n))
    cp = char_poly(op)
    assert cp.degree == op.dim
    assert cp.poly.is_monic()
    for x0 in (Fraction(1, 3), Fraction(-7, 2), QuadRat(1, 1)):
        assert cp.poly(x0) == det_at(op, x0)


@pytest.mark.parametrize("family,coin", ALL_KINDS)
@pytest.mark.parametrize("n", [5, 8, 11])
def test_charpoly_against_numpy(family, coin, n):
    op = build_operator(WalkSpec(family, coin, n))
    cp = char_poly(op)
    for z in (1.3 + 0.4j, -0.7j, 2.0):
        assert rel(poly_eval_complex(cp.poly, z), numpy_charpoly_at(op, z)) < 1e-9


@pytest.mark.parametrize("family,coin", ALL_KINDS)
def test_roots_on_unit_circle(family, coin):
    op = build_operator(WalkSpec(family, coin, 7))
    eig = np.linalg.eigvals(float_matrix(op))
    assert np.allclose(np.abs(eig), 1.0, atol=1e-10)
    cp = char_poly(op)
    for lam in eig:
        assert abs(poly_eval_complex(cp.poly, lam)) < 1e-7


def test_rationality():
    assert char_poly_of(WalkSpec(Family.HADAMARD2, CoinType.F, 2)).is_rational
    assert not char_poly_of(WalkSpec(Family.HADAMARD2, CoinType.F, 3)).is_rational
    assert char_poly_of(WalkSpec(Family.GROVER3, CoinType.F, 5)).is_rational


def test_gm2_exact_polynomial():
    cp = char_poly_of(WalkSpec(Family.GROVER3, CoinType.M, 2))
    expect = [1, Fraction(2, 3), -1, Fraction(-4, 3), -1, Fraction(2, 3), 1]
    assert [c.rat for c in cp.poly.coeffs] == expect


@pytest.mark.parametrize("n", range(2, 17))
def test_hadamard_f_product_formula(n):
    assert cross_check_factorization(WalkSpec(Family.HADAMARD2, CoinType.F, n), 100).consistent


@pytest.mark.parametrize("n", range(2, 13))
def test_grover_m_product_formula(n):
    assert cross_check_factorization(WalkSpec(Family.GROVER3, CoinType.M, n), 100).consistent


def test_grover_f_product_formula_is_flagged():
    chk = cross_check_factorization(WalkSpec(Family.GROVER3, CoinType.F, 3), 100)
    assert not chk.consistent
    assert chk.max_rel_err > 1


def test_grover_f_formula_gives_phi1_5_phi6_2():
    # evaluated verbatim the F-type formula is (x-1)^5 (x^2-x+1)^2 at N = 3
    spec = WalkSpec(Family.GROVER3, CoinType.F, 3)
    for z in (0.3 + 1.1j, 2.0, -1.5j):
        expect = (z - 1) ** 5 * (z * z - z + 1) ** 2
        assert rel(product_formula_eval(spec, z), expect) < 1e-12


def test_no_formula_for_hadamard_m():
    with pytest.raises(UnsupportedFamilyError):
        product_formula_eval(WalkSpec(Family.HADAMARD2, CoinType.M, 4), 1.0)
