import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qwzeta import reference as ref
from qwzeta.algebra import Poly, QuadRat, cyclotomic, euler_phi, poly_divmod
from qwzeta.periodicity import (
    CoefficientRing,
    _ModularScreen,
    integer_coefficient_test,
    period,
    proper_divisors,
    strip_cyclotomics,
)
from qwzeta.walks import CoinType, Family, WalkSpec, build_operator, matrix_power_is_identity

ALL_KINDS = list(itertools.product(Family, CoinType))


@pytest.mark.parametrize("family,coin", ALL_KINDS)
def test_periods_up_to_16(family, coin):
    table = ref.PRINTED_PERIODS[(family, coin)]
    for n in range(2, 17):
        result = period(WalkSpec(family, coin, n))
        assert result.period == table.get(n), n
        assert result.render_period() == (str(table[n]) if n in table else "inf")


@pytest.mark.parametrize("family,coin", ALL_KINDS)
def test_finite_periods_are_exact_orders(family, coin):
    for n, t in ref.PRINTED_PERIODS[(family, coin)].items():
        op = build_operator(WalkSpec(family, coin, n))
        assert matrix_power_is_identity(op, t)
        for d in proper_divisors(t):
            assert not matrix_power_is_identity(op, d)


def test_cyclotomic_parts():
    h = period(WalkSpec(Family.HADAMARD2, CoinType.M, 8))
    assert h.cyclotomic_part == {1: 2, 2: 2, 8: 1, 12: 2}
    g = period(WalkSpec(Family.GROVER3, CoinType.F, 3))
    assert g.cyclotomic_part == {1: 2, 2: 3, 4: 2}


def test_partial_cyclotomic_share():
    # over Q(sqrt 2), x^2 - sqrt2 x + 1 is half of Phi_8
    r = period(WalkSpec(Family.HADAMARD2, CoinType.F, 3))
    assert r.cyclotomic_part == {8: Fraction(1, 2)}
    assert r.coefficient_ring is CoefficientRing.NOT_Q
    assert not r.is_finite


def test_gm2_is_rational_but_not_integral():
    r = period(WalkSpec(Family.GROVER3, CoinType.M, 2))
    assert r.rational_but_not_integer
    assert r.period is None


def test_coefficient_ring_examples():
    assert integer_coefficient_test(cyclotomic(12)) is CoefficientRing.Z
    assert integer_coefficient_test(Poly([1, Fraction(1, 2), 1])) is CoefficientRing.Q_NOT_Z
    assert integer_coefficient_test(Poly([1, QuadRat(0, -1), 1])) is CoefficientRing.NOT_Q
    with pytest.raises(ValueError):
        integer_coefficient_test(Poly([1, 2]))


small_indices = st.sampled_from([1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 16, 18, 20, 24, 30])


@given(st.lists(small_indices, min_size=1, max_size=5), st.lists(st.integers(-3, 3), min_size=1, max_size=3))
@settings(max_examples=40, deadline=None)
def test_strip_recovers_planted_factors(indices, extra):
    extra_poly = Poly(extra + [1])
    p = extra_poly
    for n in indices:
        p = p * cyclotomic(n)
    result = strip_cyclotomics(p)
    assert result.reconstruct() == p
    for n in set(indices):
        assert result.multiplicities.get(n, 0) >= indices.count(n)
    for n, share in result.multiplicities.items():
        assert share * euler_phi(n) == result.factors[n].degree
    # whatever is left has no cyclotomic factor of any admissible index
    if result.residual.degree >= 1:
        for n in range(1, 200):
            if euler_phi(n) <= result.residual.degree:
                assert not poly_divmod(result.residual, cyclotomic(n))[1].is_zero()


@given(st.lists(small_indices, min_size=1, max_size=4))
@settings(max_examples=30, deadline=None)
def test_screen_never_rejects_a_divisor(indices):
    p = Poly([2, -1, 1])
    for n in indices:
        p = p * cyclotomic(n)
    screen = _ModularScreen(p)
    for n in indices:
        assert screen.may_divide(n)


def test_screen_over_sqrt2():
    half_phi8 = Poly([1, QuadRat(0, -1), 1])
    screen = _ModularScreen(half_phi8 * Poly([1, 1, 1, 1]))
    assert screen.may_divide(8)
    assert screen.may_divide(4) and screen.may_divide(2)


def test_proper_divisors():
    assert proper_divisors(24) == [1, 2, 3, 4, 6, 8, 12]
    assert proper_divisors(1) == []
