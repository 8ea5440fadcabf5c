from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import cyclotomic_by_roots, totient_by_gcd
from qwzeta.algebra import (
    Poly,
    QuadRat,
    cyclotomic,
    cyclotomic_coeffs,
    divisors,
    euler_phi,
    format_quadrat,
    indices_with_totient_at_most,
    parse_quadrat,
    poly_divmod,
    poly_gcd,
    quad_inverse,
)

fractions = st.builds(Fraction, st.integers(-60, 60), st.integers(1, 24))
quads = st.builds(QuadRat, fractions, fractions)
nonzero_quads = quads.filter(lambda q: not q.is_zero())
polys = st.lists(quads, min_size=0, max_size=6).map(Poly)
nonzero_polys = st.builds(lambda cs, lead: Poly(cs + [lead]), st.lists(quads, max_size=4), nonzero_quads)


@given(quads, quads, quads)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(nonzero_quads)
def test_inverse(a):
    assert a * quad_inverse(a) == 1
    assert a / a == 1


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        quad_inverse(QuadRat(0))


def test_sqrt2_squared():
    r = QuadRat(0, 1)
    assert r * r == 2
    assert r.norm() == -2
    assert r.conjugate() == -r


@given(quads)
def test_norm_is_multiplicative_on_conjugate(a):
    assert a * a.conjugate() == a.norm()


@given(quads)
def test_format_parse_roundtrip(a):
    text = format_quadrat(a)
    assert "." not in text
    assert parse_quadrat(text) == a


@pytest.mark.parametrize("text,rat,irr", [
    ("901/4", Fraction(901, 4), 0),
    ("1/2+3/4√2", Fraction(1, 2), Fraction(3, 4)),
    ("-1/2-3/4√2", Fraction(-1, 2), Fraction(-3, 4)),
    ("-√2", 0, 0),
])
def test_parse_examples(text, rat, irr):
    if text == "-√2":
        with pytest.raises(ValueError):
            parse_quadrat(text)
        return
    assert parse_quadrat(text) == QuadRat(rat, irr)


@given(polys, nonzero_polys)
@settings(max_examples=60)
def test_divmod_identity(p, d):
    q, r = poly_divmod(p, d)
    assert q * d + r == p
    assert r.is_zero() or r.degree < d.degree


@given(nonzero_polys, nonzero_polys, nonzero_polys.filter(lambda p: p.degree >= 1))
@settings(max_examples=40)
def test_gcd_contains_common_factor(a, b, c):
    g = poly_gcd(a * c, b * c)
    assert g.is_monic()
    _, rem = poly_divmod(g, c.monic())
    assert rem.is_zero()


def test_poly_reverse_and_eval():
    p = Poly([1, 2, 3])
    assert p.reverse() == Poly([3, 2, 1])
    assert p(2) == 17
    assert Poly.x_power_minus_one(3) == Poly([-1, 0, 0, 1])


@pytest.mark.parametrize("n", range(1, 201))
def test_cyclotomic_products(n):
    prod = Poly([1])
    for d in divisors(n):
        prod = prod * cyclotomic(d)
    assert prod == Poly.x_power_minus_one(n)
    assert cyclotomic(n).degree == euler_phi(n)


def test_totient_against_gcd_count():
    for n in range(1, 301):
        assert euler_phi(n) == totient_by_gcd(n)


def test_phi105_coefficient():
    coeffs = cyclotomic_coeffs(105)
    assert coeffs[7] == -2
    assert list(coeffs) == cyclotomic_by_roots(105)


@pytest.mark.parametrize("n", [1, 2, 12, 30, 60, 64, 90])
def test_cyclotomic_against_roots(n):
    assert list(cyclotomic_coeffs(n)) == cyclotomic_by_roots(n)


def test_totient_inverse_image():
    got = indices_with_totient_at_most(8)
    expect = tuple(n for n in range(1, 200) if totient_by_gcd(n) <= 8)
    assert got == expect
