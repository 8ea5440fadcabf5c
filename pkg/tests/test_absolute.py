import math

import mpmath
import pytest
from scipy import special

from oracles import rel
from qwzeta import reference as ref
from qwzeta.absolute import (
    Z_f,
    Z_f_mellin_oracle,
    epsilon_f,
    functional_eq_residual,
    functional_eq_residual_estimate,
    plan_absolute_zeta,
    sample_grid,
    valid_real_strip,
    zeta_f,
)
from qwzeta.barnes import DomainError
from qwzeta.suites import mellin_points
from qwzeta.walks import CoinType, Family, WalkSpec
from qwzeta.walkzeta import ZetaProductForm, zeta_of_walk

HF2 = WalkSpec(Family.HADAMARD2, CoinType.F, 2)
SPECS = list(ref.PRINTED_ZETAS)


@pytest.fixture(scope="module")
def hf2_plan():
    return plan_absolute_zeta(zeta_of_walk(HF2))


def test_plan_fields(hf2_plan):
    assert hf2_plan.deg_f == -4
    assert hf2_plan.D == -4 and hf2_plan.C == 1
    assert hf2_plan.omega == (8,)
    assert hf2_plan.terms == ((0, 1), (4, -1))


@pytest.mark.parametrize("s", [-3.0, -2.0, -1.0, 1.0, 2.0])
def test_hf2_zeta_closed_form(hf2_plan, s):
    expect = special.gamma((s + 4) / 8) / special.gamma((s + 8) / 8) / math.sqrt(8)
    assert rel(zeta_f(s, hf2_plan), expect) < 1e-8


@pytest.mark.parametrize("s", [-3.5, -2.5, -1.5, -0.5])
def test_hf2_epsilon_closed_form(hf2_plan, s):
    assert rel(epsilon_f(s, hf2_plan), -1 / math.tan(s * math.pi / 8)) < 1e-8


def test_hf2_zeta_at_minus_two_by_mpmath(hf2_plan):
    expect = mpmath.gamma(0.25) / mpmath.gamma(0.75) / mpmath.sqrt(8)
    assert zeta_f(-2.0, hf2_plan) == pytest.approx(float(expect), rel=1e-12)


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.label)
def test_Z_against_mellin(spec):
    form = zeta_of_walk(spec)
    plan = plan_absolute_zeta(form)
    for w, s in mellin_points(form):
        assert rel(Z_f(w, s, plan).real, Z_f_mellin_oracle(w, s, form)) < 1e-6


def test_Z_spec_example():
    form = zeta_of_walk(WalkSpec(Family.HADAMARD2, CoinType.M, 4))
    plan = plan_absolute_zeta(form)
    assert rel(Z_f(4, 12, plan).real, Z_f_mellin_oracle(4, 12, form)) < 1e-10


def test_Z_at_negative_integer_w_is_finite(hf2_plan):
    # Gamma(w)^-1 removes the poles of the Mellin integral at w = 0, -1, ...
    v = Z_f(-1, 3.0, hf2_plan)
    assert math.isfinite(v.real)


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.label)
def test_functional_equation(spec):
    plan = plan_absolute_zeta(zeta_of_walk(spec))
    expected_c = -1 if spec == WalkSpec(Family.GROVER3, CoinType.M, 3) else 1
    assert plan.C == expected_c
    for s in sample_grid(plan, 10):
        assert functional_eq_residual(s, plan) < 1e-6


def test_residual_estimate_bounds_the_noise():
    plan = plan_absolute_zeta(zeta_of_walk(WalkSpec(Family.GROVER3, CoinType.M, 3)))
    est = functional_eq_residual_estimate(-4.5, plan)
    assert est.value < 1e-10
    assert est.error < 1e-8


def test_functional_equation_detects_a_wrong_weight():
    plan = plan_absolute_zeta(zeta_of_walk(HF2))
    wrong = type(plan)(**{**plan.__dict__, "D": plan.D + 1})
    lo, hi = valid_real_strip(plan)
    s = (lo + hi) / 2
    assert functional_eq_residual(s, wrong) > 1e-3


def test_strip_and_grid(hf2_plan):
    lo, hi = valid_real_strip(hf2_plan)
    assert (lo, hi) == (-4.0, 0.0)
    grid = sample_grid(hf2_plan, 10)
    assert len(grid) == 10 and all(lo < s < hi for s in grid)


def test_domain_errors(hf2_plan):
    with pytest.raises(DomainError):
        zeta_f(-5.0, hf2_plan)
    with pytest.raises(DomainError):
        epsilon_f(4.5, hf2_plan)
    form = zeta_of_walk(HF2)
    with pytest.raises(DomainError):
        Z_f_mellin_oracle(-0.5, 3.0, form)
    with pytest.raises(DomainError):
        Z_f_mellin_oracle(2.0, -5.0, form)


def test_needs_a_denominator():
    with pytest.raises(ValueError):
        plan_absolute_zeta(ZetaProductForm(1, 0, (2,), ()))


def test_explicit_form_with_half_power():
    # x^(1/2)/(x - 1): deg f = -1/2
    form = ZetaProductForm(1, 1, (), (1,))
    plan = plan_absolute_zeta(form)
    assert float(plan.deg_f) == -0.5
    assert rel(Z_f(2.5, 1.0, plan).real, Z_f_mellin_oracle(2.5, 1.0, form)) < 1e-8
