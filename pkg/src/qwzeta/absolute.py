"""Absolute zeta functions of product forms ``f = eps x^(l/2) prod(x^m - 1)/prod(x^n - 1)``.

Expanding ``f(e^t)`` as ``eps e^(deg t) prod(1 - e^(-m t)) / prod(1 - e^(-n t))``
and multiplying out the numerator over subsets I of the m's turns the Mellin
transform ``Z_f(w, s)`` into a signed sum of Barnes zetas of order b with
weights ``n`` at shifts ``s - deg + m_I``.  From there ``zeta_f = exp(dZ/dw)``
is a product of multiple gammas and ``eps_f`` the matching product of
multiple sines.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from fractions import Fraction

from scipy import integrate, special

from .barnes import (
    DEFAULT_CONFIG,
    BarnesEvalConfig,
    DomainError,
    Estimate,
    barnes_zeta_estimate,
    log_multiple_gamma_estimate,
    log_multiple_sine_estimate,
)
from .walkzeta import ZetaProductForm


class IntegrationError(ArithmeticError):
    """Quadrature could not reach the requested tolerance."""


@dataclass(frozen=True)
class AbsZetaPlan:
    form: ZetaProductForm
    deg_f: Fraction
    D: int
    C: int
    omega: tuple[int, ...]
    #: ``(m_I, (-1)**|I|)`` over all subsets I, sorted by m_I then parity
    terms: tuple[tuple[int, int], ...]
    epsilon_sign: int

    @property
    def b(self) -> int:
        return len(self.omega)

    @property
    def omega_total(self) -> int:
        return sum(self.omega)

    def shifts(self, s: float) -> list[tuple[float, int]]:
        """Barnes shifts ``s - deg + m_I`` with their parities."""
        return [(s - float(self.deg_f) + m, p) for m, p in self.terms]


def plan_absolute_zeta(form: ZetaProductForm) -> AbsZetaPlan:
    if form.b < 1:
        raise ValueError("the absolute zeta needs at least one denominator factor")
    terms = []
    for size in range(form.a + 1):
        for subset in itertools.combinations(form.numer_exps, size):
            terms.append((sum(subset), -1 if size % 2 else 1))
    terms.sort()
    return AbsZetaPlan(
        form=form,
        deg_f=form.degree,
        D=form.weight,
        C=form.C,
        omega=tuple(sorted(form.denom_exps)),
        terms=tuple(terms),
        epsilon_sign=form.sign,
    )


def _real_positive_shifts(plan: AbsZetaPlan, s: float, what: str) -> list[tuple[float, int]]:
    shifts = plan.shifts(s)
    bad = [x for x, _ in shifts if not x > 0]
    if bad:
        raise DomainError(f"{what} needs s - deg(f) + m(I) > 0 for every I; got {min(bad):g} at s={s:g}")
    return shifts


def Z_f_estimate(w: complex, s: float, plan: AbsZetaPlan, cfg: BarnesEvalConfig = DEFAULT_CONFIG) -> Estimate:
    total, err = 0j, 0.0
    for x, parity in _real_positive_shifts(plan, s, "Z_f"):
        est = barnes_zeta_estimate(plan.b, plan.omega, x, w, cfg)
        total += parity * est.value
        err += est.error
    return Estimate(plan.epsilon_sign * total, err)


def Z_f(w: complex, s: float, plan: AbsZetaPlan, cfg: BarnesEvalConfig = DEFAULT_CONFIG) -> complex:
    """Absolute Hurwitz zeta ``eps * sum_I (-1)^|I| zeta_b(w, s - deg + m_I, n)``."""
    return Z_f_estimate(w, s, plan, cfg).value


def Z_f_mellin_oracle(w: float, s: float, form: ZetaProductForm, rel_tol: float = 1e-10) -> float:
    """``Gamma(w)**-1 * int_0^inf f(e^t) e^(-s t) t^(w-1) dt`` by adaptive quadrature.

    ``expm1`` keeps ``1 - e^(-m t)`` accurate as t -> 0, so the integrand
    ``~ t^(a - b + w - 1)`` needs no special handling there.
    """
    deg = float(form.degree)
    if not w > form.b - form.a:
        raise DomainError(f"Mellin integral diverges at t=0 unless w > b - a = {form.b - form.a}")
    if not s > deg:
        raise DomainError(f"Mellin integral diverges at infinity unless s > deg f = {deg:g}")

    def integrand(t: float) -> float:
        v = form.sign * math.exp(t * (deg - s) + (w - 1) * math.log(t))
        for m in form.numer_exps:
            v *= -math.expm1(-m * t)
        for n in form.denom_exps:
            v /= -math.expm1(-n * t)
        return v

    total, err = 0.0, 0.0
    # the split keeps the algebraic behaviour at 0 and the exponential tail apart
    for lo, hi in ((0.0, 1.0), (1.0, math.inf)):
        val, e = integrate.quad(integrand, lo, hi, epsabs=0.0, epsrel=rel_tol, limit=200)
        total += val
        err += e
    if err > 100 * rel_tol * abs(total):
        raise IntegrationError(f"quadrature error {err:.3g} for value {total:.6g}")
    return total / special.gamma(w)


def log_zeta_f_estimate(s: float, plan: AbsZetaPlan, cfg: BarnesEvalConfig = DEFAULT_CONFIG) -> Estimate:
    total, err = 0.0, 0.0
    for x, parity in _real_positive_shifts(plan, s, "zeta_f"):
        est = log_multiple_gamma_estimate(plan.b, plan.omega, x, cfg)
        total += parity * est.value
        err += est.error
    return Estimate(plan.epsilon_sign * total, err)


def log_zeta_f(s: float, plan: AbsZetaPlan, cfg: BarnesEvalConfig = DEFAULT_CONFIG) -> float:
    return log_zeta_f_estimate(s, plan, cfg).value


def zeta_f(s: float, plan: AbsZetaPlan, cfg: BarnesEvalConfig = DEFAULT_CONFIG) -> float:
    """Absolute zeta ``prod_I Gamma_b(s - deg + m_I, n)**(eps (-1)^|I|)``."""
    return math.exp(log_zeta_f(s, plan, cfg))


def log_epsilon_f_estimate(s: float, plan: AbsZetaPlan, cfg: BarnesEvalConfig = DEFAULT_CONFIG) -> Estimate:
    total, err = 0.0, 0.0
    top = plan.omega_total
    for x, parity in _real_positive_shifts(plan, s, "epsilon_f"):
        if not x < top:
            raise DomainError(f"epsilon_f needs s - deg(f) + m(I) < {top}; got {x:g} at s={s:g}")
        est = log_multiple_sine_estimate(plan.b, plan.omega, x, cfg)
        total += parity * est.value
        err += est.error
    return Estimate(plan.epsilon_sign * total, err)


def epsilon_f(s: float, plan: AbsZetaPlan, cfg: BarnesEvalConfig = DEFAULT_CONFIG) -> float:
    """``prod_I S_b(s - deg + m_I, n)**(eps (-1)^|I|)``."""
    return math.exp(log_epsilon_f_estimate(s, plan, cfg).value)


def _alternate(cfg: BarnesEvalConfig) -> BarnesEvalConfig:
    """Same targets, different numerical path: flipped base case, longer ladder and tail."""
    j = cfg.shifts_for(0.0)
    return replace(
        cfg,
        closed_form_base=not cfg.closed_form_base,
        shift_count=j + 2,
        expansion_order=cfg.expansion_order + 6,
    )


def functional_eq_residual_estimate(
    s: float,
    plan: AbsZetaPlan,
    cfg: BarnesEvalConfig = DEFAULT_CONFIG,
    lhs_cfg: BarnesEvalConfig | None = None,
) -> Estimate:
    """Relative residual of ``zeta_f(D - s)**C = eps_f(s) zeta_f(s)``.

    Both sides are positive, so the residual is ``|expm1(log rhs - log lhs)|``.
    The left side is evaluated with ``lhs_cfg`` (by default a different ladder
    and base case than ``cfg``) so that shared multiple-gamma values cannot
    cancel identically.  The error field bounds the numerical noise in the
    residual itself.
    """
    lhs_cfg = _alternate(cfg) if lhs_cfg is None else lhs_cfg
    lhs = log_zeta_f_estimate(plan.D - s, plan, lhs_cfg)
    eps = log_epsilon_f_estimate(s, plan, cfg)
    rhs = log_zeta_f_estimate(s, plan, cfg)
    residual = abs(math.expm1(rhs.value + eps.value - plan.C * lhs.value))
    return Estimate(residual, lhs.error + eps.error + rhs.error)


def functional_eq_residual(
    s: float,
    plan: AbsZetaPlan,
    cfg: BarnesEvalConfig = DEFAULT_CONFIG,
    lhs_cfg: BarnesEvalConfig | None = None,
) -> float:
    return functional_eq_residual_estimate(s, plan, cfg, lhs_cfg).value


def valid_real_strip(plan: AbsZetaPlan) -> tuple[float, float]:
    """Open interval of real s where zeta_f(s), zeta_f(D - s) and eps_f(s) are all defined."""
    deg = float(plan.deg_f)
    top = plan.omega_total
    m_max = max(m for m, _ in plan.terms)
    # s - deg > 0, D - s - deg > 0, s - deg + m_max < |n|
    lo = deg
    hi = min(plan.D - deg, top + deg - m_max)
    if not lo < hi:
        raise DomainError("empty strip")
    return lo, hi


def sample_grid(plan: AbsZetaPlan, k: int = 10) -> list[float]:
    """k midpoints of equal cells of the valid strip."""
    lo, hi = valid_real_strip(plan)
    return [lo + (hi - lo) * (i + 0.5) / k for i in range(k)]


__all__ = [
    "AbsZetaPlan",
    "IntegrationError",
    "Z_f",
    "Z_f_estimate",
    "Z_f_mellin_oracle",
    "epsilon_f",
    "functional_eq_residual",
    "functional_eq_residual_estimate",
    "log_epsilon_f_estimate",
    "log_zeta_f",
    "log_zeta_f_estimate",
    "plan_absolute_zeta",
    "sample_grid",
    "valid_real_strip",
    "zeta_f",
]
