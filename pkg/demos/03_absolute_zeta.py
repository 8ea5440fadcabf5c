"""
Absolute zeta functions
=======================

A product form f(x) gives an absolute Hurwitz zeta Z_f(w, s), built from
Barnes multiple zetas, and the derived zeta_f(s) and epsilon_f(s) built from
multiple gamma and sine functions.
"""

import math

from scipy import special

from qwzeta import CoinType, Family, WalkSpec, plan_absolute_zeta, zeta_of_walk
from qwzeta.absolute import Z_f, Z_f_mellin_oracle, epsilon_f, functional_eq_residual, sample_grid, zeta_f

# the Hadamard flip-flop walk on C_2 has f(x) = (x^4 - 1)/(x^8 - 1)
form = zeta_of_walk(WalkSpec(Family.HADAMARD2, CoinType.F, 2))
plan = plan_absolute_zeta(form)
print("f(x) =", form.render("x"), " deg f =", plan.deg_f, " D =", plan.D)

# here zeta_f has a closed form in terms of the classical gamma function
for s in (-3.0, -2.0, -1.0, 1.0, 2.0):
    closed = special.gamma((s + 4) / 8) / special.gamma((s + 8) / 8) / math.sqrt(8)
    print(f"s={s:+.1f}  zeta_f={zeta_f(s, plan):.15f}  closed form={closed:.15f}")

# and epsilon_f(s) = -cot(s pi / 8)
for s in (-3.5, -1.5):
    print(f"s={s:+.1f}  eps_f={epsilon_f(s, plan):.15f}  -cot={-1 / math.tan(s * math.pi / 8):.15f}")

# Z_f from the Barnes series against direct quadrature of its Mellin integral
print("Z_f(1.5, -2) series :", Z_f(1.5, -2.0, plan).real)
print("Z_f(1.5, -2) Mellin :", Z_f_mellin_oracle(1.5, -2.0, form))

# the functional equation zeta_f(D - s)^C = eps_f(s) zeta_f(s) on the valid strip
g = plan_absolute_zeta(zeta_of_walk(WalkSpec(Family.GROVER3, CoinType.M, 3)))
worst = max(functional_eq_residual(s, g) for s in sample_grid(g, 10))
print(f"grover3-M-C3: C={g.C:+d} D={g.D}, worst residual {worst:.2e}")
