"""
Walk zeta functions
===================

For a finite-period walk, det(I - uU) is a signed product of (u^n - 1)
factors.  Its inverse is the walk zeta function.
"""

from qwzeta import CoinType, Family, WalkSpec, automorphic_weight, zeta_of_walk

specs = [
    WalkSpec(Family.HADAMARD2, CoinType.M, 2),
    WalkSpec(Family.HADAMARD2, CoinType.M, 4),
    WalkSpec(Family.HADAMARD2, CoinType.M, 8),
    WalkSpec(Family.HADAMARD2, CoinType.F, 2),
    WalkSpec(Family.HADAMARD2, CoinType.F, 4),
    WalkSpec(Family.HADAMARD2, CoinType.F, 8),
    WalkSpec(Family.GROVER3, CoinType.M, 3),
    WalkSpec(Family.GROVER3, CoinType.F, 3),
]

for spec in specs:
    form = zeta_of_walk(spec)
    w = automorphic_weight(form)
    print(f"{spec.label:<15} zeta(u) = {form.render():<50} C={w.C:+d} D={w.D}")

# the product form evaluates directly; compare with the inverse determinant
form = zeta_of_walk(specs[6])
num, den = form.inverse().expand()
print("det(I - uU) for grover3-M-C3:", [str(c) for c in num.coeffs])
print("zeta(0.5) =", form(0.5))
