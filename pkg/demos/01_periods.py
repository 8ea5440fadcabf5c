"""
Periods of walks on cycles
==========================

Build the evolution operator of each walk, take its exact characteristic
polynomial, and read the period off the cyclotomic factors.
"""

from qwzeta import CoinType, Family, WalkSpec, build_operator, char_poly, period

# the 2-state Hadamard walk on a cycle with 8 vertices, flip-flop coin
spec = WalkSpec(Family.HADAMARD2, CoinType.F, 8)
op = build_operator(spec)
print(spec.label, "dimension", op.dim)

# the characteristic polynomial has exact coefficients in Q(sqrt 2)
cp = char_poly(op)
print("det(xI - U) coefficients, low to high:")
print([str(c) for c in cp.poly.coeffs])

# every root is a root of unity, so U has a finite order
result = period(spec)
print("cyclotomic part:", {n: str(k) for n, k in result.cyclotomic_part.items()})
print("period:", result.render_period())

# sweep a few cycle lengths for all four walks
for family in Family:
    for coin in CoinType:
        finite = {}
        for n in range(2, 13):
            r = period(WalkSpec(family, coin, n))
            if r.is_finite:
                finite[n] = r.period
        print(f"{family.value:<9} {coin.value}: finite periods {finite}, infinite elsewhere")

# the 3-state Grover walk on C_2 has a rational but non-integral charpoly
r = period(WalkSpec(Family.GROVER3, CoinType.M, 2))
print("grover3-M-C2 ring:", r.coefficient_ring.value, "period:", r.render_period())
