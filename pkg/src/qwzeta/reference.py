"""Printed reference values reproduced by the verification suites.

Coefficient lists are highest degree first, exactly as printed; absent powers
are zero.  Zeta forms are ``(sign, numerator exponents, denominator exponents)``
of ``zeta(u)``, signs as printed (all unsigned).
"""

from __future__ import annotations

from fractions import Fraction

from .walks import CoinType, Family, WalkSpec

HM, HF = (Family.HADAMARD2, CoinType.M), (Family.HADAMARD2, CoinType.F)
GM, GF = (Family.GROVER3, CoinType.M), (Family.GROVER3, CoinType.F)


def _dense(degree: int, terms: dict[int, str]) -> list[Fraction]:
    """Lowest-degree-first coefficient list from ``{power: "p/q"}``."""
    out = [Fraction(0)] * (degree + 1)
    for k, v in terms.items():
        out[k] = Fraction(v)
    return out


_HF16 = ["1", "8", "34", "100", "901/4", "409", "2465/4", "1567/2", "848",
         "1567/2", "2465/4", "409", "901/4", "100", "34", "8", "1"]
_HM16 = ["1", "-8", "69/2", "-103", "3761/16", "-1725/4", "10473/16", "-6687/8", "906",
         "-6687/8", "10473/16", "-1725/4", "3761/16", "-103", "69/2", "-8", "1"]

# x^27 down to x^0; the x^25 and x^2 terms are absent from the M-type display
_GM9 = {27: "1", 26: "3", 25: "0", 24: "-128/9", 23: "-214/9", 22: "62/9", 21: "5752/81",
        20: "6376/81", 19: "-3331/81", 18: "-15059/81", 17: "-11686/81", 16: "8728/81",
        15: "23752/81", 14: "4316/27", 13: "-4316/27", 12: "-23752/81", 11: "-8728/81",
        10: "11686/81", 9: "15059/81", 8: "3331/81", 7: "-6376/81", 6: "-5752/81",
        5: "-62/9", 4: "214/9", 3: "128/9", 2: "0", 1: "-3", 0: "-1"}
_GF9 = {27: "1", 26: "3", 25: "3", 24: "25/9", 23: "26/9", 22: "-2/9", 21: "46/81",
        20: "106/81", 19: "-59/27", 18: "125/81", 17: "-1/27", 16: "-353/81",
        15: "-116/81", 14: "-212/27", 13: "-212/27", 12: "-116/81", 11: "-353/81",
        10: "-1/27", 9: "125/81", 8: "-59/27", 7: "106/81", 6: "46/81", 5: "-2/9",
        4: "26/9", 3: "25/9", 2: "3", 1: "3", 0: "1"}

#: printed expansions as lowest-degree-first Fractions
PRINTED_CHAR_POLYS: dict[WalkSpec, list[Fraction]] = {
    WalkSpec(*HF, 16): _dense(32, {32 - 2 * i: c for i, c in enumerate(_HF16)}),
    WalkSpec(*HM, 16): _dense(32, {32 - 2 * i: c for i, c in enumerate(_HM16)}),
    WalkSpec(*GM, 9): _dense(27, _GM9),
    WalkSpec(*GF, 9): _dense(27, _GF9),
}

#: number of printed (nonzero) terms per expansion
PRINTED_TERM_COUNTS = {spec: sum(1 for c in cs if c) for spec, cs in PRINTED_CHAR_POLYS.items()}

#: printed zeta functions of the finite-period walks: (numer exps, denom exps)
PRINTED_ZETAS: dict[WalkSpec, tuple[tuple[int, ...], tuple[int, ...]]] = {
    WalkSpec(*HM, 2): ((), (2, 2)),
    WalkSpec(*HM, 4): ((4,), (2, 2, 8)),
    WalkSpec(*HM, 8): ((4, 4, 4, 6, 6), (2, 2, 2, 2, 8, 12, 12)),
    WalkSpec(*HF, 2): ((4,), (8,)),
    WalkSpec(*HF, 4): ((2, 2), (4, 8)),
    WalkSpec(*HF, 8): ((2, 2, 2, 2), (4, 6, 6, 8)),
    WalkSpec(*GM, 3): ((1,), (2, 2, 3, 3)),
    WalkSpec(*GF, 3): ((1,), (2, 4, 4)),
}

#: printed weights D of the eight zetas
PRINTED_WEIGHTS = {
    WalkSpec(*HM, 2): -4, WalkSpec(*HM, 4): -8, WalkSpec(*HM, 8): -16,
    WalkSpec(*HF, 2): -4, WalkSpec(*HF, 4): -8, WalkSpec(*HF, 8): -16,
    WalkSpec(*GM, 3): -9, WalkSpec(*GF, 3): -9,
}

#: sign carried by the printed absolute Hurwitz zeta Z_f (leading minus on both Grover cases)
PRINTED_Z_SIGNS = {spec: (-1 if spec.family is Family.GROVER3 else 1) for spec in PRINTED_ZETAS}

#: periods, finite cases only; every other N is infinite
PRINTED_PERIODS: dict[tuple[Family, CoinType], dict[int, int]] = {
    HM: {2: 2, 4: 8, 8: 24},
    HF: {2: 8, 4: 8, 8: 24},
    GM: {3: 6},
    GF: {3: 4},
}

#: printed cyclotomic factorizations, with the f^{H,F}_8 display read literally:
#: the factor written Phi_6(2)^2 is the constant 9, not a polynomial
PRINTED_FACTORIZATIONS: dict[WalkSpec, dict[int, int]] = {
    WalkSpec(*HF, 2): {8: 1},
    WalkSpec(*HF, 4): {4: 2, 8: 1},
    WalkSpec(*HF, 8): {3: 2, 4: 2, 8: 1},
    WalkSpec(*GM, 3): {1: 3, 2: 2, 3: 2},
}
PRINTED_HF8_CONSTANT = 9  # Phi_6(2)^2 = (4 - 2 + 1)^2

#: Stable identifiers for the known inconsistencies in the printed material.
WARN_GF_FACT = "PAPER-GF-FACT"
WARN_GF_SIGN = "PAPER-GF-SIGN"
WARN_H8_PHI6 = "PAPER-H8-PHI6"
WARN_HM16_EXP = "PAPER-HM16-EXP"
WARN_GM2_DISPLAY = "PAPER-GM2-DISPLAY"
