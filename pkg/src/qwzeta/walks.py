"""Time-evolution operators ``U = S C`` of coined walks on the cycle C_N.

Basis order is position-major, chirality-minor: ``(0,<-), (0,->), (1,<-), ...``
for the 2-state Hadamard walks and ``(0,<-), (0,.), (0,->), (1,<-), ...`` for the
3-state Grover walks.  The ``<-`` component at vertex x is fed by the coined
state at x+1, the ``->`` component by x-1, and ``.`` stays put, so block row x
of U is ``L psi_{x+1} + S psi_x + R psi_{x-1}`` with indices mod N.  For N = 2
the two neighbours coincide and the blocks add, which is the printed special
form.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import ONE, ZERO, QuadRat, Scalar


class Family(str, enum.Enum):
    HADAMARD2 = "hadamard"
    GROVER3 = "grover3"

    @property
    def states(self) -> int:
        return 2 if self is Family.HADAMARD2 else 3


class CoinType(str, enum.Enum):
    M = "M"
    F = "F"


@dataclass(frozen=True, order=True)
class WalkSpec:
    family: Family
    coin_type: CoinType
    n: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "coin_type", CoinType(self.coin_type))
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"cycle length must be an integer >= 2, got {self.n!r}")

    @property
    def dim(self) -> int:
        return self.family.states * self.n

    @property
    def label(self) -> str:
        return f"{self.family.value}-{self.coin_type.value}-C{self.n}"


Matrix = tuple[tuple[QuadRat, ...], ...]


def _mat(rows: Sequence[Sequence[Scalar]], scale: Scalar = 1) -> Matrix:
    scale = QuadRat.coerce(scale)
    return tuple(tuple(QuadRat.coerce(v) * scale for v in row) for row in rows)


_INV_SQRT2 = QuadRat(0, Fraction(1, 2))
_THIRD = Fraction(1, 3)

_LOCAL_COINS = {
    (Family.HADAMARD2, CoinType.M): _mat([[1, 1], [1, -1]], _INV_SQRT2),
    (Family.HADAMARD2, CoinType.F): _mat([[1, -1], [1, 1]], _INV_SQRT2),
    (Family.GROVER3, CoinType.M): _mat([[-1, 2, 2], [2, -1, 2], [2, 2, -1]], _THIRD),
    (Family.GROVER3, CoinType.F): _mat([[2, 2, -1], [2, -1, 2], [-1, 2, 2]], _THIRD),
}


def local_coin(family: Family | str, coin_type: CoinType | str) -> Matrix:
    """The local coin A acting on the chirality space."""
    return _LOCAL_COINS[Family(family), CoinType(coin_type)]


@dataclass(frozen=True)
class WalkOperator:
    """Exact unitary U stored by rows as ``{column: entry}`` maps."""

    spec: WalkSpec
    rows: tuple[dict[int, QuadRat], ...] = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def entries(self) -> Matrix:
        d = self.dim
        return tuple(tuple(row.get(j, ZERO) for j in range(d)) for row in self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> QuadRat:
        i, j = ij
        return self.rows[i].get(j, ZERO)

    def columns(self) -> list[dict[int, QuadRat]]:
        cols: list[dict[int, QuadRat]] = [{} for _ in range(self.dim)]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                cols[j][i] = v
        return cols


def build_operator(spec: WalkSpec) -> WalkOperator:
    """Assemble U for ``spec`` in the position-major basis."""
    a = local_coin(spec.family, spec.coin_type)
    s = spec.family.states
    n = spec.n
    left, right = 0, s - 1
    rows: list[dict[int, QuadRat]] = []
    for x in range(n):
        for c in range(s):
            if c == left:
                src = (x + 1) % n
            elif c == right:
                src = (x - 1) % n
            else:
                src = x
            row: dict[int, QuadRat] = {}
            for k in range(s):
                v = a[c][k]
                if not v.is_zero():
                    col = src * s + k
                    row[col] = row.get(col, ZERO) + v
            rows.append({j: v for j, v in row.items() if not v.is_zero()})
    return WalkOperator(spec, tuple(rows))


def operator_from_dense(spec: WalkSpec, matrix: Sequence[Sequence[Scalar]]) -> WalkOperator:
    rows = []
    for row in matrix:
        rows.append({j: QuadRat.coerce(v) for j, v in enumerate(row) if QuadRat.coerce(v)})
    return WalkOperator(spec, tuple(rows))


def _sparse_matmul(a: Sequence[dict[int, QuadRat]], b: Sequence[dict[int, QuadRat]]):
    out = []
    for row in a:
        acc: dict[int, QuadRat] = {}
        for k, v in row.items():
            for j, w in b[k].items():
                acc[j] = acc.get(j, ZERO) + v * w
        out.append({j: v for j, v in acc.items() if not v.is_zero()})
    return out


def _is_identity(rows: Sequence[dict[int, QuadRat]]) -> bool:
    return all(row.keys() == {i} and row[i] == 1 for i, row in enumerate(rows))


def check_unitary(op: WalkOperator) -> bool:
    """True iff ``U^T U = I`` exactly (entries are real)."""
    cols = op.columns()
    transpose = cols  # row i of U^T is column i of U
    return _is_identity(_sparse_matmul(transpose, op.rows))


def matrix_power(op: WalkOperator, t: int) -> list[dict[int, QuadRat]]:
    if t < 0:
        raise ValueError("negative power")
    result = [{i: ONE} for i in range(op.dim)]
    base = list(op.rows)
    while t:
        if t & 1:
            result = _sparse_matmul(result, base)
        t >>= 1
        if t:
            base = _sparse_matmul(base, base)
    return result


def matrix_power_is_identity(op: WalkOperator, t: int) -> bool:
    """True iff ``U**t == I`` exactly (square-and-multiply)."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return _is_identity(matrix_power(op, t))


def evolve_state(op: WalkOperator, psi: Sequence[Scalar], steps: int) -> tuple[QuadRat, ...]:
    """Exact ``U**steps @ psi``."""
    if len(psi) != op.dim:
        raise ValueError(f"state has length {len(psi)}, operator has dimension {op.dim}")
    if steps < 0:
        raise ValueError("steps must be >= 0")
    state = [QuadRat.coerce(v) for v in psi]
    for _ in range(steps):
        state = [sum((v * state[j] for j, v in row.items()), ZERO) for row in op.rows]
    return tuple(state)


def determinant(matrix: Sequence[Sequence[Scalar]]) -> QuadRat:
    """Exact determinant over Q(sqrt 2) by Gaussian elimination (dense)."""
    a = [[QuadRat.coerce(v) for v in row] for row in matrix]
    n = len(a)
    det = ONE
    for k in range(n):
        piv = next((i for i in range(k, n) if not a[i][k].is_zero()), None)
        if piv is None:
            return ZERO
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        pk = a[k][k]
        det = det * pk
        inv = 1 / pk
        for i in range(k + 1, n):
            if a[i][k].is_zero():
                continue
            f = a[i][k] * inv
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                if not row_k[j].is_zero():
                    row_i[j] = row_i[j] - f * row_k[j]
    return det
