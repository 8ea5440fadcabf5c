import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import float_matrix
from qwzeta.algebra import QuadRat
from qwzeta.walks import (
    CoinType,
    Family,
    WalkSpec,
    build_operator,
    check_unitary,
    determinant,
    evolve_state,
    local_coin,
    matrix_power,
    operator_from_dense,
)

ALL_KINDS = list(itertools.product(Family, CoinType))


@pytest.mark.parametrize("family,coin", ALL_KINDS)
@pytest.mark.parametrize("n", range(2, 13))
def test_unitary(family, coin, n):
    op = build_operator(WalkSpec(family, coin, n))
    assert op.dim == family.states * n
    assert check_unitary(op)
    u = float_matrix(op)
    assert np.allclose(u @ u.T, np.eye(op.dim), atol=1e-14)


@pytest.mark.parametrize("family,coin", ALL_KINDS)
def test_local_coin_is_orthogonal(family, coin):
    a = np.array([[float(v) for v in row] for row in local_coin(family, coin)])
    assert np.allclose(a @ a.T, np.eye(len(a)), atol=1e-15)


def test_hadamard_m_block_rows():
    # block row x reads L psi_{x+1} + R psi_{x-1}; L keeps the first row of A
    op = build_operator(WalkSpec(Family.HADAMARD2, CoinType.M, 4))
    a = local_coin(Family.HADAMARD2, CoinType.M)
    u = op.entries
    assert u[0][2] == a[0][0] and u[0][3] == a[0][1]
    assert u[1][6] == a[1][0] and u[1][7] == a[1][1]


@pytest.mark.parametrize("family,coin", ALL_KINDS)
def test_evolve_state_keeps_norm(family, coin):
    op = build_operator(WalkSpec(family, coin, 5))
    psi = [QuadRat(0)] * op.dim
    psi[0] = QuadRat(1)
    out = evolve_state(op, psi, 13)
    assert sum((v * v for v in out), QuadRat(0)) == 1
    u = float_matrix(op)
    ref = np.linalg.matrix_power(u, 13) @ np.array([float(v) for v in psi])
    assert np.allclose([float(v) for v in out], ref, atol=1e-12)


def test_matrix_power_matches_numpy():
    op = build_operator(WalkSpec(Family.GROVER3, CoinType.F, 4))
    rows = matrix_power(op, 7)
    dense = np.zeros((op.dim, op.dim))
    for i, row in enumerate(rows):
        for j, v in row.items():
            dense[i, j] = float(v)
    assert np.allclose(dense, np.linalg.matrix_power(float_matrix(op), 7), atol=1e-12)


@given(st.lists(st.integers(-5, 5), min_size=9, max_size=9))
@settings(max_examples=50)
def test_determinant_against_numpy(entries):
    m = [entries[0:3], entries[3:6], entries[6:9]]
    exact = determinant(m)
    assert exact.is_rational()
    assert float(exact) == pytest.approx(np.linalg.det(np.array(m, dtype=float)), abs=1e-9)


def test_operator_round_trip():
    spec = WalkSpec(Family.HADAMARD2, CoinType.F, 3)
    op = build_operator(spec)
    again = operator_from_dense(spec, op.entries)
    assert again.entries == op.entries


@pytest.mark.parametrize("n", [0, 1, -3])
def test_bad_cycle_length(n):
    with pytest.raises(ValueError):
        WalkSpec(Family.HADAMARD2, CoinType.M, n)


def test_label():
    assert WalkSpec("grover3", "F", 9).label == "grover3-F-C9"
