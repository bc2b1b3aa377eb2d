from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrigid.errors import ResourceError
from qrigid.linalg import inverse, nullspace, rank
from qrigid.operators import Factor, LazyOperator, TensorOperator, check_dimension

small_int = st.integers(min_value=-3, max_value=3)


def matrices(rows, cols):
    return st.lists(st.lists(small_int, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@given(st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(lambda c: matrices(r, c))))
@settings(max_examples=80)
def test_rank_and_nullspace_match_numpy(m):
    rows = [[Fraction(x) for x in row] for row in m]
    r = rank(rows)
    assert r == np.linalg.matrix_rank(np.array(m, dtype=float))
    kern = nullspace(rows, len(m[0]))
    assert len(kern) == len(m[0]) - r
    for v in kern:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in rows)


@given(matrices(3, 3))
def test_inverse_is_exact(m):
    rows = [[Fraction(x) for x in row] for row in m]
    if rank(rows) < 3:
        with pytest.raises(ZeroDivisionError):
            inverse(rows)
        return
    inv = inverse(rows)
    prod = [[sum(rows[i][k] * inv[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    assert prod == [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]


def random_operator(rng, d, dom, cod):
    a = rng.integers(-2, 3, size=(d**cod, d**dom))
    return TensorOperator.from_dense(d, dom, cod, [[Fraction(int(x)) for x in row] for row in a]), a


def test_tensor_is_kronecker_and_composition_is_matmul():
    rng = np.random.default_rng(7)
    a, an = random_operator(rng, 2, 1, 2)
    b, bn = random_operator(rng, 2, 2, 1)
    assert np.array_equal(a.tensor(b).to_numpy(), np.kron(an, bn))
    assert np.array_equal((a @ b).to_numpy(), an @ bn)
    with pytest.raises(ValueError):
        a @ a


def test_pad_is_kron_with_identity():
    rng = np.random.default_rng(3)
    g, gn = random_operator(rng, 3, 2, 2)
    padded = g.pad(1, 1).to_numpy()
    assert np.array_equal(padded, np.kron(np.kron(np.eye(3), gn), np.eye(3)))


def test_adjoint_and_scalar_value():
    op = TensorOperator.identity(2, 2, one=Fraction(3, 2))
    assert op.scalar_value() == Fraction(3, 2)
    v = TensorOperator.vector(2, 1, {0: 1j, 1: 2})
    assert (v.adjoint() @ v).entry(0, 0) == 5
    assert TensorOperator.from_dense(2, 1, 1, [[1, 1], [0, 1]]).scalar_value() is None


def test_lazy_product_matches_materialized():
    rng = np.random.default_rng(11)
    local, ln = random_operator(rng, 2, 2, 2)
    lazy = LazyOperator(2, 3, [Factor(0, local), Factor(1, local)])
    dense = np.kron(ln, np.eye(2)) @ np.kron(np.eye(2), ln)
    assert np.array_equal(lazy.materialize().to_numpy(), dense)
    vec = {5: Fraction(1), 2: Fraction(-2)}
    x = np.zeros(8)
    x[5], x[2] = 1, -2
    out = lazy.apply(vec)
    assert np.allclose([float(out.get(i, 0)) for i in range(8)], dense @ x)


def test_dimension_threshold():
    check_dimension(2, 12, 4096)
    with pytest.raises(ResourceError) as info:
        check_dimension(2, 13, 4096)
    assert info.value.required == 8192
    with pytest.raises(ResourceError):
        LazyOperator(3, 9).materialize(threshold=4096)
