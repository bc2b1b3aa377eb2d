from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrigid.hecke_rep import (
    BraidWord,
    HeckeParams,
    antisymmetrizer,
    determinant_vector,
    jw_generator,
    jw_local,
    quantum_factorial,
    quantum_integer,
    represent_word,
    verify_S_relations,
)
from qrigid.operators import TensorOperator

MUS = [Fraction(1, 2), Fraction(2), Fraction(-1, 2), Fraction(1), Fraction(-3, 5)]
params = st.builds(HeckeParams, st.sampled_from([2, 3]), st.sampled_from(MUS))


def test_quantum_numbers():
    assert quantum_integer(3, Fraction(1, 4)) == Fraction(21, 16)
    assert quantum_factorial(2, Fraction(1, 4)) == Fraction(5, 4)
    assert quantum_factorial(4, 1) == 24


@given(params)
@settings(max_examples=20, deadline=None)
def test_quadratic_relation_and_spectrum(p):
    g = jw_local(p)
    one = TensorOperator.identity(p.d, 2)
    assert g @ g == g.scale(1 - p.q) + one.scale(p.q)
    eig = np.sort(np.linalg.eigvals(g.to_numpy()).real)
    n_minus = math.comb(p.d, 2)
    expected = np.sort([-float(p.q)] * n_minus + [1.0] * (p.d**2 - n_minus))
    assert np.allclose(eig, expected)
    assert g @ jw_local(p, -1) == one


@given(params)
@settings(max_examples=10, deadline=None)
def test_braid_relations(p):
    g1, g2 = jw_generator(p, 1, 3), jw_generator(p, 2, 3)
    assert g1 @ g2 @ g1 == g2 @ g1 @ g2
    if p.d == 2:
        h1, h3 = jw_generator(p, 1, 4), jw_generator(p, 3, 4)
        assert h1 @ h3 == h3 @ h1


def test_generator_is_symmetric_and_classical_limit_is_flip():
    p = HeckeParams(3, Fraction(1, 2))
    g = jw_local(p)
    assert g == g.transpose()
    flip = jw_local(HeckeParams(3, 1))
    for a, b in itertools.product(range(3), repeat=2):
        assert flip.column(a * 3 + b) == {b * 3 + a: 1}


def test_generator_index_range():
    p = HeckeParams(2, Fraction(1, 2))
    with pytest.raises(IndexError):
        jw_generator(p, 3, 3)


def test_word_parse_and_inverse():
    p = HeckeParams(2, Fraction(1, 3))
    w = BraidWord.parse("g1 g2^-1 g1")
    assert str(w) == "g1 g2^-1 g1"
    assert represent_word(p, w + w.inverse(), 3) == TensorOperator.identity(2, 3)


def _perm_sign(perm):
    sign, seen = 1, set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        sign *= (-1) ** (length - 1)
    return sign


def test_classical_determinant():
    S = determinant_vector(HeckeParams(3, 1)).column(0)
    for perm in itertools.permutations(range(3)):
        idx = perm[0] * 9 + perm[1] * 3 + perm[2]
        assert S[idx] == _perm_sign(perm)
    assert len(S) == 6


@pytest.mark.parametrize("d", [2, 3, 4])
def test_antisymmetrizer_ranks_and_projection(d):
    p = HeckeParams(d, Fraction(1, 2))
    for k in range(0, min(d, 3) + 1):
        E = antisymmetrizer(p, k)
        assert E @ E == E
        assert E == E.transpose()
        assert np.linalg.matrix_rank(E.to_numpy()) == math.comb(d, k)
        for i in range(1, k):
            assert jw_generator(p, i, k) @ E == E.scale(-p.q)


def test_top_antisymmetrizer_vanishes_above_d():
    assert antisymmetrizer(HeckeParams(2, Fraction(1, 2)), 3).nnz == 0


@pytest.mark.parametrize("d", [2, 3])
@pytest.mark.parametrize("mu", [Fraction(1, 2), Fraction(2), Fraction(-1, 2)])
def test_S_relations(d, mu):
    checks = verify_S_relations(HeckeParams(d, mu))
    assert all(c.passed and c.exact for c in checks), [c.name for c in checks if not c.passed]


def test_S_scalars_at_half():
    p = HeckeParams(2, Fraction(1, 2))
    S = determinant_vector(p)
    assert (S.adjoint() @ S).entry(0, 0) == Fraction(5, 4)
    one = TensorOperator.identity(2, 1)
    assert (S.adjoint().tensor(one) @ one.tensor(S)).scalar_value() == Fraction(-1, 2)
