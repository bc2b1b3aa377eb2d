from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrigid.errors import BoundaryMismatchError, ConfigError
from qrigid.temperley_lieb import (
    TLDiagram,
    TLElement,
    TLParams,
    catalan,
    compose_diagrams,
    diagram_words,
    embed_into_sud2,
    enumerate_diagrams,
    hecke_from_tl,
    tl_algebra_dimension,
    tl_relations,
    tl_suite,
)

F = Fraction


def test_catalan_dimensions():
    assert [tl_algebra_dimension(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert all(tl_algebra_dimension(n) == catalan(n) for n in range(8))


def test_crossing_pairings_rejected():
    with pytest.raises(ValueError):
        TLDiagram(2, 2, ((0, 2), (1, 3)))
    with pytest.raises(ValueError):
        TLDiagram(2, 2, ((0, 1),))


def test_composition_examples():
    e1 = TLDiagram.generator(1, 2)
    assert compose_diagrams(e1, e1) == (e1, 1)
    ident = TLDiagram.identity(3)
    assert compose_diagrams(ident, ident) == (ident, 0)
    a, b = TLDiagram.generator(1, 3), TLDiagram.generator(2, 3)
    ab, loops_ab = compose_diagrams(a, b)
    aba, loops = compose_diagrams(ab, a)
    assert (aba, loops_ab + loops) == (a, 0)
    with pytest.raises(BoundaryMismatchError):
        compose_diagrams(TLDiagram.identity(2), ident)


def test_non_square_diagrams():
    cap = TLDiagram(0, 2, ((0, 1),))
    cup = TLDiagram(2, 0, ((0, 1),))
    closed, loops = compose_diagrams(cap, cup)
    assert (closed.n_top, closed.n_bottom, loops) == (0, 0, 1)
    strand_cap = TLDiagram.from_ends(1, 3, [(("T", 0), ("B", 0)), (("B", 1), ("B", 2))])
    # snake identity: a strand with a cap on its left, above a cup on its right
    upper = TLDiagram.from_ends(1, 3, [(("T", 0), ("B", 2)), (("B", 0), ("B", 1))])
    lower = TLDiagram.from_ends(3, 1, [(("T", 0), ("B", 0)), (("T", 1), ("T", 2))])
    zig, loops = compose_diagrams(upper, lower)
    assert zig == TLDiagram.identity(1) and loops == 0
    assert strand_cap.through_strands() == 1


diagrams4 = enumerate_diagrams(4)


@given(st.sampled_from(diagrams4), st.sampled_from(diagrams4), st.sampled_from(diagrams4))
@settings(max_examples=100)
def test_composition_is_associative(a, b, c):
    ab, l1 = compose_diagrams(a, b)
    abc, l2 = compose_diagrams(ab, c)
    bc, l3 = compose_diagrams(b, c)
    a_bc, l4 = compose_diagrams(a, bc)
    assert abc == a_bc and l1 + l2 == l3 + l4


def test_words_reach_every_diagram():
    for n in range(1, 6):
        assert len(diagram_words(n)) == catalan(n)


@pytest.mark.parametrize("mu", [F(1, 2), F(-1, 2), F(3)])
def test_relations_in_diagram_algebra(mu):
    p = TLParams(mu)
    for n in range(2, 6):
        assert all(c.passed for c in tl_relations(p, n))


def test_params():
    assert TLParams(F(1, 2)).delta == F(5, 2)
    assert TLParams(F(1, 2)).sign == -1 and TLParams(F(-1, 2)).sign == 1
    with pytest.raises(ConfigError):
        TLParams(1)


def test_hecke_element():
    g, checks = hecke_from_tl(TLParams(F(1, 2)))
    assert all(c.passed for c in checks)
    q = F(1, 4)
    one = TLElement.identity(2, F(5, 2))
    assert (g @ g - g.scale(1 - q) - one.scale(q)).is_zero()


@pytest.mark.parametrize("mu,sign", [(F(1, 2), -1), (F(-1, 2), 1), (F(2), -1)])
def test_embedding(mu, sign):
    out = embed_into_sud2(TLParams(mu))
    assert out["sign"] == sign
    assert out["norm_R_sq"] == out["delta"]
    assert out["image_ranks"] == {1: 1, 2: 2, 3: 5, 4: 14}
    assert all(c.passed and c.exact for c in out["checks"]), [c.name for c in out["checks"] if not c.passed]


def test_full_suite():
    assert all(c.passed for c in tl_suite(F(3, 5)))


def test_ascii_rendering():
    text = TLDiagram.generator(2, 4).ascii()
    assert text == "top:    | ( ) |\nbottom: | ( ) |"
    assert TLDiagram.identity(2).ascii() == "top:    | |\nbottom: | |"
