from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrigid.braiding_kappa import (
    Braiding,
    BraidingSpec,
    braiding_suite,
    conjugate_equations,
    expected_exponents,
    full_twist_inverse_word,
    kappa_fundamental_direct,
    kappa_power_via_hecke,
    kappa_power_via_sigma,
    kappa_spectrum,
    kappa_via_left_formula,
    route_sign,
    shuffle_word,
    spectrum_exponents,
    standard_conjugate_fundamental,
    twist_word,
    verify_dual_relations,
    verify_tensor_formula,
)
from qrigid.checks import compare
from qrigid.errors import ResourceError
from qrigid.hecke_rep import BraidWord, HeckeParams, jw_local
from qrigid.operators import TensorOperator
from qrigid.scalars import PhasedPower

F = Fraction


def spec(d, mu, k=0, backend="cyclotomic"):
    return BraidingSpec(HeckeParams(d, F(mu)), k, backend)


def test_words():
    assert str(shuffle_word(1, 3)) == "g3 g2 g1"
    assert str(shuffle_word(2, 1)) == "g1 g2"
    assert str(shuffle_word(2, 2)) == "g2 g1 g3 g2"
    assert str(twist_word(2)) == "g2 g1 g1 g2"
    assert str(full_twist_inverse_word(3)) == str(twist_word(2).inverse() + twist_word(1).inverse())
    assert len(shuffle_word(3, 4)) == 12


def test_backend_resolution():
    assert spec(2, F(1, 4)).backend == "cyclotomic"
    assert spec(2, F(1, 2)).backend == "floating"
    assert spec(3, F(-1, 8), backend="rational").backend == "cyclotomic"


def test_sigma_on_two_strands_is_scaled_generator():
    s = spec(3, F(1, 8), 1)
    op = Braiding(s).block(1, 1)
    assert op == jw_local(s.params).scale(s.ratio)


@pytest.mark.parametrize("d,mu", [(2, F(1, 4)), (3, F(1, 8)), (2, F(-1, 4)), (3, F(1, 2))])
def test_braiding_suite_passes(d, mu):
    for k in range(d):
        checks = braiding_suite(spec(d, mu, k), max_power=3)
        assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]


@pytest.mark.parametrize("mu", [F(1, 2), F(2), F(-1, 2), F(1)])
@pytest.mark.parametrize("d", [2, 3])
def test_conjugate_equations(d, mu):
    pair = standard_conjugate_fundamental(HeckeParams(d, mu))
    assert all(c.passed and c.exact for c in conjugate_equations(pair))


def test_conjugate_pair_examples():
    pair = standard_conjugate_fundamental(HeckeParams(2, F(1, 2)))
    assert pair.lam == 2 ** 0.5 or pair.lam_sq == 2
    assert pair.norm_sq() == F(5, 2)
    assert pair.sign == -1
    assert standard_conjugate_fundamental(HeckeParams(2, F(-1, 2))).sign == 1
    assert standard_conjugate_fundamental(HeckeParams(3, 1)).lam_sq == F(1, 2)


def test_kappa_examples():
    k = kappa_fundamental_direct(spec(2, F(1, 2)))
    assert abs(k.numeric - 2**-1.5) < 1e-12
    k = kappa_fundamental_direct(spec(2, F(1, 4)))
    assert k.value == PhasedPower(0, 1, F(3, 2))
    k = kappa_fundamental_direct(spec(3, F(1, 8)))
    assert k.value.e == F(8, 3)
    k = kappa_fundamental_direct(spec(3, F(1, 2), backend="floating"))
    assert abs(abs(k.numeric) - 0.5 ** (8 / 3)) < 1e-12
    assert kappa_fundamental_direct(spec(2, 1)).exact == 1


@given(st.sampled_from([(2, F(1, 4)), (2, F(4)), (3, F(1, 8)), (3, F(-1, 8)), (3, F(8))]), st.integers(0, 2))
@settings(max_examples=25, deadline=None)
def test_direct_equals_left_formula_and_closed_form(case, k):
    d, mu = case
    s = spec(d, mu, k)
    direct = kappa_fundamental_direct(s)
    left = kappa_via_left_formula(s)
    assert direct.exact == left.exact
    assert direct.value == s.kappa_closed_form()


def test_even_d_negative_mu_conjugate_sign():
    # the conjugate equations force Rbar = +R here, so kappa(u) = -(omega mu)
    for k in range(2):
        s = spec(2, F(-1, 4), k)
        direct = kappa_fundamental_direct(s)
        assert direct.value == s.kappa_closed_form() * PhasedPower(1, 2, 0)
    values = {kappa_fundamental_direct(spec(2, F(-1, 4), k)).value for k in range(2)}
    assert values == {spec(2, F(-1, 4), k).kappa_closed_form() for k in range(2)}


def test_floating_agrees_with_cyclotomic():
    for k in range(3):
        exact = kappa_fundamental_direct(spec(3, F(1, 8), k))
        fl = kappa_fundamental_direct(spec(3, F(1, 8), k, backend="floating"))
        assert abs(exact.numeric - fl.numeric) < 1e-12 * abs(fl.numeric)
    a = kappa_power_via_sigma(spec(2, F(1, 4), 1), 3).to_numpy()
    b = kappa_power_via_sigma(spec(2, F(1, 4), 1, backend="floating"), 3).to_numpy()
    assert np.allclose(a, b, atol=1e-14)


@pytest.mark.parametrize("d,mu,nmax", [(2, F(1, 4), 4), (3, F(1, 8), 3), (3, F(-1, 8), 3), (2, F(2), 4)])
def test_route_agreement(d, mu, nmax):
    s = spec(d, mu, 1)
    for n in range(1, nmax + 1):
        check = compare("routes", kappa_power_via_sigma(s, n), kappa_power_via_hecke(s, n))
        assert check.passed and check.exact == s.exact


def test_route_sign_for_even_d_negative_mu():
    s = spec(2, F(-1, 4), 0)
    for n in range(1, 5):
        assert kappa_power_via_sigma(s, n) == kappa_power_via_hecke(s, n).scale(route_sign(s.params, n))
    assert [route_sign(s.params, n) for n in range(1, 5)] == [-1, 1, -1, 1]


def test_kappa_power_is_central():
    s = spec(2, F(1, 4))
    k3 = kappa_power_via_sigma(s, 3)
    for i in (1, 2):
        g = jw_local(s.params).pad(i - 1, 2 - i)
        assert g @ k3 == k3 @ g


def test_spectrum_examples():
    spectrum = kappa_spectrum(spec(2, F(1, 2)), 2)
    moduli = sorted((round(abs(v), 12), m) for v, m in spectrum)
    assert moduli == [(0.0625, 3), (1.0, 1)]


@pytest.mark.parametrize("d,n", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)])
def test_spectrum_moduli_match_weights(d, n):
    assert spectrum_exponents(spec(d, F(1, 2)), n) == expected_exponents(d, n)


def test_dual_relations_and_tensor_formula():
    for s in (spec(2, F(1, 4), 1), spec(3, F(1, 8), 2), spec(3, F(1, 2))):
        assert all(c.passed for c in verify_dual_relations(s))
        for n in (1, 2, 3):
            assert verify_tensor_formula(s, n).passed


def test_resource_limit():
    with pytest.raises(ResourceError):
        kappa_power_via_sigma(spec(3, F(1, 8)), 8)
    with pytest.raises(ResourceError):
        Braiding(spec(2, F(1, 4)), threshold=16).block(3, 2)


def test_inverse_block_is_inverse():
    s = spec(3, F(1, 8), 1)
    for variant in Braiding.VARIANTS:
        br = Braiding(s, variant)
        assert br.block(2, 1) @ br.block_inverse(2, 1) == TensorOperator.identity(3, 3)
