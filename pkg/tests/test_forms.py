"""Eta quotients, Eisenstein series, and the named-form catalog."""

import math
from fractions import Fraction

import pytest

from hexrep.arith import CHI3, CHI_TRIVIAL
from hexrep.forms import (
    CATALOG_NAMES,
    NEWFORM_NAMES,
    EtaQuotientSpec,
    NonIntegralExponent,
    ParityMismatch,
    UnknownForm,
    eisenstein_classical,
    eisenstein_twisted,
    eta_quotient,
    named_form,
    quasimodular_combination,
    theta_Fk,
)
from hexrep.series import QSeries

TAU_FIRST_TEN = (1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920)


def naive_core_power(scale, exponent, precision):
    # prod((1 - q^(scale*n))^exponent), by plain repeated polynomial products;
    # written independently of the package internals
    poly = [0] * (precision + 1)
    poly[0] = 1
    for _ in range(exponent):
        for j in range(scale, precision + 1, scale):
            new = poly[:]
            for i in range(j, precision + 1):
                new[i] -= poly[i - j]
            poly = new
    return poly


def naive_eta_power(factors, precision):
    poly = [0] * (precision + 1)
    poly[0] = 1
    lead = 0
    for scale, exponent in factors:
        assert exponent >= 0
        lead += scale * exponent
        core = naive_core_power(scale, exponent, precision)
        poly = [
            sum(poly[i] * core[n - i] for i in range(n + 1))
            for n in range(precision + 1)
        ]
    assert lead % 24 == 0
    shift = lead // 24
    return tuple(([0] * shift + poly)[: precision + 1])


def test_delta_against_naive_expansion():
    delta = named_form("delta", 40).series
    assert delta.coeffs == naive_eta_power(((1, 24),), 40)
    assert delta.coefficient(1) == 1
    assert delta.coefficient(2) == -24


def test_delta_known_coefficients():
    delta = named_form("delta", 10).series
    assert delta.coeffs[1:] == TAU_FIRST_TEN


def test_delta_from_eisenstein_quotient():
    N = 60
    e4 = eisenstein_classical(4, N)
    e6 = eisenstein_classical(6, N)
    assert Fraction(1, 1728) * (e4**3 - e6**2) == named_form("delta", N).series


def test_eta_quotient_examples():
    d63 = named_form("delta_6_3", 20).series
    assert d63.coefficient(0) == 0 and d63.coefficient(1) == 1
    assert d63.coeffs == naive_eta_power(((1, 6), (3, 6)), 20)
    unit = eta_quotient(EtaQuotientSpec(((1, 9), (3, -3))), 15)
    assert unit.coefficient(0) == 1


def test_eta_quotient_rejects_bad_exponents():
    with pytest.raises(NonIntegralExponent):
        eta_quotient(EtaQuotientSpec(((1, 1),)), 10)
    with pytest.raises(ValueError):
        eta_quotient(EtaQuotientSpec(((3, -8),)), 10)  # pole at q = 0
    with pytest.raises(ValueError):
        EtaQuotientSpec(((0, 24),))


def test_eta_inverse_factor_consistency():
    # the negative exponent is an honest reciprocal: multiplying back by
    # prod(1 - q^(3n))^3 leaves the plain ninth-power product
    N = 30
    quotient = eta_quotient(EtaQuotientSpec(((1, 9), (3, -3))), N)
    cube = QSeries(naive_core_power(3, 3, N))
    nine = QSeries(naive_core_power(1, 9, N))
    assert quotient * cube == nine


def test_eisenstein_classical_values():
    assert eisenstein_classical(4, 3).coeffs == (1, 240, 2160, 6720)
    assert eisenstein_classical(2, 2).coeffs == (1, -24, -72)
    assert eisenstein_classical(12, 5).coefficient(0) == 1
    with pytest.raises(ValueError):
        eisenstein_classical(3, 5)


def test_eisenstein_twisted_constant_terms():
    e_chi_first = eisenstein_twisted(7, CHI3, CHI_TRIVIAL, 10)
    assert e_chi_first.coefficient(0) == 0  # conductor of chi is 3
    assert e_chi_first.coefficient(1) == 1
    e_triv_first = eisenstein_twisted(7, CHI_TRIVIAL, CHI3, 10)
    assert e_triv_first.coefficient(0) == Fraction(-7, 3)  # -B_(7,chi3) / 14


def test_eisenstein_twisted_coefficients_are_twisted_sums():
    from hexrep.arith import sigma_twisted

    e = eisenstein_twisted(9, CHI_TRIVIAL, CHI3, 20)
    for n in range(1, 21):
        assert e.coefficient(n) == sigma_twisted(8, CHI_TRIVIAL, CHI3, n)


def test_eisenstein_twisted_contracts():
    with pytest.raises(ParityMismatch):
        eisenstein_twisted(8, CHI_TRIVIAL, CHI3, 10)
    with pytest.raises(ValueError):
        eisenstein_twisted(7, CHI_TRIVIAL, CHI_TRIVIAL, 10)
    with pytest.raises(ValueError):
        eisenstein_twisted(2, CHI3, CHI_TRIVIAL, 10)


def test_named_form_catalog():
    for name in CATALOG_NAMES:
        form = named_form(name, 30)
        assert form.series.coefficient(0) == 0  # all catalog entries are cuspidal
    assert named_form("delta_7_3", 10).series.coefficient(1) == 1
    assert named_form("delta_8_3", 10).series.coefficient(1) == 1
    assert named_form("delta_9_3_1", 10).series.coeffs[:3] == (0, 0, 1)
    assert named_form("delta_7_3", 10).character is CHI3
    assert named_form("delta", 10).weight == 12
    with pytest.raises(UnknownForm):
        named_form("nope", 10)


def test_delta_7_3_spot_coefficients():
    # frozen from the expansion of the normalized Eisenstein-eta product
    series = named_form("delta_7_3", 10).series
    assert series.coeffs[1:6] == (1, 0, -27, 64, 0)


def test_theta_Fk():
    assert theta_Fk(1, 4).coeffs == (1, 6, 0, 6, 6)
    assert theta_Fk(2, 2).coefficient(1) == 12
    assert theta_Fk(12, 0).coefficient(0) == 1
    with pytest.raises(ValueError):
        theta_Fk(0, 5)


def test_quasimodular_combination():
    N = 30
    combo = quasimodular_combination(N)
    assert combo.coefficient(0) == 0
    assert combo.coefficient(1) == 1
    # independent composition order
    e2 = eisenstein_classical(2, N)
    delta = named_form("delta", N).series
    other = Fraction(3, 2) * (e2.scale_argument(3) * delta) - Fraction(1, 2) * (e2 * delta)
    assert combo == other


def test_scaled_e2_coefficients():
    # coefficient n of E_2(3z) is -24 sigma(n/3) when 3 | n, else 0
    N = 30
    scaled = eisenstein_classical(2, N).scale_argument(3)
    for n in range(1, N + 1):
        if n % 3:
            assert scaled.coefficient(n) == 0
        else:
            s = sum(d for d in range(1, n // 3 + 1) if (n // 3) % d == 0)
            assert scaled.coefficient(n) == -24 * s


def _newform_data(name):
    form = named_form(name, 200)
    chi = form.character
    return form.series.coeffs, form.weight, chi


@pytest.mark.parametrize("name", NEWFORM_NAMES)
def test_newform_multiplicativity(name):
    coeffs, _, _ = _newform_data(name)
    for m in range(2, 15):
        for n in range(m + 1, 200 // m + 1):
            if math.gcd(m, n) == 1:
                assert coeffs[m * n] == coeffs[m] * coeffs[n]


@pytest.mark.parametrize("name", NEWFORM_NAMES)
def test_newform_hecke_recursion_at_good_primes(name):
    coeffs, weight, chi = _newform_data(name)
    for p in (2, 5, 7, 11):
        if p * p <= 200:
            assert coeffs[p * p] == coeffs[p] ** 2 - chi(p) * p ** (weight - 1)
