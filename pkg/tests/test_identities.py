"""The closed-form identities, their reports, and the verification run."""

import json
from fractions import Fraction

import pytest

from hexrep import forms, identities, lattice
from hexrep.identities import (
    DOCUMENTED_DISCREPANCIES,
    IDENTITY_NAMES,
    NATURALS,
    NATURALS_WITH_ZERO,
    ConvolutionConvention,
    IdentityReport,
    PrecisionTooLow,
    UnknownIdentity,
    _conv,
    check_decomposition,
    check_rho_star,
    decomposition,
    e2_delta_convolution,
    lomadze_s24,
    lomadze_s28,
    newform_coeff_identities,
    ramanujan_convolution,
    report_from_json_dict,
    s14_formula,
    s24_formula,
    s28_convolution_identity,
    s28_formula,
    s2k_from_divisor_sums,
    tau_10_3_2_values,
    tau_from_lattice_sums,
    verification_passed,
    verify_all,
)

N = 200


def test_convention_constants():
    assert ConvolutionConvention.SIGMA_AT_ZERO[3] == Fraction(1, 240)
    assert ConvolutionConvention.SIGMA_AT_ZERO[5] == Fraction(-1, 504)
    assert ConvolutionConvention.SIGMA_AT_ZERO[7] == Fraction(1, 480)
    assert ConvolutionConvention.CUSP_AT_ZERO == 0
    assert NATURALS.lower_bound == 1 and NATURALS_WITH_ZERO.lower_bound == 0


def test_boundary_term_of_zero_inclusive_convolution():
    tau83 = forms.named_form("delta_8_3", 30).series.coeffs
    for n in (1, 5, 12):
        plain = _conv(3, tau83, n, NATURALS)
        with_zero = _conv(3, tau83, n, NATURALS_WITH_ZERO)
        assert with_zero - plain == Fraction(1, 240) * tau83[n]


def test_decompositions_equal_brute_force():
    for k in (7, 9, 11, 12, 14):
        series = decomposition(k, N)
        ref = lattice.s2k_bruteforce(k, N)
        assert series.coeffs == ref, f"decomposition failed for k={k}"


def test_decomposition_constant_terms_are_one():
    # resolved question: the combinations hold at q^0 as well
    for k in (7, 9, 11, 12, 14):
        report = check_decomposition(k, 10, N)
        assert report.constant_term == (1, 1)
        assert report.constant_term_matches


def test_s14_formula_printed_variant():
    # the printed rho* gives 216/7 at n = 1 while the count is 42
    assert s14_formula(1, N) == Fraction(216, 7)
    assert lattice.s2k_bruteforce(7, 1)[1] == 42
    assert decomposition(7, N).coefficient(1) == 42


def test_scalar_formula_path_matches_brute_force():
    for k in (7, 9, 11, 12, 14):
        ref = lattice.s2k_bruteforce(k, N)
        for n in range(1, 61):
            assert s2k_from_divisor_sums(k, n, N) == ref[n], (k, n)


def test_s24_s28_formulas():
    ref12 = lattice.s2k_bruteforce(12, N)
    ref14 = lattice.s2k_bruteforce(14, N)
    for n in range(1, 101):
        assert s24_formula(n, N) == ref12[n]
        assert s28_formula(n, N) == ref14[n]
    assert s28_formula(1, N) == 84


def test_lomadze_formulas():
    ref12 = lattice.s2k_bruteforce(12, N)
    ref14 = lattice.s2k_bruteforce(14, N)
    for n in range(1, 61):
        assert lomadze_s24(n, N) == ref12[n]
        assert lomadze_s28(n, N) == ref14[n]


def test_tau_from_lattice_sums():
    tau = forms.named_form("delta", N).series.coeffs
    assert tau_from_lattice_sums(1, N) == 1
    assert tau_from_lattice_sums(2, N) == -24
    assert tau_from_lattice_sums(5, N) == 4830
    for n in range(1, 51):
        assert tau_from_lattice_sums(n, N) == tau[n]


def test_newform_identities():
    reports = newform_coeff_identities(100, N)
    assert [r.name for r in reports] == [
        "newform-w6",
        "newform-w7",
        "newform-w8",
        "newform-w9",
        "newform-w10",
        "newform-w11",
    ]
    for r in reports:
        assert r.all_match, r.name


def test_weight_ten_values_are_integers():
    values = tau_10_3_2_values(N)
    assert values[1] == 1
    assert all(isinstance(v, int) for v in values)
    l106 = lattice.lomadze_values("L_10_6", N)
    assert all(v % 120 == 0 for v in l106)


def test_ramanujan_convolution():
    report = ramanujan_convolution(200, N)
    assert report.all_match
    # two-term evaluation at n = 2
    assert report.lhs[1] == 1 and report.rhs[1] == 1
    assert report.lhs[0] == 0  # empty sum at n = 1


def test_ramanujan_convolution_series_oracle():
    # sum(sigma(a) tau(b)) = (tau(n) - [q^n](E_2 * delta)) / 24, and the
    # weight-12 logarithmic derivative gives [q^n](E_2 * delta) = n tau(n)
    e2 = forms.eisenstein_classical(2, 100)
    delta = forms.named_form("delta", 100).series
    product = e2 * delta
    for n in range(1, 101):
        assert product.coefficient(n) == n * delta.coefficient(n)


def test_e2_delta_convolution():
    report = e2_delta_convolution(150, N)
    assert report.all_match
    assert "a, b >= 1" in report.note
    assert report.lhs[0] == 0 and report.lhs[1] == 0  # empty sums at n = 1, 2
    assert report.lhs[2] == 0  # n = 3 still empty: b = n - 3a >= 1 fails


def test_e2_delta_lhs_against_series_product():
    scaled = forms.eisenstein_classical(2, 150).scale_argument(3)
    delta = forms.named_form("delta", 150).series
    product = scaled * delta
    report = e2_delta_convolution(150, N)
    for n in range(1, 151):
        assert product.coefficient(n) == delta.coefficient(n) - 24 * report.lhs[n - 1]


def test_s28_convolution_identity():
    report = s28_convolution_identity(100, N)
    assert report.all_match
    assert report.lhs[0] == 0 and report.rhs[0] == 0  # all sums empty at n = 1


def test_rho_star_reports():
    r6 = check_rho_star(6, 50, N)
    r8 = check_rho_star(8, 50, N)
    r10 = check_rho_star(10, 50, N)
    assert r6.mismatches[0] == (1, 0, 26)
    assert r8.mismatches[0] == (1, 162, 82)
    assert r10.mismatches[0] == (1, 0, 242)
    for r in (r6, r8, r10):
        assert not r.all_match
        assert r.n_max == 50 and len(r.entries) == 50


def test_theorem_reports_are_documented_mismatches():
    reports = verify_all(30, ("s14-theorem", "s18-theorem", "s22-theorem"), N)
    for r in reports:
        assert not r.all_match
        assert r.name in DOCUMENTED_DISCREPANCIES


def test_report_structure():
    report = ramanujan_convolution(25, N)
    assert report.n_max == 25
    assert len(report.entries) == 25
    assert report.entries[0][0] == 1
    assert report.status == "match"
    assert report.first_mismatch is None
    for _, lhs, rhs in report.entries:
        assert isinstance(lhs, (int, Fraction))
        assert isinstance(rhs, (int, Fraction))
    with pytest.raises(ValueError):
        IdentityReport("bad", 3, (1,), (1, 1, 1))


def test_report_json_round_trip():
    for name in ("tau-eq", "rho-star-6", "f7-decomposition"):
        (report,) = verify_all(20, (name,), N)
        text = json.dumps(report.to_json_dict())
        parsed = report_from_json_dict(json.loads(text))
        assert parsed == report.summary()
        # serialization is stable under a second round trip
        assert json.loads(text) == report.to_json_dict()


def test_json_rational_encoding():
    report = verify_all(3, ("s14-theorem",), N)[0]
    payload = report.to_json_dict()
    assert payload["status"] == "mismatch"
    lhs_values = [m["lhs"] for m in payload["mismatches"]]
    assert "216/7" in lhs_values  # non-integers ride as p/q strings


def test_verify_all_policy():
    reports = verify_all(50, "all", N)
    assert [r.name for r in reports] == list(IDENTITY_NAMES)
    assert verification_passed(reports)
    assert not verification_passed(reports, strict=True)
    failing = {r.name for r in reports if not r.all_match}
    assert failing == set(DOCUMENTED_DISCREPANCIES)


def test_verify_all_contracts():
    with pytest.raises(PrecisionTooLow):
        verify_all(10_000, "all", 200)
    with pytest.raises(UnknownIdentity):
        verify_all(10, ("no-such-identity",), N)
    reports = verify_all(0, ("tau-eq",), N)
    assert reports[0].n_max == 0 and reports[0].all_match


def test_default_precision_resolution():
    # per-n helpers size their tables to max(n, 200) when not told otherwise
    assert tau_from_lattice_sums(3) == 252
    with pytest.raises(PrecisionTooLow):
        s24_formula(300, 200)
