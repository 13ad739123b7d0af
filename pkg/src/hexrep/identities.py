"""Closed-form identities for representation numbers, checked exactly.

Every check compares two exact rational computations coefficient by
coefficient and produces an IdentityReport; no comparison in this module
is ever approximate.  The brute-force theta coefficients from the lattice
module are the universal reference side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import forms, lattice
from .arith import CHI3, CHI_TRIVIAL, rho_star, sigma, sigma_star, sigma_twisted
from .series import DEFAULT_PRECISION, QSeries


class PrecisionTooLow(ValueError):
    """Requested range exceeds the working table precision."""


class UnknownIdentity(ValueError):
    """Identity name not in the registry."""


def _exact(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


# -- convolution conventions -------------------------------------------------


@dataclass(frozen=True)
class ConvolutionConvention:
    """Lower bound (1 or 0) for both indices in sums over a + b = n.

    With lower bound 0, sigma_r(0) takes the boundary constants below and
    cusp coefficient sequences take the value 0 at index 0.
    """

    lower_bound: int

    #: Boundary values sigma_r(0) for the 0-inclusive convention.
    SIGMA_AT_ZERO = {3: Fraction(1, 240), 5: Fraction(-1, 504), 7: Fraction(1, 480)}
    #: Cusp expansions vanish at index 0.
    CUSP_AT_ZERO = 0


NATURALS = ConvolutionConvention(lower_bound=1)
NATURALS_WITH_ZERO = ConvolutionConvention(lower_bound=0)


def _conv(power, cusp, n, convention=NATURALS, scale=1):
    """sum(sigma_power(a) * cusp[b]) over scale*a + b = n under the convention."""
    total = 0
    for a in range(1, (n - 1) // scale + 1):
        total += sigma(power, a) * cusp[n - scale * a]
    if convention.lower_bound == 0:
        # a = 0 contributes the boundary constant; b = 0 contributes nothing
        # because cusp sequences vanish there.
        total += ConvolutionConvention.SIGMA_AT_ZERO[power] * cusp[n]
    return total


# -- cached coefficient tables ------------------------------------------------


def _resolve_precision(n: int, precision: int | None) -> int:
    if precision is None:
        return max(n, DEFAULT_PRECISION)
    if n > precision:
        raise PrecisionTooLow(f"n={n} exceeds the working precision {precision}")
    return precision


@lru_cache(maxsize=None)
def _form_coeffs(name: str, precision: int) -> tuple:
    return forms.named_form(name, precision).series.coeffs


@lru_cache(maxsize=None)
def _lomadze(name: str, precision: int) -> tuple:
    return lattice.lomadze_values(name, precision)


@lru_cache(maxsize=None)
def tau_10_3_2_values(precision: int) -> tuple:
    """Weight-10 coefficient sequence, defined as L_10_6(n) / 120 (exact)."""
    return tuple(_exact(Fraction(v, 120)) for v in _lomadze("L_10_6", precision))


# -- per-n scalar formulas ----------------------------------------------------


def s14_formula(n: int, precision: int | None = None):
    """Printed weight-7 statement: (3/7) rho*_6(n) + (216/7) tau_7_3(n).

    Uses the literal rho* definition, which the rho-star reports show to be
    inconsistent with the counts; kept as stated so the discrepancy is
    measurable.
    """
    N = _resolve_precision(n, precision)
    tau = _form_coeffs("delta_7_3", N)
    return _exact(Fraction(3, 7) * rho_star(6, n) + Fraction(216, 7) * tau[n])


def s18_formula(n: int, precision: int | None = None):
    """Printed weight-9 statement with rho*_8 and the two weight-9 basis forms."""
    N = _resolve_precision(n, precision)
    t1 = _form_coeffs("delta_9_3_1", N)
    t2 = _form_coeffs("delta_9_3_2", N)
    return _exact(
        Fraction(27, 809) * rho_star(8, n)
        + Fraction(41472, 809) * (27 * t1[n] + t2[n])
    )


def s22_formula(n: int, precision: int | None = None):
    """Printed weight-11 statement with rho*_10 and the two weight-11 basis forms."""
    N = _resolve_precision(n, precision)
    t1 = _form_coeffs("delta_11_3_1", N)
    t2 = _form_coeffs("delta_11_3_2", N)
    return _exact(
        Fraction(3, 1847) * rho_star(10, n)
        + Fraction(60588, 9235) * (t1[n] + 9 * t2[n])
    )


def s24_formula(n: int, precision: int | None = None):
    """s_24(n) from starred divisor sums, tau, and two boundary convolutions."""
    N = _resolve_precision(n, precision)
    tau = _form_coeffs("delta", N)
    tau83 = _form_coeffs("delta_8_3", N)
    tau63 = _form_coeffs("delta_6_3", N)
    return _exact(
        Fraction(6552, 73 * 691) * sigma_star(11, n)
        + Fraction(29824, 691) * tau[n]
        + Fraction(240 * 1186848, 50443) * _conv(3, tau83, n, NATURALS_WITH_ZERO)
        - Fraction(504 * 261344, 50443) * _conv(5, tau63, n, NATURALS_WITH_ZERO)
    )


def s28_formula(n: int, precision: int | None = None):
    """s_28(n) from starred divisor sums, tau convolutions, and two boundary convolutions."""
    N = _resolve_precision(n, precision)
    tau = _form_coeffs("delta", N)
    tau83 = _form_coeffs("delta_8_3", N)
    tau63 = _form_coeffs("delta_6_3", N)
    return _exact(
        Fraction(12, 1093) * sigma_star(13, n)
        + Fraction(107264, 1093) * tau[n]
        + Fraction(107264 * 12, 1093)
        * (_conv(1, tau, n) - 3 * _conv(1, tau, n, scale=3))
        + Fraction(12448 * 504, 1093) * _conv(5, tau83, n, NATURALS_WITH_ZERO)
        - Fraction(3016 * 480, 1093) * _conv(7, tau63, n, NATURALS_WITH_ZERO)
    )


def lomadze_s24(n: int, precision: int | None = None):
    """s_24(n) from the starred divisor sum and three F-block finite sums."""
    N = _resolve_precision(n, precision)
    return _exact(
        Fraction(1, 73 * 691)
        * (
            6552 * sigma_star(11, n)
            + Fraction(291096, 35) * _lomadze("L_12_8", N)[n]
            + 864 * _lomadze("L_12_6", N)[n]
            + 360 * _lomadze("L_12_4", N)[n]
        )
    )


def lomadze_s28(n: int, precision: int | None = None):
    """s_28(n) from the starred divisor sum and three F-block finite sums."""
    N = _resolve_precision(n, precision)
    return _exact(
        Fraction(12, 1093) * sigma_star(13, n)
        + Fraction(188954, 803355) * _lomadze("L_14_10", N)[n]
        + Fraction(1728, 267785) * _lomadze("L_14_8", N)[n]
        + Fraction(288, 191275) * _lomadze("L_14_6", N)[n]
    )


def tau_from_lattice_sums(n: int, precision: int | None = None):
    """Ramanujan tau from finite lattice sums and two divisor convolutions."""
    N = _resolve_precision(n, precision)
    l_12_8 = _lomadze("L_12_8", N)
    l_12_6 = _lomadze("L_12_6", N)
    l_cal4 = _lomadze("Lcal_4", N)
    l_6_2 = _lomadze("L_6_2", N)
    l_8_4 = _lomadze("L_8_4", N)
    inner = (
        Fraction(36387, 35) * l_12_8[n]
        + 108 * l_12_6[n]
        + Fraction(1, 3) * l_cal4[n]
        - Fraction(32668, 12) * l_6_2[n]
        - 329680 * _conv(3, l_8_4, n)
        + 1372056 * _conv(5, l_6_2, n)
    )
    return _exact(Fraction(1, 73 * 3728) * inner)


#: Weights 2k for which a closed formula (and a decomposition) is implemented.
FORMULA_KS = (7, 9, 11, 12, 14)


def s2k_from_divisor_sums(k: int, n: int, precision: int | None = None):
    """Per-n scalar formula for s_2k, k in FORMULA_KS.

    For the odd weights the Eisenstein part pairs the large coefficient
    with the cofactor-twisted divisor sum, matching the decomposition
    series; the printed rho* restatement is measured separately by the
    rho-star reports.
    """
    N = _resolve_precision(n, precision)
    if k == 7:
        tau = _form_coeffs("delta_7_3", N)
        return _exact(
            Fraction(
                81 * sigma_twisted(6, CHI3, CHI_TRIVIAL, n)
                - 3 * sigma_twisted(6, CHI_TRIVIAL, CHI3, n)
                + 216 * tau[n],
                7,
            )
        )
    if k == 9:
        t1 = _form_coeffs("delta_9_3_1", N)
        t2 = _form_coeffs("delta_9_3_2", N)
        return _exact(
            Fraction(
                2187 * sigma_twisted(8, CHI3, CHI_TRIVIAL, n)
                + 27 * sigma_twisted(8, CHI_TRIVIAL, CHI3, n)
                + 1119744 * t1[n]
                + 41472 * t2[n],
                809,
            )
        )
    if k == 11:
        t1 = _form_coeffs("delta_11_3_1", N)
        t2 = _form_coeffs("delta_11_3_2", N)
        return _exact(
            Fraction(729, 1847) * sigma_twisted(10, CHI3, CHI_TRIVIAL, n)
            - Fraction(3, 1847) * sigma_twisted(10, CHI_TRIVIAL, CHI3, n)
            + Fraction(60588, 9235) * t1[n]
            + Fraction(545292, 9235) * t2[n]
        )
    if k == 12:
        return s24_formula(n, precision)
    if k == 14:
        return s28_formula(n, precision)
    raise ValueError(f"no closed formula for k={k}; supported: {FORMULA_KS}")


# -- basis decompositions -----------------------------------------------------


# In the three odd-weight combinations below, the large coefficient goes
# with the Eisenstein series twisted on the cofactor (zero constant term)
# and the small one with the series twisted on the divisor.  The assignment
# is forced: the other pairing already fails at n = 2, while this one
# matches the counts at every n and gives the constant term exactly 1.


@lru_cache(maxsize=None)
def decomposition_F7(precision: int) -> QSeries:
    """Weight-7 combination of two twisted Eisenstein series and the newform."""
    e_cof = forms.eisenstein_twisted(7, CHI3, CHI_TRIVIAL, precision)
    e_div = forms.eisenstein_twisted(7, CHI_TRIVIAL, CHI3, precision)
    cusp = forms.named_form("delta_7_3", precision).series
    return Fraction(81, 7) * e_cof - Fraction(3, 7) * e_div + Fraction(216, 7) * cusp


@lru_cache(maxsize=None)
def decomposition_F9(precision: int) -> QSeries:
    e_cof = forms.eisenstein_twisted(9, CHI3, CHI_TRIVIAL, precision)
    e_div = forms.eisenstein_twisted(9, CHI_TRIVIAL, CHI3, precision)
    c1 = forms.named_form("delta_9_3_1", precision).series
    c2 = forms.named_form("delta_9_3_2", precision).series
    return (
        Fraction(2187, 809) * e_cof
        + Fraction(27, 809) * e_div
        + Fraction(1119744, 809) * c1
        + Fraction(41472, 809) * c2
    )


@lru_cache(maxsize=None)
def decomposition_F11(precision: int) -> QSeries:
    e_cof = forms.eisenstein_twisted(11, CHI3, CHI_TRIVIAL, precision)
    e_div = forms.eisenstein_twisted(11, CHI_TRIVIAL, CHI3, precision)
    c1 = forms.named_form("delta_11_3_1", precision).series
    c2 = forms.named_form("delta_11_3_2", precision).series
    return (
        Fraction(729, 1847) * e_cof
        - Fraction(3, 1847) * e_div
        + Fraction(60588, 9235) * c1
        + Fraction(545292, 9235) * c2
    )


@lru_cache(maxsize=None)
def decomposition_F12(precision: int) -> QSeries:
    e12 = forms.eisenstein_classical(12, precision)
    e4 = forms.eisenstein_classical(4, precision)
    e6 = forms.eisenstein_classical(6, precision)
    delta = forms.named_form("delta", precision).series
    d83 = forms.named_form("delta_8_3", precision).series
    d63 = forms.named_form("delta_6_3", precision).series
    return (
        Fraction(1, 730) * e12
        + Fraction(729, 730) * e12.scale_argument(3)
        + Fraction(29824, 691) * delta
        + Fraction(1186848, 50443) * (e4 * d83)
        + Fraction(261344, 50443) * (e6 * d63)
    )


@lru_cache(maxsize=None)
def decomposition_F14(precision: int) -> QSeries:
    e14 = forms.eisenstein_classical(14, precision)
    e8 = forms.eisenstein_classical(8, precision)
    e6 = forms.eisenstein_classical(6, precision)
    d83 = forms.named_form("delta_8_3", precision).series
    d63 = forms.named_form("delta_6_3", precision).series
    return (
        -Fraction(1, 2186) * e14
        + Fraction(2187, 2186) * e14.scale_argument(3)
        - Fraction(3016, 1093) * (e8 * d63)
        - Fraction(12448, 1093) * (e6 * d83)
        + Fraction(107264, 1093) * forms.quasimodular_combination(precision)
    )


_DECOMPOSITIONS = {
    7: decomposition_F7,
    9: decomposition_F9,
    11: decomposition_F11,
    12: decomposition_F12,
    14: decomposition_F14,
}


def decomposition(k: int, precision: int) -> QSeries:
    try:
        return _DECOMPOSITIONS[k](precision)
    except KeyError:
        raise ValueError(f"no decomposition for k={k}; supported: {FORMULA_KS}") from None


# -- reports -------------------------------------------------------------------


def encode_value(v):
    v = _exact(v)
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return v


def decode_value(v):
    if isinstance(v, str):
        num, _, den = v.partition("/")
        return Fraction(int(num), int(den))
    return v


@dataclass(frozen=True)
class IdentityReport:
    """Exact per-n verdicts for one identity over the range 1..n_max.

    ``lhs[i]`` and ``rhs[i]`` are the two sides at n = i + 1, stored as
    exact rationals.  ``constant_term`` optionally carries the (lhs, rhs)
    pair at n = 0 for identities that also evaluate there; it does not
    affect the match status, which only covers n >= 1.
    """

    name: str
    n_max: int
    lhs: tuple
    rhs: tuple
    constant_term: tuple | None = None
    note: str = ""

    def __post_init__(self):
        if len(self.lhs) != self.n_max or len(self.rhs) != self.n_max:
            raise ValueError("a report over 1..N must carry exactly N entries per side")

    @property
    def entries(self) -> tuple:
        return tuple(
            (i + 1, self.lhs[i], self.rhs[i]) for i in range(self.n_max)
        )

    @property
    def mismatches(self) -> tuple:
        return tuple(e for e in self.entries if e[1] != e[2])

    @property
    def all_match(self) -> bool:
        return all(l == r for _, l, r in self.entries)

    @property
    def first_mismatch(self):
        for entry in self.entries:
            if entry[1] != entry[2]:
                return entry
        return None

    @property
    def status(self) -> str:
        return "match" if self.all_match else "mismatch"

    @property
    def constant_term_matches(self) -> bool | None:
        if self.constant_term is None:
            return None
        return self.constant_term[0] == self.constant_term[1]

    def to_json_dict(self) -> dict:
        out = {
            "name": self.name,
            "n_max": self.n_max,
            "status": self.status,
            "mismatches": [
                {"n": n, "lhs": encode_value(l), "rhs": encode_value(r)}
                for n, l, r in self.mismatches
            ],
        }
        if self.constant_term is not None:
            out["constant_term"] = {
                "lhs": encode_value(self.constant_term[0]),
                "rhs": encode_value(self.constant_term[1]),
                "match": self.constant_term_matches,
            }
        if self.note:
            out["note"] = self.note
        return out

    def summary(self) -> "ReportSummary":
        return ReportSummary(
            name=self.name,
            n_max=self.n_max,
            status=self.status,
            mismatches=tuple((n, _exact(l), _exact(r)) for n, l, r in self.mismatches),
            constant_term=(
                None
                if self.constant_term is None
                else tuple(_exact(v) for v in self.constant_term)
            ),
            note=self.note,
        )


@dataclass(frozen=True)
class ReportSummary:
    """The JSON-visible projection of an IdentityReport (mismatches only)."""

    name: str
    n_max: int
    status: str
    mismatches: tuple
    constant_term: tuple | None = None
    note: str = ""


def report_from_json_dict(d: dict) -> ReportSummary:
    constant_term = None
    if "constant_term" in d:
        constant_term = (
            decode_value(d["constant_term"]["lhs"]),
            decode_value(d["constant_term"]["rhs"]),
        )
    return ReportSummary(
        name=d["name"],
        n_max=d["n_max"],
        status=d["status"],
        mismatches=tuple(
            (m["n"], decode_value(m["lhs"]), decode_value(m["rhs"]))
            for m in d["mismatches"]
        ),
        constant_term=constant_term,
        note=d.get("note", ""),
    )


def _pointwise_report(name, n_max, lhs_fn, rhs_fn, constant_term=None, note=""):
    lhs = tuple(_exact(lhs_fn(n)) for n in range(1, n_max + 1))
    rhs = tuple(_exact(rhs_fn(n)) for n in range(1, n_max + 1))
    return IdentityReport(name, n_max, lhs, rhs, constant_term, note)


# -- identity checks ------------------------------------------------------------


def check_decomposition(k: int, n_max: int, precision: int | None = None) -> IdentityReport:
    """Basis decomposition of the weight-k theta power against brute force."""
    N = _resolve_precision(n_max, precision)
    dec = decomposition(k, N).coeffs
    ref = lattice.s2k_bruteforce(k, N)
    note = ""
    if dec[0] != ref[0]:
        note = (
            "the combination reproduces every coefficient n >= 1; its constant "
            "term differs (the closed formulas are statements about positive n)"
        )
    return IdentityReport(
        f"f{k}-decomposition",
        n_max,
        tuple(_exact(c) for c in dec[1 : n_max + 1]),
        tuple(ref[1 : n_max + 1]),
        constant_term=(_exact(dec[0]), ref[0]),
        note=note,
    )


def check_s2k_theorem(k: int, n_max: int, precision: int | None = None) -> IdentityReport:
    """Printed rho*-based statement for weight k in {7, 9, 11} against brute force."""
    N = _resolve_precision(n_max, precision)
    formula = {7: s14_formula, 9: s18_formula, 11: s22_formula}[k]
    ref = lattice.s2k_bruteforce(k, N)
    return _pointwise_report(
        f"s{2 * k}-theorem",
        n_max,
        lambda n: formula(n, N),
        lambda n: ref[n],
        note=(
            "uses the printed rho* definition; mismatches are expected and "
            "quantified by the rho-star reports"
        ),
    )


def check_rho_star(ell: int, n_max: int, precision: int | None = None) -> IdentityReport:
    """Printed rho*_ell against the value the decomposition forces from the counts."""
    N = _resolve_precision(n_max, precision)
    k = {6: 7, 8: 9, 10: 11}[ell]
    ref = lattice.s2k_bruteforce(k, N)
    if ell == 6:
        tau = _form_coeffs("delta_7_3", N)

        def implied(n):
            return Fraction(7 * ref[n] - 216 * tau[n], 3)

    elif ell == 8:
        t1 = _form_coeffs("delta_9_3_1", N)
        t2 = _form_coeffs("delta_9_3_2", N)

        def implied(n):
            return Fraction(809 * ref[n] - 41472 * (27 * t1[n] + t2[n]), 27)

    else:
        t1 = _form_coeffs("delta_11_3_1", N)
        t2 = _form_coeffs("delta_11_3_2", N)

        def implied(n):
            return Fraction(1847, 3) * ref[n] - Fraction(20196, 5) * (t1[n] + 9 * t2[n])

    return _pointwise_report(
        f"rho-star-{ell}",
        n_max,
        lambda n: rho_star(ell, n),
        implied,
        note=(
            "lhs is the printed definition, rhs the value forced by the "
            "brute-force counts and the cusp coefficients; entries listed "
            "under mismatches quantify the difference"
        ),
    )


def check_s24_formula(n_max: int, precision: int | None = None) -> IdentityReport:
    N = _resolve_precision(n_max, precision)
    ref = lattice.s2k_bruteforce(12, N)
    return _pointwise_report(
        "s24-formula", n_max, lambda n: s24_formula(n, N), lambda n: ref[n]
    )


def check_s28_formula(n_max: int, precision: int | None = None) -> IdentityReport:
    N = _resolve_precision(n_max, precision)
    ref = lattice.s2k_bruteforce(14, N)
    return _pointwise_report(
        "s28-formula", n_max, lambda n: s28_formula(n, N), lambda n: ref[n]
    )


def check_lomadze_s24(n_max: int, precision: int | None = None) -> IdentityReport:
    N = _resolve_precision(n_max, precision)
    ref = lattice.s2k_bruteforce(12, N)
    return _pointwise_report(
        "lomadze-s24", n_max, lambda n: lomadze_s24(n, N), lambda n: ref[n]
    )


def check_lomadze_s28(n_max: int, precision: int | None = None) -> IdentityReport:
    N = _resolve_precision(n_max, precision)
    ref = lattice.s2k_bruteforce(14, N)
    return _pointwise_report(
        "lomadze-s28", n_max, lambda n: lomadze_s28(n, N), lambda n: ref[n]
    )


def check_tau_eq(n_max: int, precision: int | None = None) -> IdentityReport:
    """The lattice-sum expression for tau against the eta-power expansion."""
    N = _resolve_precision(n_max, precision)
    tau = _form_coeffs("delta", N)
    return _pointwise_report(
        "tau-eq", n_max, lambda n: tau_from_lattice_sums(n, N), lambda n: tau[n]
    )


def newform_coeff_identities(n_max: int, precision: int | None = None) -> list[IdentityReport]:
    """The six coefficient identities tying cusp expansions to finite sums."""
    N = _resolve_precision(n_max, precision)
    tau63 = _form_coeffs("delta_6_3", N)
    tau73 = _form_coeffs("delta_7_3", N)
    tau83 = _form_coeffs("delta_8_3", N)
    t91 = _form_coeffs("delta_9_3_1", N)
    t92 = _form_coeffs("delta_9_3_2", N)
    t111 = _form_coeffs("delta_11_3_1", N)
    t112 = _form_coeffs("delta_11_3_2", N)
    l62 = _lomadze("L_6_2", N)
    l73 = _lomadze("L_7_3", N)
    l84 = _lomadze("L_8_4", N)
    l95 = _lomadze("L_9_5", N)
    l106 = _lomadze("L_10_6", N)
    l117 = _lomadze("L_11_7", N)
    reports = [
        _pointwise_report(
            "newform-w6", n_max, lambda n: 12 * tau63[n], lambda n: l62[n]
        ),
        _pointwise_report(
            "newform-w7", n_max, lambda n: 30 * tau73[n], lambda n: l73[n]
        ),
        _pointwise_report(
            "newform-w8", n_max, lambda n: 108 * tau83[n], lambda n: l84[n]
        ),
        _pointwise_report(
            "newform-w9",
            n_max,
            lambda n: 168 * (27 * t91[n] + t92[n]),
            lambda n: l95[n],
        ),
        _pointwise_report(
            "newform-w10",
            n_max,
            lambda n: l106[n] % 120,
            lambda n: 0,
            note=(
                "the weight-10 coefficients are defined as L_10_6(n)/120, so "
                "exact divisibility by 120 is the verifiable content here; the "
                "values themselves are exercised by the convolution identities"
            ),
        ),
        _pointwise_report(
            "newform-w11",
            n_max,
            lambda n: 81 * (t111[n] + 9 * t112[n]),
            lambda n: 5 * l117[n],
        ),
    ]
    return reports


def ramanujan_convolution(n_max: int, precision: int | None = None) -> IdentityReport:
    """sum(sigma(a) tau(b), a + b = n) = (1 - n) tau(n) / 24, exactly."""
    N = _resolve_precision(n_max, precision)
    tau = _form_coeffs("delta", N)
    return _pointwise_report(
        "ramanujan-convolution",
        n_max,
        lambda n: _conv(1, tau, n),
        lambda n: Fraction((1 - n) * tau[n], 24),
    )


def _e2_delta_rhs(n, tau, tau63, tau83, tau1032, convention):
    return (
        Fraction(3 - n, 72) * tau[n]
        - Fraction(1, 576) * tau63[n]
        - Fraction(1, 96) * tau83[n]
        - Fraction(1, 64) * tau1032[n]
        - Fraction(5, 6) * _conv(7, tau63, n, convention)
        + Fraction(21, 4) * _conv(5, tau83, n, convention)
        - Fraction(15, 4) * _conv(3, tau1032, n, convention)
    )


def e2_delta_convolution(n_max: int, precision: int | None = None) -> IdentityReport:
    """The seven-term expression for sum(sigma(a) tau(b), 3a + b = n).

    The inner sums are first taken over a, b >= 1; if that fails anywhere
    the 0-inclusive convention is tried and the outcome of both attempts is
    recorded in the report note.
    """
    N = _resolve_precision(n_max, precision)
    tau = _form_coeffs("delta", N)
    tau63 = _form_coeffs("delta_6_3", N)
    tau83 = _form_coeffs("delta_8_3", N)
    tau1032 = tau_10_3_2_values(N)
    lhs = tuple(_exact(_conv(1, tau, n, scale=3)) for n in range(1, n_max + 1))
    rhs_plain = tuple(
        _exact(_e2_delta_rhs(n, tau, tau63, tau83, tau1032, NATURALS))
        for n in range(1, n_max + 1)
    )
    if lhs == rhs_plain:
        return IdentityReport(
            "e2-delta-convolution",
            n_max,
            lhs,
            rhs_plain,
            note="inner sums taken over a, b >= 1; no boundary terms needed",
        )
    rhs_zero = tuple(
        _exact(_e2_delta_rhs(n, tau, tau63, tau83, tau1032, NATURALS_WITH_ZERO))
        for n in range(1, n_max + 1)
    )
    if lhs == rhs_zero:
        return IdentityReport(
            "e2-delta-convolution",
            n_max,
            lhs,
            rhs_zero,
            note=(
                "inner sums over a, b >= 1 fail; the identity holds under the "
                "0-inclusive convention with the stated boundary constants"
            ),
        )
    return IdentityReport(
        "e2-delta-convolution",
        n_max,
        lhs,
        rhs_plain,
        note="neither index convention reproduces the left side; values shown use a, b >= 1",
    )


def s28_convolution_identity(n_max: int, precision: int | None = None) -> IdentityReport:
    """Three divisor convolutions of finite sums against six finite sums.

    The first term on the right enters with coefficient -461/3: that sign
    follows from the substitution chain and the n = 1 evaluation, where all
    convolutions are empty and the right side must vanish.
    """
    N = _resolve_precision(n_max, precision)
    l62 = _lomadze("L_6_2", N)
    l84 = _lomadze("L_8_4", N)
    l106 = _lomadze("L_10_6", N)
    l14_10 = _lomadze("L_14_10", N)
    l14_8 = _lomadze("L_14_8", N)
    l14_6 = _lomadze("L_14_6", N)

    def lhs(n):
        return (
            73760 * _conv(7, l62, n)
            - Fraction(194432, 3) * _conv(5, l84, n)
            + 60336 * _conv(3, l106, n)
        )

    def rhs(n):
        return (
            -Fraction(461, 3) * l62[n]
            - Fraction(3472, 27) * l84[n]
            - Fraction(1257, 5) * l106[n]
            + Fraction(94477, 735) * l14_10[n]
            + Fraction(864, 245) * l14_8[n]
            + Fraction(144, 175) * l14_6[n]
        )

    return _pointwise_report(
        "s28-convolution",
        n_max,
        lhs,
        rhs,
        note="right-hand L_6_2 coefficient is -461/3 (sign fixed by the empty-sum case n = 1)",
    )


# -- the registry and the full run ----------------------------------------------

_NEWFORM_SLOTS = {
    "newform-w6": 0,
    "newform-w7": 1,
    "newform-w8": 2,
    "newform-w9": 3,
    "newform-w10": 4,
    "newform-w11": 5,
}

IDENTITY_BUILDERS = {
    "f7-decomposition": lambda n, N: check_decomposition(7, n, N),
    "f9-decomposition": lambda n, N: check_decomposition(9, n, N),
    "f11-decomposition": lambda n, N: check_decomposition(11, n, N),
    "f12-decomposition": lambda n, N: check_decomposition(12, n, N),
    "f14-decomposition": lambda n, N: check_decomposition(14, n, N),
    "s14-theorem": lambda n, N: check_s2k_theorem(7, n, N),
    "s18-theorem": lambda n, N: check_s2k_theorem(9, n, N),
    "s22-theorem": lambda n, N: check_s2k_theorem(11, n, N),
    "rho-star-6": lambda n, N: check_rho_star(6, n, N),
    "rho-star-8": lambda n, N: check_rho_star(8, n, N),
    "rho-star-10": lambda n, N: check_rho_star(10, n, N),
    "s24-formula": check_s24_formula,
    "s28-formula": check_s28_formula,
    "lomadze-s24": check_lomadze_s24,
    "lomadze-s28": check_lomadze_s28,
    "tau-eq": check_tau_eq,
    **{
        name: (lambda n, N, _i=i: newform_coeff_identities(n, N)[_i])
        for name, i in _NEWFORM_SLOTS.items()
    },
    "ramanujan-convolution": ramanujan_convolution,
    "e2-delta-convolution": e2_delta_convolution,
    "s28-convolution": s28_convolution_identity,
}

IDENTITY_NAMES = tuple(IDENTITY_BUILDERS)

#: Printed statements known to disagree with the counts; reported, and
#: excluded from the default pass/fail verdict.
DOCUMENTED_DISCREPANCIES = frozenset(
    {
        "s14-theorem",
        "s18-theorem",
        "s22-theorem",
        "rho-star-6",
        "rho-star-8",
        "rho-star-10",
    }
)


def verify_all(
    n_max: int,
    selection="all",
    precision: int | None = None,
) -> list[IdentityReport]:
    """Run the selected identity checks for n = 1..n_max at the given precision."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if precision is None:
        precision = DEFAULT_PRECISION
    if n_max > precision:
        raise PrecisionTooLow(
            f"n_max={n_max} exceeds the working precision {precision}"
        )
    if selection == "all":
        names = IDENTITY_NAMES
    else:
        names = tuple(selection)
        unknown = [name for name in names if name not in IDENTITY_BUILDERS]
        if unknown:
            raise UnknownIdentity(
                f"unknown identities {unknown}; known: {', '.join(IDENTITY_NAMES)}"
            )
    return [IDENTITY_BUILDERS[name](n_max, precision) for name in names]


def verification_passed(reports, strict: bool = False) -> bool:
    """True when every report matches, ignoring documented discrepancies unless strict."""
    return all(
        r.all_match or (not strict and r.name in DOCUMENTED_DISCREPANCIES)
        for r in reports
    )
