"""q-expansions of eta quotients, Eisenstein series, and the named forms catalog.

Everything is produced as a QSeries at an explicitly requested precision;
there is no global precision state.  Constructors are pure and memoized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import lattice
from .arith import (
    CHI3,
    CHI_TRIVIAL,
    DirichletCharacter,
    bernoulli,
    bernoulli_generalized,
    sigma,
    sigma_twisted,
)
from .series import QSeries


class NonIntegralExponent(ValueError):
    """Eta quotient whose total q-exponent is not an integer multiple of 24."""


class ParityMismatch(ValueError):
    """Character parity incompatible with the requested weight."""


class UnknownForm(ValueError):
    """Name not present in the forms catalog."""


@dataclass(frozen=True)
class EtaQuotientSpec:
    """A finite product of eta(m z)^e factors, given as (scale m, exponent e) pairs.

    Each eta factor contributes a fractional leading power q^(m*e/24); only
    quotients whose total sum(m*e) is divisible by 24 are admitted, so the
    result is an honest power series.
    """

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for m, _ in self.factors:
            if m < 1:
                raise ValueError("eta argument scales must be positive")

    def leading_exponent(self) -> int:
        total = sum(m * e for m, e in self.factors)
        if total % 24:
            raise NonIntegralExponent(
                f"total q-exponent {total}/24 of {self.factors} is not an integer"
            )
        lead = total // 24
        if lead < 0:
            raise ValueError("quotients with a pole at q = 0 are not supported")
        return lead


@lru_cache(maxsize=None)
def _euler_core(scale: int, precision: int) -> QSeries:
    """prod(1 - q^(scale * j), j >= 1) truncated at the working precision."""
    coeffs = [0] * (precision + 1)
    coeffs[0] = 1
    for m in range(scale, precision + 1, scale):
        for i in range(precision, m - 1, -1):
            if coeffs[i - m]:
                coeffs[i] -= coeffs[i - m]
    return QSeries(coeffs)


@lru_cache(maxsize=None)
def eta_quotient(spec: EtaQuotientSpec, precision: int) -> QSeries:
    """Expand prod(eta(m z)^e) as a power series up to q^precision."""
    lead = spec.leading_exponent()
    result = QSeries.one(precision)
    for m, e in spec.factors:
        core = _euler_core(m, precision)
        result = result * (core**e if e >= 0 else core.invert() ** (-e))
    return result.shift(lead)


def _eta(*factors: tuple[int, int]) -> EtaQuotientSpec:
    return EtaQuotientSpec(tuple(factors))


@lru_cache(maxsize=None)
def eisenstein_classical(k: int, precision: int) -> QSeries:
    """Normalized Eisenstein series 1 - (2k/B_k) * sum(sigma_(k-1)(n) q^n), k even.

    k = 2 is admitted (the quasimodular series 1 - 24 sum(sigma(n) q^n)).
    """
    if k < 2 or k % 2:
        raise ValueError("weight must be an even integer >= 2")
    factor = Fraction(-2 * k) / bernoulli(k)
    return QSeries(
        [1] + [factor * sigma(k - 1, n) for n in range(1, precision + 1)]
    )


@lru_cache(maxsize=None)
def eisenstein_twisted(
    k: int,
    chi: DirichletCharacter,
    psi: DirichletCharacter,
    precision: int,
) -> QSeries:
    """Character-twisted Eisenstein series with coefficients sigma_(k-1; chi, psi)(n).

    The constant term is 0 when chi has conductor > 1 and
    -B_(k,psi) / (2k) when chi is the conductor-1 character.
    """
    if not isinstance(k, int) or k <= 2:
        raise ValueError("weight must be an integer > 2")
    if chi(-1) * psi(-1) != (-1) ** k:
        raise ParityMismatch(
            f"chi(-1)*psi(-1) must equal (-1)^{k} for weight {k}"
        )
    if chi.conductor == 1 and psi.conductor == 1:
        raise ValueError("both characters trivial: use eisenstein_classical")
    if chi.conductor > 1:
        c0: int | Fraction = 0
    else:
        c0 = -bernoulli_generalized(k, psi) / (2 * k)
    return QSeries(
        [c0] + [sigma_twisted(k - 1, chi, psi, n) for n in range(1, precision + 1)]
    )


def theta_Fk(k: int, precision: int) -> QSeries:
    """Theta series of F_k: the k-th power of the one-block series."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return lattice.theta_series(k, precision)


@lru_cache(maxsize=None)
def quasimodular_combination(precision: int) -> QSeries:
    """The weight-14 cusp expansion (1/2) * (3 E_2(3z) - E_2(z)) * delta."""
    e2 = eisenstein_classical(2, precision)
    delta = eta_quotient(_eta((1, 24)), precision)
    return Fraction(1, 2) * (3 * e2.scale_argument(3) - e2) * delta


@dataclass(frozen=True)
class NamedForm:
    name: str
    weight: int
    level: int
    character: DirichletCharacter
    series: QSeries


def _build_delta_7_3(precision: int) -> QSeries:
    # The Eisenstein difference starts at 240q, so the product is scaled by
    # 1/240 to make this the normalized newform (first coefficient 1); the
    # check below fails hard if that normalization is ever off.
    e4 = eisenstein_classical(4, precision)
    raw = (e4 - e4.scale_argument(3)) * eta_quotient(_eta((1, 9), (3, -3)), precision)
    series = Fraction(1, 240) * raw
    if precision >= 1 and series.coefficient(1) != 1:
        raise AssertionError(
            f"normalization failure: leading coefficient {series.coefficient(1)} != 1"
        )
    return series


def _build_delta_8_3(precision: int) -> QSeries:
    return (
        eta_quotient(_eta((1, 12), (3, 4)), precision)
        + 81 * eta_quotient(_eta((1, 6), (3, 4), (9, 6)), precision)
        + 18 * eta_quotient(_eta((1, 9), (3, 4), (9, 3)), precision)
    )


_CATALOG = {
    # name: (weight, level, character, builder)
    "delta": (12, 1, CHI_TRIVIAL, lambda N: eta_quotient(_eta((1, 24)), N)),
    "delta_6_3": (6, 3, CHI_TRIVIAL, lambda N: eta_quotient(_eta((1, 6), (3, 6)), N)),
    "delta_8_3": (8, 3, CHI_TRIVIAL, _build_delta_8_3),
    "delta_7_3": (7, 3, CHI3, _build_delta_7_3),
    "delta_9_3_1": (9, 3, CHI3, lambda N: eta_quotient(_eta((1, 3), (3, 15)), N)),
    "delta_9_3_2": (9, 3, CHI3, lambda N: eta_quotient(_eta((1, 15), (3, 3)), N)),
    "delta_11_3_1": (
        11,
        3,
        CHI3,
        lambda N: eisenstein_classical(4, N) * _build_delta_7_3(N),
    ),
    "delta_11_3_2": (
        11,
        3,
        CHI3,
        lambda N: eisenstein_classical(4, N).scale_argument(3) * _build_delta_7_3(N),
    ),
}

CATALOG_NAMES = tuple(_CATALOG)

#: Catalog forms that are normalized newforms (multiplicative coefficients).
NEWFORM_NAMES = ("delta", "delta_6_3", "delta_8_3", "delta_7_3")


@lru_cache(maxsize=None)
def named_form(name: str, precision: int) -> NamedForm:
    """Construct a catalog form; every catalog entry is cuspidal."""
    try:
        weight, level, character, builder = _CATALOG[name]
    except KeyError:
        raise UnknownForm(
            f"unknown form {name!r}; catalog: {', '.join(CATALOG_NAMES)}"
        ) from None
    series = builder(precision)
    if series.coefficient(0) != 0:
        raise AssertionError(f"cusp form {name} has nonzero constant term")
    return NamedForm(name, weight, level, character, series)
