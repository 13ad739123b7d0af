"""Lattice-point counting for the block forms F_k and the Lomadze finite sums.

F_k is the direct sum of k copies of the binary form x^2 + xy + y^2, so
its representation numbers s_2k(n) are coefficients of the k-th power of
the two-variable theta series, and every sum over the solution set that
only involves the first coordinate reduces to a convolution of the
one-block moment tables with s_2(k-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .series import QSeries

#: x1-power orders carried by the moment tables.  Odd orders vanish
#: identically (x -> -x is a solution-set involution negating x1).
MOMENT_ORDERS = (0, 2, 4, 6, 8)


class UnknownSum(ValueError):
    """Raised when a finite-sum name is not in the catalog."""


@dataclass(frozen=True)
class MomentTable:
    """values[n] = sum of x1^t over all solutions of F_k(x) = n, 0 <= n <= precision."""

    k: int
    t: int
    values: tuple[int, ...]

    @property
    def precision(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        return self.values[n]


@lru_cache(maxsize=None)
def _f1_moment_rows(precision: int) -> dict[int, tuple[int, ...]]:
    """One enumeration pass over x^2 + xy + y^2 = n for all n <= precision.

    For fixed x the equation is a quadratic in y with discriminant
    4n - 3x^2, so |x| <= sqrt(4n/3); integer roots need the discriminant
    to be a perfect square r^2 with r = x (mod 2).  No floating point.
    """
    rows = {t: [0] * (precision + 1) for t in MOMENT_ORDERS}
    rows[0][0] = 1  # the zero vector is the only representation of 0
    for n in range(1, precision + 1):
        x = 0
        while 3 * x * x <= 4 * n:
            disc = 4 * n - 3 * x * x
            r = isqrt(disc)
            if r * r == disc and (x + r) % 2 == 0:
                count = 1 if r == 0 else 2  # y = (-x +/- r) / 2
                if x == 0:
                    rows[0][n] += count
                else:
                    rows[0][n] += 2 * count  # x and -x
                    for t in MOMENT_ORDERS[1:]:
                        rows[t][n] += 2 * count * x**t
            x += 1
    return {t: tuple(row) for t, row in rows.items()}


def enumerate_f1(precision: int) -> tuple[QSeries, dict[int, MomentTable]]:
    """Theta series of one block and its x1-power moment tables, up to q^precision."""
    if precision < 0:
        raise ValueError("precision must be >= 0")
    rows = _f1_moment_rows(precision)
    series = QSeries(rows[0])
    tables = {t: MomentTable(1, t, rows[t]) for t in MOMENT_ORDERS}
    return series, tables


@lru_cache(maxsize=None)
def theta_series(k: int, precision: int) -> QSeries:
    """q-series whose n-th coefficient is s_2k(n), the representation count by F_k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return QSeries.one(precision)
    base, _ = enumerate_f1(precision)
    if k == 1:
        return base
    return theta_series(k - 1, precision) * base


def s2k_bruteforce(k: int, precision: int) -> tuple[int, ...]:
    """Representation numbers s_2k(0..precision), from enumeration and series powers.

    This is the universal oracle every closed-form identity is checked
    against.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    return theta_series(k, precision).coeffs


@lru_cache(maxsize=None)
def moment_table(k: int, t: int, precision: int) -> MomentTable:
    """M_t(k)(n) = sum of x1^t over F_k(x) = n, via the block convolution.

    M_t(k)(n) = sum(M_t(1)(a) * s_2(k-1)(n - a), 0 <= a <= n).
    """
    if t not in MOMENT_ORDERS:
        raise ValueError(f"moment order must be one of {MOMENT_ORDERS}")
    if k < 1:
        raise ValueError("k must be >= 1")
    base = _f1_moment_rows(precision)[t]
    if k == 1:
        return MomentTable(1, t, base)
    rest = theta_series(k - 1, precision).coeffs
    values = []
    support = [a for a in range(precision + 1) if base[a]]
    for n in range(precision + 1):
        values.append(sum(base[a] * rest[n - a] for a in support if a <= n))
    return MomentTable(k, t, tuple(values))


# -- direct (nested-loop) oracles used by the test suite --------------------


def f1_moments_direct(n_max: int) -> dict[int, list[int]]:
    """Plain box enumeration over (x, y); independent of the discriminant method."""
    bound = isqrt(4 * n_max // 3) + 1
    rows: dict[int, list[int]] = {t: [0] * (n_max + 1) for t in MOMENT_ORDERS}
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            n = x * x + x * y + y * y
            if n <= n_max:
                for t in MOMENT_ORDERS:
                    rows[t][n] += x**t
    return rows


def f2_moments_direct(n_max: int) -> dict[int, list[int]]:
    """Four-variable nested-loop enumeration of F_2; exponential-cost test oracle."""
    bound = isqrt(4 * n_max // 3) + 1
    rows: dict[int, list[int]] = {t: [0] * (n_max + 1) for t in MOMENT_ORDERS}
    rng = range(-bound, bound + 1)
    for x1 in rng:
        for x2 in rng:
            b1 = x1 * x1 + x1 * x2 + x2 * x2
            if b1 > n_max:
                continue
            powers = [x1**t for t in MOMENT_ORDERS]
            for x3 in rng:
                for x4 in rng:
                    n = b1 + x3 * x3 + x3 * x4 + x4 * x4
                    if n <= n_max:
                        for i, t in enumerate(MOMENT_ORDERS):
                            rows[t][n] += powers[i]
    return rows


def s2k_direct_recursive(k: int, n: int) -> int:
    """Count solutions of F_k = n by explicit coordinate recursion over blocks.

    Enumerates the (x, y) pairs of each block with pruning; only usable for
    small n, but fully independent of the series convolution path.
    """
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    pairs = []  # (value, x, y) with value <= n
    bound = isqrt(4 * n // 3) + 1
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            v = x * x + x * y + y * y
            if v <= n:
                pairs.append(v)

    def count(block: int, remaining: int) -> int:
        if block == k:
            return 1 if remaining == 0 else 0
        return sum(count(block + 1, remaining - v) for v in pairs if v <= remaining)

    return count(0, n)


# -- the catalog of finite sums ---------------------------------------------


@dataclass(frozen=True)
class LomadzeSumSpec:
    """A finite sum over solutions of F_blocks = n of a polynomial in x1 and n.

    ``terms`` lists (x1 power t, coefficient polynomial in n), the polynomial
    given by its integer coefficients from degree 0 upward, so the sum is
    sum over solutions of sum_t poly_t(n) * x1^t.  All x1 powers are even
    and at most 8.
    """

    name: str
    weight: int
    blocks: int
    terms: tuple[tuple[int, tuple[int, ...]], ...]

    def coefficient(self, t: int, n: int) -> int:
        for power, poly in self.terms:
            if power == t:
                return sum(c * n**i for i, c in enumerate(poly))
        return 0


LOMADZE_CATALOG: tuple[LomadzeSumSpec, ...] = (
    # weight-7/9/11 companion sums over F_3, F_5, F_7
    LomadzeSumSpec("L_7_3", 7, 3, ((4, (15,)), (2, (0, -12)), (0, (0, 0, 1)))),
    LomadzeSumSpec("L_9_5", 9, 5, ((4, (63,)), (2, (0, -36)), (0, (0, 0, 2)))),
    LomadzeSumSpec("L_11_7", 11, 7, ((4, (54,)), (2, (0, -24)), (0, (0, 0, 1)))),
    # low-weight sums feeding the newform coefficient identities
    LomadzeSumSpec("L_6_2", 6, 2, ((4, (9,)), (2, (0, -9)), (0, (0, 0, 1)))),
    LomadzeSumSpec("L_8_4", 8, 4, ((4, (45,)), (2, (0, -30)), (0, (0, 0, 2)))),
    # corrected x1^2 coefficient: -21n (an often-miscopied 27 gives wrong values)
    LomadzeSumSpec("L_10_6", 10, 6, ((4, (42,)), (2, (0, -21)), (0, (0, 0, 1)))),
    # the 24-variable formula's sums
    LomadzeSumSpec("L_12_8", 12, 8, ((4, (135,)), (2, (0, -54)), (0, (0, 0, 2)))),
    LomadzeSumSpec(
        "L_12_6", 12, 6, ((6, (162,)), (4, (0, -162)), (2, (0, 0, 36)), (0, (0, 0, 0, -1)))
    ),
    LomadzeSumSpec(
        "L_12_4",
        12,
        4,
        ((8, (1215,)), (6, (0, -2268)), (4, (0, 0, 1260)), (2, (0, 0, 0, -210)), (0, (0, 0, 0, 0, 5))),
    ),
    # combined F_4 sum 135*L_12_4 - 4121*L_8_4, as displayed in the tau formula
    LomadzeSumSpec(
        "Lcal_4",
        12,
        4,
        (
            (8, (164025,)),
            (6, (0, -306180)),
            (4, (-185445, 0, 170100)),
            (2, (0, 123630, 0, -28350)),
            (0, (0, 0, -8242, 0, 675)),
        ),
    ),
    # the 28-variable formula's sums
    LomadzeSumSpec("L_14_10", 14, 10, ((4, (99,)), (2, (0, -33)), (0, (0, 0, 1)))),
    LomadzeSumSpec(
        "L_14_8", 14, 8, ((6, (594,)), (4, (0, -495)), (2, (0, 0, 90)), (0, (0, 0, 0, -2)))
    ),
    LomadzeSumSpec(
        "L_14_6",
        14,
        6,
        ((8, (8019,)), (6, (0, -12474)), (4, (0, 0, 5670)), (2, (0, 0, 0, -756)), (0, (0, 0, 0, 0, 14))),
    ),
)

LOMADZE_BY_NAME = {spec.name: spec for spec in LOMADZE_CATALOG}


def lomadze_catalog() -> tuple[LomadzeSumSpec, ...]:
    return LOMADZE_CATALOG


def lomadze_spec(name: str) -> LomadzeSumSpec:
    try:
        return LOMADZE_BY_NAME[name]
    except KeyError:
        known = ", ".join(sorted(LOMADZE_BY_NAME))
        raise UnknownSum(f"unknown sum {name!r}; catalog: {known}") from None


def lomadze_sum(spec: LomadzeSumSpec, n: int, precision: int | None = None) -> int:
    """Evaluate the finite sum at n using the moment tables of its block form."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if precision is None:
        precision = n
    if n > precision:
        raise ValueError(f"n={n} exceeds the table precision {precision}")
    return sum(
        spec.coefficient(t, n) * moment_table(spec.blocks, t, precision)[n]
        for t, _ in spec.terms
    )


def lomadze_values(name: str, precision: int) -> tuple[int, ...]:
    """All values L(0..precision) of the named sum (L(0) = 0 for every catalog entry)."""
    spec = lomadze_spec(name)
    tables = {t: moment_table(spec.blocks, t, precision) for t, _ in spec.terms}
    return tuple(
        sum(spec.coefficient(t, n) * tables[t][n] for t, _ in spec.terms)
        for n in range(precision + 1)
    )
