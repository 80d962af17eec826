"""Exact rational power series for summand-count statistics.

All coefficients are Fractions and every operation is truncated at an
explicit order, so the moment extraction below is exact integer/rational
arithmetic end to end.  The series of interest count binary words that
start with 1 and avoid a block of k consecutive 1s: A_k counts the words
(one layer of SRs per length), B_k weights each word by its number of 1s,
and C_k carries the second factorial moment plus the first, so that
variances come out of [x^n] ratios directly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .errors import DivisionByNonUnit

_ZERO = Fraction(0)


class RationalPowerSeries:
    """A truncated power series with Fraction coefficients.

    Binary operations truncate to the shorter operand's order, so results
    never silently pretend to more precision than their inputs.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Fraction | int]):
        self.coeffs: tuple[Fraction, ...] = tuple(Fraction(c) for c in coeffs)

    @classmethod
    def from_terms(cls, terms: Mapping[int, Fraction | int], order: int) -> "RationalPowerSeries":
        cs = [_ZERO] * (order + 1)
        for n, c in terms.items():
            if 0 <= n <= order:
                cs[n] = Fraction(c)
        return cls(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalPowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "RationalPowerSeries") -> "RationalPowerSeries":
        n = min(self.order, other.order)
        return RationalPowerSeries(
            [a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])]
        )

    def __sub__(self, other: "RationalPowerSeries") -> "RationalPowerSeries":
        n = min(self.order, other.order)
        return RationalPowerSeries(
            [a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])]
        )

    def __mul__(self, other: "RationalPowerSeries") -> "RationalPowerSeries":
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [_ZERO] * (n + 1)
        for i in range(min(len(a), n + 1)):
            ai = a[i]
            if not ai:
                continue
            for j in range(min(len(b), n + 1 - i)):
                if b[j]:
                    out[i + j] += ai * b[j]
        return RationalPowerSeries(out)

    def __truediv__(self, other: "RationalPowerSeries") -> "RationalPowerSeries":
        if other.coeffs[0] == 0:
            raise DivisionByNonUnit("series division needs a nonzero constant term")
        n = min(self.order, other.order)
        b0 = other.coeffs[0]
        out: list[Fraction] = []
        for i in range(n + 1):
            acc = self.coeffs[i]
            for j in range(1, min(i, other.order) + 1):
                if other.coeffs[j]:
                    acc -= out[i - j] * other.coeffs[j]
            out.append(acc / b0)
        return RationalPowerSeries(out)

    def __repr__(self) -> str:
        return f"RationalPowerSeries({list(self.coeffs)!r})"


def poly(terms: Mapping[int, int], order: int) -> RationalPowerSeries:
    """Polynomial as a truncated series."""
    return RationalPowerSeries.from_terms(terms, order)


def delta_poly(k: int, order: int) -> RationalPowerSeries:
    """Delta_k(x) = 1 - x - x^2 - ... - x^k."""
    terms = {0: 1}
    for j in range(1, k + 1):
        terms[j] = -1
    return poly(terms, order)


def _one_minus_x(order: int) -> RationalPowerSeries:
    return poly({0: 1, 1: -1}, order)


def _weight_sum(k: int, order: int) -> RationalPowerSeries:
    """sum_{r=1}^{k-1} r x^(r+1)."""
    return poly({r + 1: r for r in range(1, k)}, order)


def _weight_sum2(k: int, order: int) -> RationalPowerSeries:
    """sum_{r=2}^{k-1} r (r-1) x^(r+1)."""
    return poly({r + 1: r * (r - 1) for r in range(2, k)}, order)


def series_A(k: int, order: int) -> RationalPowerSeries:
    """Counting series: [x^n] A_k = number of length-n words, equivalently
    the layer cardinality x_{n+2} - x_{n+1}."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    num = poly({1: 1, k: -1}, order)
    den = poly({0: 1, 1: -2, k + 1: 1}, order)
    return num / den


def series_B(k: int, order: int) -> RationalPowerSeries:
    """Total-ones series: [x^n] B_k = sum of ones counts over length-n words."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    delta = delta_poly(k, order)
    p = _one_minus_x(order) * delta
    q = poly({}, order) - (poly({1: 1}, order) * delta) - _one_minus_x(order) * _weight_sum(k, order)
    num = poly({1: 1, k: -k}, order) * p - poly({1: 1, k: -1}, order) * q
    return num / (p * p)


def series_C(k: int, order: int) -> RationalPowerSeries:
    """Second-moment series: [x^n] C_k = sum of m^2 over length-n words,
    assembled as the second factorial moment plus B_k."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    delta = delta_poly(k, order)
    one_mx = _one_minus_x(order)
    p = one_mx * delta
    s1 = _weight_sum(k, order)
    q = poly({}, order) - (poly({1: 1}, order) * delta) - one_mx * s1
    n_poly = poly({1: 1, k: -1}, order)        # x - x^k
    n_prime = poly({1: 1, k: -k}, order)       # x - k x^k
    # second derivative of the denominator root expression
    p_second = one_mx * (poly({}, order) - _weight_sum2(k, order)) + poly({1: 2}, order) * s1
    term1 = poly({k: -k * (k - 1)}, order) * p * p
    term2 = poly({}, order) - n_poly * p_second * p
    term3 = poly({}, order) - (poly({0: 2}, order) * n_prime * p * q)
    term4 = poly({0: 2}, order) * n_poly * q * q
    num = term1 + term2 + term3 + term4
    return num / (p * p * p) + series_B(k, order)


@lru_cache(maxsize=None)
def _moment_series(k: int, order: int):
    return series_A(k, order), series_B(k, order), series_C(k, order)


def _order_for(n: int) -> int:
    return max(64, n)


def exact_mean(k: int, n: int) -> Fraction:
    """Mean ones count over the length-n words, as an exact Fraction."""
    if n < 1:
        raise ValueError(f"mean requires n >= 1, got {n}")
    a, b, _ = _moment_series(k, _order_for(n))
    return b.coefficient(n) / a.coefficient(n)


def exact_variance(k: int, n: int) -> Fraction:
    """Variance of the ones count over the length-n words, exact."""
    if n < 1:
        raise ValueError(f"variance requires n >= 1, got {n}")
    a, _, c = _moment_series(k, _order_for(n))
    mean = exact_mean(k, n)
    return c.coefficient(n) / a.coefficient(n) - mean * mean


# -- bivariate cross-check ------------------------------------------------


def _bivariate_mul(a, b, n_max: int, m_max: int):
    out = [[_ZERO] * (m_max + 1) for _ in range(n_max + 1)]
    for i in range(n_max + 1):
        for j in range(m_max + 1):
            aij = a[i][j]
            if not aij:
                continue
            for p in range(n_max + 1 - i):
                for q in range(m_max + 1 - j):
                    if b[p][q]:
                        out[i + p][j + q] += aij * b[p][q]
    return out


def _bivariate_div(num, den, n_max: int, m_max: int):
    if den[0][0] == 0:
        raise DivisionByNonUnit("bivariate division needs a unit constant term")
    d00 = den[0][0]
    out = [[_ZERO] * (m_max + 1) for _ in range(n_max + 1)]
    for i in range(n_max + 1):
        for j in range(m_max + 1):
            acc = num[i][j]
            for p in range(i + 1):
                for q in range(j + 1):
                    if (p, q) != (0, 0) and den[p][q]:
                        acc -= out[i - p][j - q] * den[p][q]
            out[i][j] = acc / d00
    return out


def _bivariate_table(k: int, n_max: int, m_max: int):
    """Coefficients of the bivariate fixed-first-letter series.

    Starting from F(x, y) = (1 - (xy)^k) / (1 - x - xy + x^(k+1) y^k), the
    quantity (1 - x) F - 1 generates words that begin with 1 and avoid 1^k,
    with x marking length and y marking the ones count.
    """
    zero = [[_ZERO] * (m_max + 1) for _ in range(n_max + 1)]
    num = [row[:] for row in zero]
    num[0][0] = Fraction(1)
    if k <= n_max and k <= m_max:
        num[k][k] = Fraction(-1)
    den = [row[:] for row in zero]
    den[0][0] = Fraction(1)
    den[1][0] = Fraction(-1)
    den[1][1] += Fraction(-1)
    if k + 1 <= n_max and k <= m_max:
        den[k + 1][k] += Fraction(1)
    f = _bivariate_div(num, den, n_max, m_max)
    one_mx = [row[:] for row in zero]
    one_mx[0][0] = Fraction(1)
    if n_max >= 1:
        one_mx[1][0] = Fraction(-1)
    fixed = _bivariate_mul(one_mx, f, n_max, m_max)
    fixed[0][0] -= 1
    return fixed


def _count_words_direct(k: int, n_max: int, m_max: int):
    """Direct DFS count of words (first letter 1, no 1^k) by (length, ones)."""
    table = [[0] * (m_max + 1) for _ in range(n_max + 1)]

    def rec(n: int, pos: int, run: int, ones: int) -> None:
        if pos > n:
            if ones <= m_max:
                table[n][ones] += 1
            return
        rec(n, pos + 1, 0, ones)
        if run < k - 1:
            rec(n, pos + 1, run + 1, ones + 1)

    for n in range(1, n_max + 1):
        rec(n, 2, 1, 1)
    return table


def f_fix_bivariate_check(k: int, n_max: int, m_max: int) -> bool:
    """True iff the closed-form bivariate table matches direct enumeration."""
    closed = _bivariate_table(k, n_max, m_max)
    direct = _count_words_direct(k, n_max, m_max)
    for n in range(1, n_max + 1):
        for m in range(m_max + 1):
            if closed[n][m] != direct[n][m]:
                return False
    return True
