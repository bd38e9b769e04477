"""Coefficientwise checks of generating-function identities.

All comparisons are exact rational equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .exact_arith import (
    PowerSeries,
    factorial,
    series_exp,
    series_mul,
    series_reciprocal,
    series_sqrt,
)
from .sequences import g_by_sum
from .stirling import e_table_vertical


@dataclass(frozen=True)
class EgfCheckReport:
    identity: str
    orders_checked: int
    first_mismatch: tuple[int, Fraction, Fraction] | None = None

    @property
    def passed(self) -> bool:
        return self.first_mismatch is None


def _compare(identity, expected, got, orders):
    for j in range(orders + 1):
        if expected[j] != got[j]:
            return EgfCheckReport(identity, orders, (j, Fraction(expected[j]), Fraction(got[j])))
    return EgfCheckReport(identity, orders)


def block_series(sigma: int, order: int) -> PowerSeries:
    """y + y^2/2! + ... + y^(sigma+1)/(sigma+1)!, truncated at ``order``."""
    return PowerSeries([0] + [Fraction(1, factorial(j)) for j in range(1, sigma + 2)], order)


def egf_e_series(sigma: int, n: int, order: int) -> PowerSeries:
    """(block series)^n / n!, whose k-th coefficient times k! should be E_sigma(n, k)."""
    return block_series(sigma, order) ** n / factorial(n)


def check_egf_e(sigma: int, n: int, N: int | None = None) -> EgfCheckReport:
    """Exponential generating function of row n of the E triangle."""
    if sigma < 0 or n < 0:
        raise PreconditionError("sigma and n must be nonnegative")
    top = (sigma + 1) * n
    if N is None:
        N = top
    series = egf_e_series(sigma, n, N)
    table = e_table_vertical(sigma, n)
    orders = min(N, top)
    got = [series[k] * factorial(k) for k in range(orders + 1)]
    expected = [table[n, k] for k in range(orders + 1)]
    return _compare(f"egf-E-sigma{sigma}-n{n}", expected, got, orders)


def g1_closed_form_series(N: int) -> PowerSeries:
    """exp(1 - sqrt(1-2x)) / sqrt(1-2x) as a series to order N."""
    root = series_sqrt(PowerSeries([1, -2], N))
    return series_mul(series_exp(1 - root), series_reciprocal(root))


def check_egf_g1_closed_form(N: int) -> EgfCheckReport:
    if N < 2:
        raise PreconditionError("need N >= 2")
    series = g1_closed_form_series(N)
    g = g_by_sum(1, N).values
    got = [series[n] * factorial(n) for n in range(N + 1)]
    return _compare("egf-G1-closed-form", g, got, N)


def g_egf(values) -> PowerSeries:
    """sum a(n) x^n / n! built from a list of terms."""
    return PowerSeries([Fraction(v, factorial(n)) for n, v in enumerate(values)])


def check_g1_ode(N: int) -> EgfCheckReport:
    """f'' = 3 f' + 2x f'' + f for the EGF of G_1, through x^(N-2)."""
    if N < 3:
        raise PreconditionError("need N >= 3")
    f = g_egf(g_by_sum(1, N).values)
    d1 = f.derivative()
    d2 = d1.derivative()
    lhs = d2
    rhs = 3 * d1 + 2 * d2.shift() + f
    orders = min(lhs.order, rhs.order)
    return _compare("ode-G1", lhs, rhs, orders)
