"""Exact arithmetic substrate: integers, rationals, polynomials in ``n``,
and truncated formal power series.

Natural numbers are plain Python ``int`` and rationals are
:class:`fractions.Fraction` (always reduced, denominator positive). The two
custom types here are :class:`Polynomial` and :class:`PowerSeries`, both
immutable.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import PreconditionError

__all__ = [
    "Fraction",
    "Polynomial",
    "PowerSeries",
    "N",
    "binomial",
    "factorial",
    "poly_eval",
    "series_exp",
    "series_mul",
    "series_reciprocal",
    "series_sqrt",
]


def factorial(k: int) -> int:
    if k < 0:
        raise PreconditionError(f"factorial of negative number {k}")
    return math.factorial(k)


def binomial(k: int, i: int) -> int:
    """C(k, i), zero when ``i > k`` or either argument is negative."""
    if k < 0 or i < 0:
        return 0
    return math.comb(k, i)


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Polynomial:
    """Univariate polynomial with rational coefficients.

    ``coefficients[j]`` multiplies ``n**j``. Trailing zeros are stripped, so
    the zero polynomial has an empty coefficient tuple and structural
    equality is polynomial equality.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable = ()):
        coeffs = [_as_fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def __call__(self, n) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * n + c
        return acc

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coefficients, other.coefficients
        size = max(len(a), len(b))
        return Polynomial(
            (a[j] if j < len(a) else 0) + (b[j] if j < len(b) else 0) for j in range(size)
        )

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coefficients)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        d = _as_fraction(other)
        return Polynomial(c / d for c in self.coefficients)

    def __pow__(self, e: int):
        if e < 0:
            raise PreconditionError("negative polynomial power")
        result = Polynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def integer_roots(self) -> list[int]:
        """All integer roots, ascending.

        Uses the Cauchy bound ``|r| <= 1 + max|a_j / a_d|`` and scans the
        integers inside it, so the answer is exact and complete.
        """
        if self.is_zero():
            raise PreconditionError("the zero polynomial has every integer as a root")
        lead = self.leading_coefficient
        bound = 1 + max((abs(c / lead) for c in self.coefficients[:-1]), default=0)
        b = math.floor(bound)
        return [r for r in range(-b, b + 1) if self(r) == 0]

    def content_scaled(self) -> tuple[int, ...]:
        """Integer coefficients of ``lcm(denominators) * self``."""
        den = 1
        for c in self.coefficients:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return tuple(int(c * den) for c in self.coefficients)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coefficients]})"

    def __str__(self):
        return format_polynomial(self)


def format_polynomial(p: Polynomial, var: str = "n") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for j in range(p.degree, -1, -1):
        c = p.coefficients[j]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if j == 0:
            body = str(mag)
        else:
            mono = var if j == 1 else f"{var}^{j}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


#: The polynomial ``n`` itself; lets recurrences be written as ``9*N**2 - 9*N - 3``.
N = Polynomial([0, 1])


def poly_eval(p: Polynomial, n) -> Fraction:
    return p(n)


class PowerSeries:
    """Formal power series truncated after ``x**order``.

    Holds exactly ``order + 1`` rational coefficients. Binary operations on
    series with different orders truncate to the smaller order.
    """

    __slots__ = ("order", "coefficients")

    def __init__(self, coefficients: Sequence, order: int | None = None):
        coeffs = [_as_fraction(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise PreconditionError("truncation order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    @classmethod
    def one(cls, order: int) -> PowerSeries:
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> PowerSeries:
        return cls([0, 1], order)

    def __getitem__(self, j: int) -> Fraction:
        return self.coefficients[j]

    def __len__(self):
        return len(self.coefficients)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.order, self.coefficients))

    def __repr__(self):
        return f"PowerSeries({[str(c) for c in self.coefficients]}, order={self.order})"

    def _coerce(self, other):
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return PowerSeries([other], self.order)
        return NotImplemented

    def truncate(self, order: int) -> PowerSeries:
        return PowerSeries(self.coefficients, min(order, self.order))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        return PowerSeries([self[j] + other[j] for j in range(order + 1)], order)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coefficients], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries([c * other for c in self.coefficients], self.order)
        if isinstance(other, PowerSeries):
            return series_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries([c / other for c in self.coefficients], self.order)
        if isinstance(other, PowerSeries):
            return series_mul(self, series_reciprocal(other))
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            return series_reciprocal(self) ** (-e)
        result = PowerSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = series_mul(result, base)
            base = series_mul(base, base)
            e >>= 1
        return result

    def derivative(self) -> PowerSeries:
        """Term-by-term derivative; the result is known one order less."""
        if self.order == 0:
            return PowerSeries([0], 0)
        return PowerSeries(
            [j * self[j] for j in range(1, self.order + 1)], self.order - 1
        )

    def shift(self, by: int = 1) -> PowerSeries:
        """Multiply by ``x**by``; the result is known ``by`` orders further."""
        return PowerSeries([0] * by + list(self.coefficients), self.order + by)


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    order = min(a.order, b.order)
    out = [Fraction(0)] * (order + 1)
    for i in range(order + 1):
        ai = a[i]
        if ai:
            for j in range(order + 1 - i):
                out[i + j] += ai * b[j]
    return PowerSeries(out, order)


def series_exp(a: PowerSeries) -> PowerSeries:
    """exp(a) for a series with zero constant term.

    From f' = a' f:  m f_m = sum_{j=1..m} j a_j f_{m-j}.
    """
    if a[0] != 0:
        raise PreconditionError("series_exp needs a zero constant term")
    order = a.order
    f = [Fraction(1)] + [Fraction(0)] * order
    for m in range(1, order + 1):
        s = sum((j * a[j] * f[m - j] for j in range(1, m + 1) if a[j]), Fraction(0))
        f[m] = s / m
    return PowerSeries(f, order)


def series_sqrt(a: PowerSeries) -> PowerSeries:
    """The square root with constant term 1 of a series with constant term 1."""
    if a[0] != 1:
        raise PreconditionError("series_sqrt needs constant term 1")
    order = a.order
    s = [Fraction(1)] + [Fraction(0)] * order
    for m in range(1, order + 1):
        cross = sum((s[j] * s[m - j] for j in range(1, m)), Fraction(0))
        s[m] = (a[m] - cross) / 2
    return PowerSeries(s, order)


def series_reciprocal(a: PowerSeries) -> PowerSeries:
    if a[0] == 0:
        raise PreconditionError("series_reciprocal needs a nonzero constant term")
    order = a.order
    inv0 = 1 / a[0]
    r = [inv0] + [Fraction(0)] * order
    for m in range(1, order + 1):
        s = sum((a[j] * r[m - j] for j in range(1, m + 1) if a[j]), Fraction(0))
        r[m] = -s * inv0
    return PowerSeries(r, order)
