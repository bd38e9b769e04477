"""The normalized playout counts G_sigma(n).

G_sigma(n) is the number of games with n+1 gifts when the pool is emptied
in a fixed order, and equals sum_k E_sigma(n, k). This module computes it by
summation, by a multinomial sum, and by the factorial-moment expansion,
and evaluates the known polynomial-coefficient recurrences (unit leading
coefficient "Type C" and minimal order "Type D") with a generic engine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from . import _guards
from .errors import InconsistencyError, PreconditionError, SingularityError
from .exact_arith import N, Polynomial, factorial
from .stirling import e_table_vertical

#: Working precision for decimal output; callers are promised >= 30 digits.
DECIMAL_PRECISION = 60

#: sigma values with stored Type C and Type D recurrences.
RECURRENCE_SIGMAS = range(1, 5)


@dataclass(frozen=True)
class SequenceRun:
    """Terms G_sigma(0..nmax) together with the method that produced them."""

    sigma: int | None
    values: tuple[int, ...]
    method: str

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.method:
            raise PreconditionError("a SequenceRun needs a method tag")
        if self.sigma is not None and self.values:
            if self.values[0] != 1:
                raise InconsistencyError(f"G({self.sigma})(0) = {self.values[0]}, expected 1")
            if len(self.values) > 1 and self.values[1] != self.sigma + 1:
                raise InconsistencyError(
                    f"G({self.sigma})(1) = {self.values[1]}, expected {self.sigma + 1}"
                )

    @property
    def nmax(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)


def g_by_sum(sigma: int, nmax: int, *, max_cells: int | None = None) -> SequenceRun:
    """Row sums of the E_sigma triangle."""
    if sigma < 0 or nmax < 0:
        raise PreconditionError("sigma and nmax must be nonnegative")
    table = e_table_vertical(sigma, nmax, max_cells=max_cells)
    return SequenceRun(sigma, table.row_sums(), "sum")


def g_multinomial(sigma: int, n: int, *, limit: int | None = None) -> int:
    """(1/n!) * sum over (i_1..i_n) in [1, sigma+1]^n of multinomial(i_1+..+i_n; i_1..i_n).

    Brute force over all (sigma+1)^n tuples.
    """
    if sigma < 0 or n < 0:
        raise PreconditionError("sigma and n must be nonnegative")
    _guards.check("multinomial_n", n, limit)
    fact = [factorial(i) for i in range((sigma + 1) * n + 1)]
    total = 0
    for sizes in itertools.product(range(1, sigma + 2), repeat=n):
        den = 1
        for s in sizes:
            den *= fact[s]
        total += fact[sum(sizes)] // den
    q, r = divmod(total, fact[n])
    if r:
        raise InconsistencyError(f"multinomial sum {total} not divisible by {n}!")
    return q


def block_power_coefficients(sigma: int, n: int) -> list[Fraction]:
    """Coefficients c_k of (y + y^2/2! + ... + y^(sigma+1)/(sigma+1)!)^n."""
    base = Polynomial([0] + [Fraction(1, factorial(j)) for j in range(1, sigma + 2)])
    return list((base**n).coefficients) or [Fraction(0)]


def g_moments(sigma: int, n: int) -> int:
    """Replace y^k by k! in the expanded n-th power and divide by n!."""
    if sigma < 1:
        raise PreconditionError("g_moments needs sigma >= 1")
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    coeffs = block_power_coefficients(sigma, n)
    total = sum((c * factorial(k) for k, c in enumerate(coeffs)), Fraction(0))
    value = total / factorial(n)
    if value.denominator != 1:
        raise InconsistencyError(f"g_moments({sigma}, {n}) = {value} is not an integer")
    return int(value)


# -- recurrences ---------------------------------------------------------------


def _first_clear_start(lhs: Polynomial, lowest: int) -> int:
    """Smallest n >= lowest beyond every integer root of lhs."""
    roots = [r for r in lhs.integer_roots() if r >= lowest]
    return max(roots) + 1 if roots else lowest


@dataclass(frozen=True)
class RecurrenceSpec:
    """lhs(n) * a(n) = sum_{i=1..order} rhs[i-1](n) * a(n-i), asserted for n >= valid_from."""

    name: str
    order: int
    lhs_coeff: Polynomial
    rhs_coeffs: tuple[Polynomial, ...]
    valid_from: int
    sigma: int | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "rhs_coeffs", tuple(self.rhs_coeffs))
        if self.order < 1:
            raise PreconditionError("recurrence order must be >= 1")
        if len(self.rhs_coeffs) != self.order:
            raise PreconditionError(
                f"{self.name}: {len(self.rhs_coeffs)} rhs coefficients for order {self.order}"
            )
        if self.lhs_coeff.is_zero():
            raise PreconditionError(f"{self.name}: zero leading coefficient")
        bad = [r for r in self.lhs_coeff.integer_roots() if r >= self.valid_from]
        if bad:
            raise PreconditionError(
                f"{self.name}: leading coefficient vanishes at n = {bad[0]} >= valid_from"
            )

    def residual(self, terms: Sequence[int], n: int) -> Fraction:
        """lhs(n)*a(n) - sum rhs_i(n)*a(n-i)."""
        acc = self.lhs_coeff(n) * terms[n]
        for i, c in enumerate(self.rhs_coeffs, start=1):
            acc -= c(n) * terms[n - i]
        return acc

    def polynomials(self) -> list[Polynomial]:
        """Homogeneous coefficients C_0..C_order with sum C_i(n) a(n-i) = 0."""
        return [self.lhs_coeff] + [-c for c in self.rhs_coeffs]

    def equation(self) -> str:
        """Human-readable homogeneous form, e.g. ``a(n) - a(n-1) = 0``."""
        pieces = []
        for i, c in enumerate(self.polynomials()):
            if c.is_zero():
                continue
            term = "a(n)" if i == 0 else f"a(n-{i})"
            if c.degree == 0:
                mag = abs(c.leading_coefficient)
                sign = "-" if c.leading_coefficient < 0 else "+"
                body = term if mag == 1 else f"{mag}*{term}"
            else:
                lead = c.leading_coefficient
                sign = "-" if lead < 0 else "+"
                shown = -c if lead < 0 else c
                body = f"({shown})*{term}"
            pieces.append((sign, body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text + " = 0"


def _spec(name, sigma, lhs, rhs, valid_from=None, lowest=None):
    lhs = lhs if isinstance(lhs, Polynomial) else Polynomial.constant(lhs)
    rhs = [c if isinstance(c, Polynomial) else Polynomial.constant(c) for c in rhs]
    if valid_from is None:
        valid_from = _first_clear_start(lhs, lowest)
    return RecurrenceSpec(name, len(rhs), lhs, tuple(rhs), valid_from, sigma)


def _type_c_1():
    return _spec("TypeC-sigma1", 1, 1, [2 * N - 1, 1], valid_from=2)


def _type_c_2():
    return _spec(
        "TypeC-sigma2",
        2,
        1,
        [
            (9 * N**2 - 9 * N - 3) / 2,
            (9 * N**2 - 24 * N + 20) / 2,
            6 * N - Fraction(25, 2),
            Fraction(5, 2),
        ],
        valid_from=4,
    )


def _type_c_3():
    F = Fraction
    return _spec(
        "TypeC-sigma3",
        3,
        1,
        [
            F(32, 3) * N**3 - 16 * N**2 + F(10, 3) * N - F(49, 6),
            48 * N**3 - 236 * N**2 + F(1157, 3) * N - F(650, 3),
            (80 * N**3 - 382 * N**2 + 641 * N - 511) / 3,
            F(64, 3) * N**3 - 218 * N**2 + F(2696, 3) * N - F(7915, 6),
            56 * N**2 - 490 * N + F(6853, 6),
            56 * N - F(1703, 6),
            F(58, 3),
        ],
        valid_from=7,
    )


def _type_c_4():
    return _spec(
        "TypeC-sigma4",
        4,
        1,
        [
            (625 * N**4 - 1250 * N**3 + 625 * N**2 - 300 * N - 543) / 24,
            (27500 * N**4 - 184000 * N**3 + 447500 * N**2 - 473075 * N + 180003) / 72,
            (336875 * N**4 - 2546500 * N**3 + 7679675 * N**2 - 12016800 * N + 8048577) / 864,
            (4833125 * N**4 - 77581625 * N**3 + 476892700 * N**2 - 1304291160 * N + 1325759504) / 2592,
            (1700625 * N**4 + 28316750 * N**3 - 605973450 * N**2 + 3123850885 * N - 5033477363) / 7776,
            (2670000 * N**4 - 64380500 * N**3 + 704577200 * N**2 - 3610058445 * N + 6818722190) / 7776,
            (2002500 * N**4 - 51976000 * N**3 + 517392050 * N**2 - 2252744530 * N + 3561765885) / 7776,
            (9078000 * N**3 - 209915400 * N**2 + 1640828980 * N - 4301927039) / 7776,
            (5393400 * N**2 - 91413680 * N + 390747263) / 2592,
            (1593990 * N - 14522219) / 972,
            Fraction(310343, 648),
        ],
        valid_from=11,
    )


def _type_d_1():
    spec = _type_c_1()
    return RecurrenceSpec("TypeD-sigma1", spec.order, spec.lhs_coeff, spec.rhs_coeffs, spec.valid_from, 1)


def _type_d_2():
    return _spec(
        "TypeD-sigma2",
        2,
        N - 2,
        [
            N * (9 * N**2 - 27 * N + 17) / 2,
            6 * N**2 - 15 * N + Fraction(13, 2),
            (5 * N - 5) / 2,
        ],
        valid_from=3,
    )


def _type_d_3():
    return _spec(
        "TypeD-sigma3",
        3,
        3 * (64 * N**3 - 360 * N**2 + 762 * N - 547),
        [
            2048 * N**6 - 14592 * N**5 + 42304 * N**4 - 58384 * N**3 + 36972 * N**2 - 10888 * N + 2381,
            5376 * N**5 - 35616 * N**4 + 92200 * N**3 - 110788 * N**2 + 54186 * N - 5365,
            5376 * N**4 - 27552 * N**3 + 52616 * N**2 - 45620 * N + 10514,
            1856 * N**3 - 4872 * N**2 + 6786 * N - 2349,
        ],
        lowest=4,
    )


def _type_d_4():
    return _spec(
        "TypeD-sigma4",
        4,
        72
        * (
            16687500 * N**6 - 209150000 * N**5 + 1070031875 * N**4 - 3019737375 * N**3
            + 4945130775 * N**2 - 4329975510 * N + 1513065336
        ),
        [
            31289062500 * N**10 - 454734375000 * N**9 + 2821911328125 * N**8 - 10081802109375 * N**7
            + 22781118187500 * N**6 - 33185759803125 * N**5 + 30632133843750 * N**4
            - 17235043672875 * N**3 + 5483042423925 * N**2 - 700627863570 * N - 57348303408,
            141843750000 * N**9 - 1990540625000 * N**8 + 11724386562500 * N**7 - 39078979093750 * N**6
            + 81505745228125 * N**5 - 107513140175625 * N**4 + 84513872351000 * N**3
            - 33225357802500 * N**2 + 2737777538500 * N + 1197797898465,
            252815625000 * N**8 - 3168622500000 * N**7 + 16127100406250 * N**6 - 45548278450000 * N**5
            + 80090937641250 * N**4 - 86115353337125 * N**3 + 47445915625400 * N**2
            - 6693899844450 * N - 2609871946015,
            199248750000 * N**7 - 1999129125000 * N**6 + 7757225837500 * N**5 - 16990061751250 * N**4
            + 23960112482875 * N**3 - 17664322875275 * N**2 + 4396729093865 * N + 802753105180,
            58189312500 * N**6 - 380170175000 * N**5 + 957510585625 * N**4 - 1734293884125 * N**3
            + 1621184408800 * N**2 - 573345040895 * N - 48634580313,
        ],
        lowest=5,
    )


_BUILDERS = {
    ("C", 1): _type_c_1,
    ("C", 2): _type_c_2,
    ("C", 3): _type_c_3,
    ("C", 4): _type_c_4,
    ("D", 1): _type_d_1,
    ("D", 2): _type_d_2,
    ("D", 3): _type_d_3,
    ("D", 4): _type_d_4,
}


def builtin_recurrences() -> list[RecurrenceSpec]:
    """The eight stored recurrences, Type C for sigma 1..4 then Type D for sigma 1..4."""
    return [build() for build in _BUILDERS.values()]


def builtin_recurrence(kind: str, sigma: int) -> RecurrenceSpec:
    """Look up one stored recurrence; ``kind`` is 'C'/'typec' or 'D'/'typed'."""
    key = kind.upper().removeprefix("TYPE")
    try:
        return _BUILDERS[(key, sigma)]()
    except KeyError:
        raise PreconditionError(f"no stored Type {kind} recurrence for sigma = {sigma}") from None


def run_recurrence(spec: RecurrenceSpec, initial: Sequence[int], nmax: int) -> SequenceRun:
    """Extend ``initial`` to n = nmax with exact division by the leading coefficient."""
    if len(initial) < spec.valid_from:
        raise PreconditionError(
            f"{spec.name} needs {spec.valid_from} initial terms, got {len(initial)}"
        )
    values = [int(v) for v in initial[: nmax + 1]]
    for n in range(len(values), nmax + 1):
        lead = spec.lhs_coeff(n)
        if lead == 0:
            raise SingularityError(f"{spec.name}: leading coefficient vanishes at n = {n}")
        acc = Fraction(0)
        for i, c in enumerate(spec.rhs_coeffs, start=1):
            acc += c(n) * values[n - i]
        value = acc / lead
        if value.denominator != 1 or value < 0:
            raise InconsistencyError(f"{spec.name}: term n = {n} came out as {value}")
        values.append(int(value))
    return SequenceRun(spec.sigma, values, spec.name)


def g_by_recurrence(kind: str, sigma: int, nmax: int) -> SequenceRun:
    """Run a stored recurrence from initial terms generated by :func:`g_by_sum`."""
    spec = builtin_recurrence(kind, sigma)
    initial = g_by_sum(sigma, min(nmax, spec.valid_from - 1)).values
    return run_recurrence(spec, initial, nmax)


# -- Bessel polynomials and asymptotics ---------------------------------------


def bessel_y(n: int, z) -> Fraction:
    """y_n(z) = sum_{i=0..n} (n+i)! z^i / ((n-i)! i! 2^i)."""
    if n < 0:
        raise PreconditionError("Bessel polynomial index must be nonnegative")
    z = Fraction(z)
    return sum(
        (Fraction(factorial(n + i), factorial(n - i) * factorial(i) * 2**i) * z**i for i in range(n + 1)),
        Fraction(0),
    )


def _fraction_to_decimal(x: Fraction) -> Decimal:
    return Decimal(x.numerator) / Decimal(x.denominator)


def leading_growth(sigma: int, n: int) -> Fraction:
    """((sigma+1)n)! / (n! ((sigma+1)!)^n), the growth term without the factor e."""
    s1 = sigma + 1
    return Fraction(factorial(s1 * n), factorial(n) * factorial(s1) ** n)


def asymptotic_ratio(sigma: int, n: int, values: SequenceRun | Sequence[int]) -> Decimal:
    """G_sigma(n) / (e * ((sigma+1)n)! / (n! ((sigma+1)!)^n)), as a Decimal."""
    if n >= len(values):
        raise PreconditionError(f"n = {n} beyond the supplied terms")
    with localcontext() as ctx:
        ctx.prec = DECIMAL_PRECISION
        exact = Fraction(values[n]) / leading_growth(sigma, n)
        return _fraction_to_decimal(exact) / Decimal(1).exp()


def sigma2_correction(n: int) -> Fraction:
    """1 + 1/(3n) + 1/(54n^2) - 8/(81n^3)."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    return 1 + Fraction(1, 3 * n) + Fraction(1, 54 * n * n) - Fraction(8, 81 * n**3)


def asymptotic_sigma2(n: int) -> Decimal:
    """Four-term asymptotic estimate of G_2(n)."""
    with localcontext() as ctx:
        ctx.prec = DECIMAL_PRECISION
        exact = leading_growth(2, n) * sigma2_correction(n)
        return _fraction_to_decimal(exact) * Decimal(1).exp()


def relative_error(actual: int, estimate: Decimal) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = DECIMAL_PRECISION
        return abs(Decimal(actual) / estimate - 1)


def bit_length(values: Sequence[int]) -> int:
    return max((v.bit_length() for v in values), default=0)


__all__ = [
    "RECURRENCE_SIGMAS",
    "RecurrenceSpec",
    "SequenceRun",
    "asymptotic_ratio",
    "asymptotic_sigma2",
    "bessel_y",
    "bit_length",
    "block_power_coefficients",
    "builtin_recurrence",
    "builtin_recurrences",
    "g_by_recurrence",
    "g_by_sum",
    "g_moments",
    "g_multinomial",
    "leading_growth",
    "relative_error",
    "run_recurrence",
    "sigma2_correction",
]
