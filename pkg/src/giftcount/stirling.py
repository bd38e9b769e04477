"""Restricted Stirling numbers E_sigma(n, k).

E_sigma(n, k) counts partitions of {1..k} into exactly n blocks, each of
size at most sigma+1. It is computed here four independent ways (vertical
recurrence, multinomial sum, Miller's power recurrence, and for sigma = 1, 2
closed forms and terminating hypergeometric series). Every function returns
0 outside n <= k <= (sigma+1)n, negative arguments included.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _guards
from .errors import InconsistencyError, PreconditionError
from .exact_arith import binomial, factorial


def in_support(sigma: int, n: int, k: int) -> bool:
    return n >= 0 and k >= 0 and n <= k <= (sigma + 1) * n


def _as_natural(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value < 0:
        raise InconsistencyError(f"{what} produced non-natural value {value}")
    return int(value)


class ETable:
    """Dense triangle of E_sigma(n, k) for 0 <= n <= max_n.

    Index with ``table[n, k]``; anything outside the stored support reads
    as 0.
    """

    __slots__ = ("sigma", "max_n", "_rows")

    def __init__(self, sigma: int, max_n: int, rows: Sequence[Sequence[int]]):
        self.sigma = sigma
        self.max_n = max_n
        self._rows = tuple(tuple(r) for r in rows)

    def __getitem__(self, index: tuple[int, int]) -> int:
        n, k = index
        if not (0 <= n <= self.max_n) or not in_support(self.sigma, n, k):
            return 0
        return self._rows[n][k]

    def row(self, n: int) -> tuple[int, ...]:
        """E_sigma(n, k) for k = n .. (sigma+1)n."""
        return tuple(self[n, k] for k in range(n, (self.sigma + 1) * n + 1))

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self._rows]

    def __repr__(self):
        return f"ETable(sigma={self.sigma}, max_n={self.max_n})"


def e_table_vertical(sigma: int, max_n: int, *, max_cells: int | None = None) -> ETable:
    """Fill the triangle by removing the block that contains k.

    If that block has i+1 elements there are C(k-1, i) ways to pick its
    other members, leaving a partition of k-1-i elements into n-1 blocks.
    """
    if sigma < 0 or max_n < 0:
        raise PreconditionError("sigma and max_n must be nonnegative")
    _guards.check("table_cells", max(sigma, 1) * max_n * max_n, max_cells)
    width = (sigma + 1) * max_n + 1
    rows = [[0] * width for _ in range(max_n + 1)]
    rows[0][0] = 1
    for n in range(1, max_n + 1):
        prev = rows[n - 1]
        cur = rows[n]
        cur[n] = 1
        for k in range(n + 1, (sigma + 1) * n + 1):
            total = 0
            for i in range(min(sigma, k - n) + 1):
                total += binomial(k - 1, i) * prev[k - 1 - i]
            cur[k] = total
    return ETable(sigma, max_n, rows)


def _block_count_tuples(sigma: int, n: int, k: int):
    """(nu_1, ..., nu_{sigma+1}) with sum nu_i = n and sum i*nu_i = k."""
    out = []

    def walk(size, left_n, left_k, acc):
        if size == 1:
            if left_n == left_k:
                out.append((left_n,) + tuple(reversed(acc)))
            return
        for nu in range(min(left_n, left_k // size) + 1):
            # every remaining block has size >= 1
            if left_k - size * nu >= left_n - nu:
                walk(size - 1, left_n - nu, left_k - size * nu, acc + [nu])

    walk(sigma + 1, n, k, [])
    return out


def e_multinomial(sigma: int, n: int, k: int) -> int:
    """Sum over block-size profiles of k! / (prod nu_i! * prod (i!)^nu_i)."""
    if sigma < 0:
        raise PreconditionError("sigma must be nonnegative")
    if not in_support(sigma, n, k):
        return 0
    kf = factorial(k)
    total = 0
    for nus in _block_count_tuples(sigma, n, k):
        den = 1
        for i, nu in enumerate(nus, start=1):
            den *= factorial(nu) * factorial(i) ** nu
        q, r = divmod(kf, den)
        if r:
            raise InconsistencyError(f"multinomial term {kf}/{den} is not integral")
        total += q
    return total


def e_miller(sigma: int, n: int, k: int) -> int:
    """E_sigma(n, k) by Miller's recurrence for powers of a polynomial.

    Runs k upward from n, carrying exact rationals, and insists the result
    is a natural number.
    """
    if sigma < 1:
        raise PreconditionError("e_miller needs sigma >= 1")
    if not in_support(sigma, n, k):
        return 0
    values = {n: Fraction(1)}
    for kk in range(n + 1, k + 1):
        acc = Fraction(0)
        for i in range(1, min(sigma, kk - n) + 1):
            acc += Fraction((n + 1) * i - kk + n, factorial(i + 1) * factorial(kk - i)) * values[kk - i]
        values[kk] = acc * Fraction(factorial(kk), kk - n)
    return _as_natural(values[k], f"e_miller({sigma}, {n}, {k})")


def e1_closed(n: int, k: int) -> int:
    """E_1(n, k) = k! / ((2n-k)! (k-n)! 2^(k-n))."""
    if not in_support(1, n, k):
        return 0
    q, r = divmod(factorial(k), factorial(2 * n - k) * factorial(k - n) * 2 ** (k - n))
    if r:
        raise InconsistencyError(f"e1_closed({n}, {k}) is not integral")
    return q


def e2_sum(n: int, k: int) -> int:
    """E_2(n, k) as a single sum over c, the number of 3-element blocks."""
    if not in_support(2, n, k):
        return 0
    eta = k - n
    kf = factorial(k)
    total = 0
    for c in range(max(0, eta - n), eta // 2 + 1):
        den = factorial(n - eta + c) * factorial(eta - 2 * c) * factorial(c) * 2 ** (eta - c) * 3**c
        q, r = divmod(kf, den)
        if r:
            raise InconsistencyError(f"e2_sum term {kf}/{den} is not integral")
        total += q
    return total


# -- terminating hypergeometric series ---------------------------------------


def _nonpositive_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


@dataclass(frozen=True)
class HypSpec:
    """Parameters of pFq(upper; lower; argument) that terminates."""

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    argument: Fraction

    def __init__(self, upper, lower, argument):
        object.__setattr__(self, "upper", tuple(Fraction(u) for u in upper))
        object.__setattr__(self, "lower", tuple(Fraction(b) for b in lower))
        object.__setattr__(self, "argument", Fraction(argument))
        if not any(_nonpositive_integer(u) for u in self.upper):
            raise PreconditionError(f"series does not terminate: upper={self.upper}")

    @property
    def length(self) -> int:
        """Index of the first vanishing term."""
        return min(-int(u) for u in self.upper if _nonpositive_integer(u)) + 1


def hyp_terminating(spec: HypSpec) -> Fraction:
    """Sum the series term by term until an upper Pochhammer factor hits zero."""
    total = Fraction(0)
    term = Fraction(1)
    m = 0
    while True:
        total += term
        num = Fraction(1)
        for u in spec.upper:
            num *= u + m
        if num == 0:
            return total
        den = Fraction(m + 1)
        for b in spec.lower:
            if b + m == 0:
                raise PreconditionError(f"lower parameter {b} gives a zero denominator at term {m + 1}")
            den *= b + m
        term = term * num * spec.argument / den
        m += 1


def hyp_2f0(a, b, z) -> Fraction:
    return hyp_terminating(HypSpec((a, b), (), z))


def _e2_hyp_low(n: int, eta: int) -> Fraction:
    # eta <= n
    pre = Fraction(factorial(n + eta), factorial(eta) * factorial(n - eta) * 2**eta)
    spec = HypSpec((Fraction(-eta, 2), Fraction(-eta + 1, 2)), (n - eta + 1,), Fraction(8, 3))
    return pre * hyp_terminating(spec)


def _e2_hyp_high(n: int, eta: int) -> Fraction:
    # eta >= n
    pre = Fraction(factorial(n + eta), factorial(2 * n - eta) * factorial(eta - n) * 2**n * 3 ** (eta - n))
    spec = HypSpec(
        (Fraction(eta, 2) - n, Fraction(eta + 1, 2) - n), (eta - n + 1,), Fraction(8, 3)
    )
    return pre * hyp_terminating(spec)


def e2_hypergeometric(n: int, k: int, *, branch: str | None = None) -> int:
    """E_2(n, k) as a rational prefactor times a terminating 2F1 at 8/3.

    The low branch covers k - n <= n and the high branch k - n >= n; at
    k = 2n either may be forced with ``branch='low'`` or ``'high'``.
    """
    if not in_support(2, n, k):
        return 0
    eta = k - n
    if branch is None:
        branch = "low" if eta <= n else "high"
    if branch == "low":
        if eta > n:
            raise PreconditionError("low branch needs k - n <= n")
        value = _e2_hyp_low(n, eta)
    elif branch == "high":
        if eta < n:
            raise PreconditionError("high branch needs k - n >= n")
        value = _e2_hyp_high(n, eta)
    else:
        raise PreconditionError(f"unknown branch {branch!r}")
    return _as_natural(value, f"e2_hypergeometric({n}, {k})")


# -- identity checks -----------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    identity: str
    n: int
    k: int
    expected: Fraction
    got: Fraction


def _e1_identities(E):
    # (name, first n at which the identity holds for every k, rhs)
    return [
        ("E1-add-pair", 1, lambda n, k: E(n - 1, k - 1) + (k - 1) * E(n - 1, k - 2)),
        ("E1-two-step", 2, lambda n, k: (2 * n - 1) * E(n - 1, k - 2) + E(n - 2, k - 2)),
    ]


def _e2_identities(E):
    def rhs(n, k):
        return (
            Fraction(9 * n * n - 9 * n + 2, 2) * E(n - 1, k - 3)
            - Fraction(5, 2) * E(n - 1, k - 1)
            + Fraction(9 * n * n - 36 * n + 35, 2) * E(n - 2, k - 4)
            + 6 * (n - 1) * E(n - 2, k - 3)
            - Fraction(3, 2) * E(n - 2, k - 2)
            + 3 * (2 * n - 5) * E(n - 3, k - 4)
            + Fraction(5, 2) * E(n - 3, k - 3)
            + Fraction(5, 2) * E(n - 4, k - 4)
        )

    return [("E2-eight-term", 4, rhs)]


def validate_e_identities(sigma: int, max_n: int, table: ETable | None = None) -> list[Violation]:
    """Check the known E-level recurrences on every cell up to max_n.

    Cells outside the support are checked too (both sides must vanish).
    Each identity is checked from the first n where it is valid for all k.
    """
    if sigma not in (1, 2):
        raise PreconditionError("identities are known only for sigma in {1, 2}")
    if table is None or table.max_n < max_n or table.sigma != sigma:
        table = e_table_vertical(sigma, max_n)

    def E(n, k):
        return table[n, k]

    identities = _e1_identities(E) if sigma == 1 else _e2_identities(E)
    out = []
    for name, start, rhs in identities:
        for n in range(start, max_n + 1):
            for k in range(0, (sigma + 1) * max_n + 2):
                got = rhs(n, k)
                if got != E(n, k):
                    out.append(Violation(name, n, k, Fraction(E(n, k)), Fraction(got)))
    return out
