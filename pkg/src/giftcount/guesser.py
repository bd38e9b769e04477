"""Guess polynomial-coefficient recurrences from raw terms.

For each candidate (order, degree), in increasing lexicographic order, the
unknown coefficients of C_0(n), ..., C_order(n) solve a homogeneous integer
linear system sum_i C_i(n) a(n-i) = 0 over a fitting window. The nullspace
is found by fraction-free elimination and each candidate is checked on
held-out terms before it is accepted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import PreconditionError
from .exact_arith import Polynomial
from .sequences import RecurrenceSpec


@dataclass(frozen=True)
class GuessQuery:
    terms: tuple[int, ...]
    max_order: int
    max_degree: int
    guard_terms: int = 0

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(int(t) for t in self.terms))
        if self.max_order < 1 or self.max_degree < 0 or self.guard_terms < 0:
            raise PreconditionError("need max_order >= 1, max_degree >= 0, guard_terms >= 0")
        need = self.required_terms(self.max_order, self.max_degree, self.guard_terms)
        if len(self.terms) < need:
            raise PreconditionError(
                f"insufficient terms: {len(self.terms)} given, {need} needed "
                f"for order {self.max_order}, degree {self.max_degree}, "
                f"{self.guard_terms} held out"
            )

    @staticmethod
    def required_terms(max_order: int, max_degree: int, guard_terms: int = 0) -> int:
        return (max_order + 1) * (max_degree + 1) + max_order + guard_terms

    @property
    def fitting_terms(self) -> tuple[int, ...]:
        return self.terms[: len(self.terms) - self.guard_terms]


def integer_nullspace(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Primitive integer basis of the right nullspace, one vector per free column.

    Gauss-Jordan elimination that only ever forms integer combinations
    ``p*row - a*pivot_row`` and divides rows by their content, so no
    fractions appear.
    """
    m = [list(r) for r in rows]
    pivots: list[tuple[int, int]] = []  # (row index, column)
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv_row = m[r]
        p = piv_row[c]
        for i in range(len(m)):
            if i == r or m[i][c] == 0:
                continue
            a = m[i][c]
            row = [p * x - a * y for x, y in zip(m[i], piv_row)]
            g = 0
            for x in row:
                g = math.gcd(g, x)
            if g > 1:
                row = [x // g for x in row]
            m[i] = row
        pivots.append((r, c))
        r += 1
        if r == len(m):
            break
    pivot_cols = {c for _, c in pivots}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        scale = 1
        for i, c in pivots:
            scale = math.lcm(scale, abs(m[i][c]))
        vec = [0] * ncols
        vec[f] = scale
        for i, c in pivots:
            vec[c] = -m[i][f] * scale // m[i][c]
        g = 0
        for x in vec:
            g = math.gcd(g, x)
        basis.append([x // g for x in vec])
    return basis


def _build_system(terms: Sequence[int], order: int, degree: int) -> list[list[int]]:
    rows = []
    for n in range(order, len(terms)):
        row = []
        for i in range(order + 1):
            a = terms[n - i]
            row.extend(a * n**j for j in range(degree + 1))
        rows.append(row)
    return rows


def _spec_from_vector(vec: list[int], order: int, degree: int) -> RecurrenceSpec | None:
    width = degree + 1
    polys = [Polynomial(vec[i * width : (i + 1) * width]) for i in range(order + 1)]
    lhs = polys[0]
    if lhs.is_zero():
        return None
    if lhs.leading_coefficient < 0:
        polys = [-p for p in polys]
        lhs = polys[0]
    roots = [r for r in lhs.integer_roots() if r >= order]
    valid_from = max(roots) + 1 if roots else order
    return RecurrenceSpec(
        f"guess-order{order}-degree{degree}",
        order,
        lhs,
        tuple(-p for p in polys[1:]),
        valid_from,
    )


def verify_spec_on_terms(spec: RecurrenceSpec, terms: Sequence[int]) -> int | None:
    """Index of the first n >= valid_from where the relation fails, else None."""
    if len(terms) <= spec.order:
        raise PreconditionError(f"need more than {spec.order} terms")
    for n in range(max(spec.valid_from, spec.order), len(terms)):
        if spec.residual(terms, n) != 0:
            return n
    return None


def guess_recurrence(q: GuessQuery) -> RecurrenceSpec | None:
    fit = q.fitting_terms
    for order in range(1, q.max_order + 1):
        for degree in range(q.max_degree + 1):
            rows = _build_system(fit, order, degree)
            ncols = (order + 1) * (degree + 1)
            for vec in integer_nullspace(rows, ncols):
                spec = _spec_from_vector(vec, order, degree)
                if spec is not None and verify_spec_on_terms(spec, q.terms) is None:
                    return spec
    return None
