"""Acceptance criteria 1-11, one test per criterion.

Run ``pytest tests/test_acceptance.py`` and read the "acceptance criteria"
section of the summary for one PASS/FAIL line per criterion.
"""

import time
from decimal import Decimal, localcontext
from fractions import Fraction

import pytest

from giftcount import cli
from giftcount.cli import main
from giftcount.genfun import check_egf_e, check_egf_g1_closed_form, check_g1_ode
from giftcount.guesser import GuessQuery, guess_recurrence, verify_spec_on_terms
from giftcount.exact_arith import N, Polynomial, factorial
from giftcount.oracle import (
    GameConfig,
    count_full_game_playouts,
    count_gamma_sequences,
    count_restricted_partitions,
    iter_gamma_sequences,
    iter_restricted_partitions,
)
from giftcount.sequences import (
    asymptotic_ratio,
    asymptotic_sigma2,
    builtin_recurrence,
    g_by_recurrence,
    g_by_sum,
    relative_error,
)
from giftcount.stirling import (
    e1_closed,
    e2_hypergeometric,
    e2_sum,
    e_miller,
    e_multinomial,
    e_table_vertical,
    hyp_2f0,
)


class Timer:
    def __init__(self, budget):
        self.budget = budget

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.budget, f"took {self.elapsed:.2f}s, budget {self.budget}s"


def all_e_methods(sigma, n, k, table):
    values = {"table": table[n, k], "multinomial": e_multinomial(sigma, n, k)}
    if sigma >= 1:
        values["miller"] = e_miller(sigma, n, k)
    if sigma == 1:
        values["closed"] = e1_closed(n, k)
    if sigma == 2:
        values["e2-sum"] = e2_sum(n, k)
        values["e2-hypergeometric"] = e2_hypergeometric(n, k)
    return values


@pytest.mark.criterion(1, "sigma=1 values, 3-gift game, gamma-sequence list")
def test_criterion_01(capsys):
    with Timer(1):
        assert main(["g", "--sigma", "1", "--nmax", "4"]) == 0
        assert capsys.readouterr().out.split() == ["1", "2", "7", "37", "266"]
        assert main(["oracle", "--sigma", "1", "--gifts", "3"]) == 0
        assert capsys.readouterr().out == "42\n"
        listed = ["".join(map(str, s)) for s in iter_gamma_sequences(1, 2)]
        assert listed == ["123", "1213", "12123", "1223", "12213", "1123", "11223"]


@pytest.mark.criterion(2, "E_1(2, k) = 1, 3, 3 by every E-method")
def test_criterion_02():
    with Timer(1):
        table = e_table_vertical(1, 2)
        for k, want in zip((2, 3, 4), (1, 3, 3)):
            values = all_e_methods(1, 2, k, table)
            assert set(values.values()) == {want}, values
            assert len(list(iter_restricted_partitions(2, k, 2))) == want


@pytest.mark.criterion(3, "E-methods = partition enumeration, row sums = gamma counts (sigma<=3, n<=7)")
def test_criterion_03():
    with Timer(120):
        for sigma in range(4):
            table = e_table_vertical(sigma, 7)
            for n in range(8):
                row_sum = 0
                for k in range(0, (sigma + 1) * n + 2):
                    truth = count_restricted_partitions(n, k, sigma + 1, limit=32)
                    values = all_e_methods(sigma, n, k, table)
                    assert set(values.values()) == {truth}, (sigma, n, k, values, truth)
                    row_sum += truth
                assert row_sum == count_gamma_sequences(sigma, n)
        # the merged counters are themselves tied to literal enumeration
        for sigma in range(3):
            for n in range(4):
                for k in range(n, (sigma + 1) * n + 1):
                    literal = sum(1 for _ in iter_restricted_partitions(n, k, sigma + 1))
                    assert literal == count_restricted_partitions(n, k, sigma + 1)
                assert sum(1 for _ in iter_gamma_sequences(sigma, n)) == count_gamma_sequences(sigma, n)


@pytest.mark.criterion(4, "H_sigma(n) = n! G_sigma(n-1) from the game simulator (sigma<=2, n<=4)")
def test_criterion_04():
    with Timer(120):
        for sigma in range(3):
            g = g_by_sum(sigma, 3).values
            for n in range(1, 5):
                h = count_full_game_playouts(GameConfig(sigma, n))
                assert h == factorial(n) * g[n - 1], (sigma, n, h)


@pytest.mark.criterion(5, "Type C and Type D recurrences reproduce the sum to n=60, Type D order sigma+1")
def test_criterion_05():
    with Timer(60):
        for sigma in range(1, 5):
            ref = g_by_sum(sigma, 60).values
            for kind in "CD":
                # run_recurrence raises on any non-integral quotient
                assert g_by_recurrence(kind, sigma, 60).values == ref
            assert builtin_recurrence("D", sigma).order == sigma + 1


@pytest.mark.criterion(6, "G_2(3): all methods give 842, the quoted 18252 is reported")
def test_criterion_06(capsys):
    with Timer(60):
        code = main(["verify", "--sigma", "2"])
        out = capsys.readouterr().out
        assert code == 0
        lines = out.splitlines()
        assert all(l.startswith(("PASS ", "NOTE ")) for l in lines)
        assert "PASS G2.n3-all-methods-agree" in lines
        note = [l for l in lines if l.startswith("NOTE ")]
        assert note and "18252" in note[0] and "842" in note[0]
        at3 = {
            "sum": g_by_sum(2, 3)[3],
            "typec": g_by_recurrence("C", 2, 3)[3],
            "typed": g_by_recurrence("D", 2, 3)[3],
            "partitions": sum(count_restricted_partitions(3, k, 3) for k in range(3, 10)),
        }
        assert set(at3.values()) == {842}


@pytest.mark.criterion(7, "EGF of E rows (sigma<=3, n<=6); G_1 closed form and ODE at N=40")
def test_criterion_07():
    with Timer(30):
        for sigma in range(4):
            for n in range(7):
                assert check_egf_e(sigma, n).passed
        closed = check_egf_g1_closed_form(40)
        ode = check_g1_ode(40)
        assert closed.passed and closed.orders_checked == 40
        assert ode.passed and ode.orders_checked == 38


@pytest.mark.criterion(8, "2F0 = G_1 (n<=20); E_2 hypergeometric = sum = table (n<=10), branches agree")
def test_criterion_08():
    with Timer(30):
        g1 = g_by_sum(1, 20).values
        for n in range(21):
            assert hyp_2f0(n + 1, -n, Fraction(-1, 2)) == g1[n]
        table = e_table_vertical(2, 10)
        for n in range(11):
            for k in range(0, 3 * n + 2):
                assert e2_hypergeometric(n, k) == e2_sum(n, k) == table[n, k]
            if n >= 1:
                assert e2_hypergeometric(n, 2 * n, branch="low") == e2_hypergeometric(n, 2 * n, branch="high")


@pytest.mark.criterion(9, "asymptotic ratio tends to 1; sigma=2 four-term error shrinks >= 4x from n=20 to 40")
def test_criterion_09():
    with Timer(60), localcontext() as ctx:
        ctx.prec = 40
        for sigma in (1, 2, 3):
            g = g_by_sum(sigma, 50).values
            d25 = abs(asymptotic_ratio(sigma, 25, g) - 1)
            d50 = abs(asymptotic_ratio(sigma, 50, g) - 1)
            assert d50 < d25, (sigma, d25, d50)
        g2 = g_by_sum(2, 40).values
        e20 = relative_error(g2[20], asymptotic_sigma2(20))
        e40 = relative_error(g2[40], asymptotic_sigma2(40))
        assert isinstance(e20, Decimal)
        assert e40 <= e20 / 4, (e20, e40)


@pytest.mark.criterion(10, "guesser recovers G_1 (order 2, degree 1) and G_2 (order <= 3) with 10 held-out terms")
def test_criterion_10():
    with Timer(60):
        g1 = g_by_sum(1, 60).values
        # 15 fitting terms followed by 10 held-out ones; also 15 terms in all, 5 held out
        for query in (GuessQuery(g1[:25], 2, 1, guard_terms=10), GuessQuery(g1[:15], 2, 1, guard_terms=5)):
            assert len(query.fitting_terms) <= 15
            spec1 = guess_recurrence(query)
            assert spec1 is not None and spec1.order == 2
            assert max(p.degree for p in spec1.polynomials()) <= 1
            assert (spec1.lhs_coeff, spec1.rhs_coeffs) == (Polynomial([1]), (2 * N - 1, Polynomial([1])))
            assert verify_spec_on_terms(spec1, g1) is None

        # 35 terms in all, the last 10 held out
        g2 = g_by_sum(2, 60).values
        spec2 = guess_recurrence(GuessQuery(g2[:35], 3, 3, guard_terms=10))
        assert spec2 is not None and spec2.order <= 3
        assert verify_spec_on_terms(spec2, g2) is None
        assert verify_spec_on_terms(builtin_recurrence("D", 2), g2) is None


@pytest.mark.criterion(11, "sigma=2, n<=200: Type C = Type D, each < 10 s; bench fails on mismatch")
def test_criterion_11(capsys, monkeypatch):
    runs = {}
    for kind in "CD":
        with Timer(10):
            runs[kind] = g_by_recurrence(kind, 2, 200).values
    assert runs["C"] == runs["D"]
    assert main(["bench", "--sigma", "2", "--nmax", "200", "--methods", "typec,typed"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "AGREE"

    real = cli.compute_g

    def tampered(sigma, nmax, method):
        values = real(sigma, nmax, method)
        if method == "typed":
            values[-1] += 1
        return values

    monkeypatch.setattr(cli, "compute_g", tampered)
    assert main(["bench", "--sigma", "2", "--nmax", "200", "--methods", "typec,typed"]) == 1
    assert "MISMATCH" in capsys.readouterr().err
