from fractions import Fraction

import pytest

from giftcount.genfun import (
    check_egf_e,
    check_egf_g1_closed_form,
    check_g1_ode,
    egf_e_series,
    g1_closed_form_series,
)
from giftcount.oracle import count_restricted_partitions


def test_egf_e_examples():
    assert egf_e_series(1, 2, 4)[3] == Fraction(1, 2)
    assert check_egf_e(1, 2).passed
    assert egf_e_series(3, 0, 3)[0] == 1
    assert check_egf_e(3, 0).passed
    assert egf_e_series(2, 3, 9)[6] * 720 == 75 == count_restricted_partitions(3, 6, 3)


@pytest.mark.parametrize("sigma", range(4))
@pytest.mark.parametrize("n", range(7))
def test_egf_e_rows(sigma, n):
    rep = check_egf_e(sigma, n, (sigma + 1) * n)
    assert rep.passed, rep
    assert rep.orders_checked == (sigma + 1) * n


def test_closed_form_low_orders():
    s = g1_closed_form_series(4)
    assert s[0] == 1
    assert s[2] == Fraction(7, 2)
    assert s[4] * 24 == 266


def test_closed_form_and_ode_at_40():
    assert check_egf_g1_closed_form(40).passed
    rep = check_g1_ode(40)
    assert rep.passed and rep.orders_checked == 38
    assert check_g1_ode(3).passed


def test_ode_lowest_coefficient_is_the_recurrence():
    # x^0 coefficient of f'' = 3f' + 2x f'' + f reads G(2) = 3 G(1) + G(0)
    assert 7 == 3 * 2 + 1


def test_report_records_first_mismatch():
    from giftcount.genfun import _compare

    rep = _compare("demo", [1, 2, 3], [1, 2, 4], 2)
    assert not rep.passed
    assert rep.first_mismatch == (2, Fraction(3), Fraction(4))
