from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcf.cfrac import CFrac, limit_series
from qcf.corpus.builders import g_sum, mu, rr_sum
from qcf.domains import FormalQ
from qcf.errors import ConstantTermNotOne, OrderExhausted, TermBudgetExceeded
from qcf.expand import c_fraction_expand, division_step, verify_ratio_recursion
from qcf.qseries import QSeries


def mono(power, order, c=1):
    return QSeries.monomial(power, order, c)


class TestDivisionStep:
    def test_mu_two(self):
        dom = FormalQ(10)
        diff, den = division_step(mu(dom, 2, 0, 1), mu(dom, 2, 1, 1))
        assert diff == mono(1, 10)
        assert den == 1 + mono(2, 10)

    def test_equal_inputs(self):
        d = QSeries([1, 2, 3])
        diff, den = division_step(d, d)
        assert diff.is_zero() and den == d

    def test_trivial(self):
        diff, den = division_step(QSeries([1, 1]), QSeries([1, 0]))
        assert diff == QSeries([0, 1]) and den == QSeries([1, 0])

    def test_needs_unit_constant(self):
        with pytest.raises(ConstantTermNotOne):
            division_step(QSeries([2, 1]), QSeries([1, 0]))

    @pytest.mark.parametrize("n", [4, 6, 8])
    def test_mu_leading_factor(self, n):
        dom, lam = FormalQ(30), F(2, 3)
        for s in range(n - 1):
            diff, den = division_step(mu(dom, n, s, lam), mu(dom, n, s + 1, lam))
            assert diff.leading_term() == (s + 1, lam)


class TestCFractionExpand:
    def test_one(self):
        out = c_fraction_expand(QSeries.constant(1, 10), 5)
        assert out.terms == () and out.terminated

    def test_geometric(self):
        f = (1 - mono(1, 12)).inverse()
        out = c_fraction_expand(f, 5)
        assert out.terms == ((1, 1), (-1, 1)) and out.terminated

    def test_rediscovers_rr_shape(self):
        dom = FormalQ(30)
        f = rr_sum(dom) / rr_sum(dom, 1)
        out = c_fraction_expand(f, 50)
        assert out.terms[:6] == tuple((1, k) for k in range(1, 7))
        assert all(t == (1, k) for k, t in enumerate(out.terms, 1))
        # q + ... + q^7 uses 28 orders; what is left cannot see q^8
        assert out.order_left == 30 - 28

    def test_budget(self):
        dom = FormalQ(30)
        with pytest.raises(TermBudgetExceeded) as info:
            c_fraction_expand(rr_sum(dom) / rr_sum(dom, 1), 3)
        assert len(info.value.expansion.terms) == 3

    def test_needs_unit_constant(self):
        with pytest.raises(ConstantTermNotOne):
            c_fraction_expand(QSeries([0, 1]), 3)

    def test_reconstructs_input(self):
        dom = FormalQ(20)
        f = g_sum(dom, F(1, 3), F(1, 2)) / g_sum(dom, F(1, 3), F(1, 2), 1)
        try:
            out = c_fraction_expand(f, 40)
        except OrderExhausted as exc:
            out = exc.expansion
        back = limit_series(out.to_cfrac(20), 20)
        assert back.truncate(20 - out.terms[-1][1]) == f.truncate(20 - out.terms[-1][1])

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.tuples(st.integers(-4, 4).filter(bool), st.integers(1, 3)), min_size=1, max_size=8))
    def test_round_trip(self, spec):
        order = 24
        cf = CFrac(1, lambda k: (mono(spec[k - 1][1], order, spec[k - 1][0]), 1), len(spec))
        f = limit_series(cf, order)
        try:
            out = c_fraction_expand(f, 20)
        except OrderExhausted as exc:
            out = exc.expansion
        got = out.terms
        assert got == tuple(spec[: len(got)])
        # the full pattern comes back whenever it fits in the order
        if sum(a for _, a in spec) < order:
            assert got == tuple(spec) and out.terminated


class TestRatioRecursion:
    def test_mu_three(self):
        dom, lam = FormalQ(20), F(2)
        check = verify_ratio_recursion(lambda s: mu(dom, 3, s, lam), lambda s: lam * mono(s + 1, 20), 3)
        assert check

    def test_g_family_with_unit_free_coefficients(self):
        order, b, lam = 25, F(1, 3), F(1, 2)
        dom = FormalQ(order)
        q = mono(1, order)
        check = verify_ratio_recursion(
            lambda s: g_sum(dom, b, lam * q**s),
            lambda s: b + lam * q ** (s + 1),
            5,
            beta_rule=lambda s: 1 - b,
        )
        assert check

    def test_constant_family(self):
        assert verify_ratio_recursion(lambda s: QSeries.constant(1, 5), lambda s: 0, 4)

    def test_reports_first_failure(self):
        dom, lam = FormalQ(20), F(2)
        wrong = verify_ratio_recursion(lambda s: mu(dom, 3, s, lam), lambda s: lam * mono(s + 2, 20), 3)
        assert not wrong and wrong.failed_at == 0
