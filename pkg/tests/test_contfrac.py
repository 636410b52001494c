import warnings
from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from primecf import poly as P
from primecf.contfrac import (ZERO, JFraction, RationalFunction, SFraction, a_coefficient,
                              approximant, contract_s_to_j, eval_backward, laguerre,
                              make_named_fraction, moments_to_sfraction, pade_from_moments,
                              prime_w_closed_form, taylor_at_infinity)
from primecf.errors import (DegenerateMoments, IndexOutOfRange, NotProperAtInfinity,
                            NotStieltjesWarning, SingularSystem, TooShort)
from primecf.series import gen_sequence

FACT = [factorial(k) for k in range(30)]


def rf(P_, Q_):
    return RationalFunction(P_, Q_)


def shifted(n, count):
    return [F(factorial(k + n), factorial(n)) for k in range(count)]


class TestRationalFunction:
    def test_reduced_and_monic(self):
        w = rf([-2, 2], [-2, 0, 2])  # 2(z-1) / 2(z^2-1)
        assert w == rf([1], [1, 1])

    def test_zero(self):
        assert rf([], [3, 5]) == ZERO

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            rf([1], [])

    def test_str(self):
        assert str(rf([-3, 1], [2, -4, 1])) == "(-3;1)/(2;-4;1)"


class TestApproximant:
    def test_prime_J_second(self):
        assert approximant(JFraction([1, 1], [-1, -3]), 2) == rf([-3, 1], [2, -4, 1])

    def test_prime_S_second(self):
        assert approximant(SFraction([1, 1]), 2) == rf([1], [-1, 1])

    @pytest.mark.parametrize("cf", [SFraction([1, 2]), JFraction([1], [0])])
    def test_empty(self, cf):
        assert approximant(cf, 0) == ZERO

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            approximant(SFraction([1, 1]), 3)
        with pytest.raises(IndexOutOfRange):
            approximant(SFraction([1, 1]), -1)

    @pytest.mark.parametrize("kind", ["prime-S", "expint-S"])
    @pytest.mark.parametrize("n", range(1, 13))
    def test_S_degree(self, kind, n):
        assert approximant(make_named_fraction(kind, 12, 2), n).degree == (n + 1) // 2

    @pytest.mark.parametrize("n", range(1, 13))
    def test_J_degree(self, n):
        assert approximant(make_named_fraction("prime-J", 12), n).degree == n

    @pytest.mark.parametrize("n", range(0, 7))
    def test_float_backward_matches_exact(self, n):
        cf = make_named_fraction("prime-J", 6)
        assert eval_backward(cf, n, 30.0) == pytest.approx(float(approximant(cf, n)(F(30))), rel=1e-14)
        s = make_named_fraction("prime-S", 12)
        assert eval_backward(s, 2 * n, 30.0) == pytest.approx(float(approximant(s, 2 * n)(F(30))), rel=1e-14)


class TestContraction:
    def test_prime(self):
        j = contract_s_to_j(SFraction([1, 1, 1, 2, 2, 3, 3]))
        assert list(j.a) == [1, 1, 4] and list(j.b) == [-1, -3, -5]

    def test_shifted(self):
        j = contract_s_to_j(SFraction([1, 2, 1, 3, 2, 4, 3]))
        assert list(j.a) == [1, 2, 6] and list(j.b) == [-2, -4, -6]

    def test_shortest(self):
        j = contract_s_to_j(SFraction([F(5, 2), 7]))
        assert list(j.a) == [F(5, 2)] and list(j.b) == [-7]

    def test_too_short(self):
        with pytest.raises(TooShort):
            contract_s_to_j(SFraction([1]))

    @pytest.mark.parametrize("n", range(0, 5))
    def test_even_approximants_agree(self, n):
        s = make_named_fraction("expint-S", 13, n)
        j = contract_s_to_j(s)
        for k in range(1, 7):
            assert approximant(j, k) == approximant(s, 2 * k)

    @given(st.lists(st.fractions(min_value=F(1, 9), max_value=10, max_denominator=9),
                    min_size=2, max_size=9))
    def test_contraction_law_random(self, a):
        s = SFraction(a)
        j = contract_s_to_j(s)
        for k in range(1, len(j) + 1):
            assert approximant(j, k) == approximant(s, 2 * k)


class TestMoments:
    def test_factorial(self):
        assert list(moments_to_sfraction(FACT[:9], 7).a) == [1, 1, 1, 2, 2, 3, 3]

    def test_shifted_factorial(self):
        assert list(moments_to_sfraction(FACT[1:9], 7).a) == [1, 2, 1, 3, 2, 4, 3]

    def test_point_mass(self):
        with pytest.raises(DegenerateMoments) as info:
            moments_to_sfraction([1] * 9, 5)
        assert list(info.value.partial) == [1, 1]

    def test_too_few(self):
        with pytest.raises(ValueError):
            moments_to_sfraction([1, 1], 2)

    def test_not_stieltjes_warns(self):
        with pytest.warns(NotStieltjesWarning):
            s = moments_to_sfraction([(-1) ** k * factorial(k) for k in range(6)], 4)
        assert list(s.a) == [1, -1, -1, -2]

    @pytest.mark.parametrize("n", range(0, 5))
    def test_shifted_patterns(self, n):
        mu = shifted(n, 16)
        s = moments_to_sfraction(mu, 13)
        assert s == make_named_fraction("expint-S", 13, n)
        j = contract_s_to_j(moments_to_sfraction(mu, 14))
        assert j == make_named_fraction("expint-J", 7, n)

    @pytest.mark.parametrize("mu", [FACT[:16], shifted(1, 16), shifted(3, 16),
                                    [F(1, k + 1) for k in range(16)]])
    def test_round_trip(self, mu):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            s = moments_to_sfraction(mu, 12)
        for n in range(1, 13):
            assert list(taylor_at_infinity(approximant(s, n), n - 1)) == list(mu[:n])

    @given(st.lists(st.fractions(min_value=F(1, 9), max_value=10, max_denominator=9),
                    min_size=1, max_size=8))
    def test_round_trip_random(self, a):
        # moments of a random S-fraction are reproduced by synthesis
        s = SFraction(a)
        n = len(a)
        mu = list(taylor_at_infinity(approximant(s, n), n))
        assert moments_to_sfraction(mu, n) == s


class TestTaylor:
    def test_examples(self):
        assert list(taylor_at_infinity(rf([-3, 1], [2, -4, 1]), 3)) == [1, 1, 2, 6]
        assert list(taylor_at_infinity(rf([1], [-1, 1]), 3)) == [1, 1, 1, 1]
        assert list(taylor_at_infinity(rf([1], [0, 1]), 2)) == [1, 0, 0]

    def test_not_proper(self):
        with pytest.raises(NotProperAtInfinity):
            taylor_at_infinity(rf([0, 1], [1, 1]), 2)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_order_law_and_error_constant(self, n):
        w = approximant(make_named_fraction("prime-J", n), n)
        c = taylor_at_infinity(w, 2 * n)
        assert list(c)[: 2 * n] == FACT[: 2 * n]
        assert FACT[2 * n] - c[2 * n] == factorial(n) ** 2

    @pytest.mark.parametrize("n", range(1, 9))
    def test_S_order_law(self, n):
        w = approximant(make_named_fraction("prime-S", n), n)
        assert list(taylor_at_infinity(w, n - 1)) == FACT[:n]


class TestPade:
    def test_examples(self):
        assert pade_from_moments(FACT, 1) == rf([1], [-1, 1])
        assert pade_from_moments(FACT, 2) == rf([-3, 1], [2, -4, 1])
        assert pade_from_moments([1] * 4, 1) == rf([1], [-1, 1])

    def test_singular(self):
        with pytest.raises(SingularSystem):
            pade_from_moments([1] * 6, 2)

    @pytest.mark.parametrize("mu", [FACT[:14], shifted(1, 14)])
    @pytest.mark.parametrize("n", range(1, 7))
    def test_equals_contracted_fraction(self, mu, n):
        j = contract_s_to_j(moments_to_sfraction(mu, 13))
        assert pade_from_moments(mu, n) == approximant(j, n)


class TestClosedForms:
    def test_laguerre(self):
        assert laguerre(0) == (1,)
        assert laguerre(2) == (1, -2, F(1, 2))
        assert P.scale(laguerre(2), 2) == (2, -4, 1)

    def test_small(self):
        assert prime_w_closed_form(1) == rf([1], [-1, 1])
        assert prime_w_closed_form(2) == rf([-3, 1], [2, -4, 1])
        assert a_coefficient(3, 1) == F(-11, 6)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_matches_fraction(self, n):
        w = prime_w_closed_form(n)
        assert w == approximant(make_named_fraction("prime-J", n), n)
        assert all(c.denominator == 1 for c in w.P + w.Q)
        assert w.P[-1] == 1 and P.degree(w.P) == n - 1 and P.degree(w.Q) == n

    @pytest.mark.parametrize("n", range(1, 13))
    def test_first_two_coefficients(self, n):
        H = gen_sequence("H", n)[n]
        assert a_coefficient(n, 1) == -H
        assert a_coefficient(n, 2) == (n + 1) * H - 2 * n


class TestNamed:
    def test_prime_J(self):
        j = make_named_fraction("prime-J", 5)
        assert list(j.a) == [1, 1, 4, 9, 16] and list(j.b) == [-1, -3, -5, -7, -9]

    def test_expint_zero_is_prime(self):
        assert make_named_fraction("expint-S", 7, 0) == make_named_fraction("prime-S", 7)
        assert list(make_named_fraction("prime-S", 7).a) == [1, 1, 1, 2, 2, 3, 3]

    def test_expint_J_one(self):
        j = make_named_fraction("expint-J", 3, 1)
        assert list(j.a) == [1, 2, 6] and list(j.b) == [-2, -4, -6]

    def test_bad_kind(self):
        with pytest.raises(ValueError):
            make_named_fraction("gauss", 3)
