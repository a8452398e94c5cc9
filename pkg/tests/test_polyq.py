"""Univariate polynomial helpers and canonical rational functions."""

from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tuttesolve.polyq import (RATFUNC_ONE, RATFUNC_ZERO, RatFunc,
                              clear_denominators, deg, igcd_poly, int_divisors,
                              integer_roots, pade, pdivmod, peval, pgcd, pmul,
                              ppow, pshift, rational_roots, trim)

ints = st.integers(min_value=-9, max_value=9)
polys = st.lists(ints, min_size=0, max_size=6)


def frac_poly(p):
    return [F(c) for c in p]


class TestArithmetic:
    @given(polys, polys)
    def test_mul_commutes(self, a, b):
        assert trim(pmul(a, b)) == trim(pmul(b, a))

    @given(polys, polys)
    @settings(max_examples=60)
    def test_mul_degree_and_eval(self, a, b):
        a, b = trim(list(a)), trim(list(b))
        c = pmul(a, b)
        if a and b:
            assert deg(c) == deg(a) + deg(b)
        for x in (F(0), F(1), F(-2), F(1, 3)):
            assert peval(c, x) == peval(a, x) * peval(b, x)

    def test_pow_matches_repeated_mul(self):
        a = [1, 2, 1]
        assert ppow(a, 3) == pmul(pmul(a, a), a)
        assert ppow(a, 0) == [1]

    @given(polys, st.integers(min_value=-4, max_value=4))
    @settings(max_examples=60)
    def test_shift_is_composition(self, a, s):
        shifted = pshift(frac_poly(a), s)
        for x in (F(0), F(2), F(-1)):
            assert peval(shifted, x) == peval(frac_poly(a), x + s)

    def test_divmod_exact(self):
        a = frac_poly([2, 3, 1])            # (x+1)(x+2)
        q, r = pdivmod(a, frac_poly([1, 1]))
        assert trim(r) == [] and trim(q) == [F(2), F(1)]

    @given(polys, polys)
    @settings(max_examples=60)
    def test_divmod_identity(self, a, b):
        b = trim(frac_poly(b))
        if not b:
            return
        a = frac_poly(a)
        q, r = pdivmod(a, b)
        back = [x + y for x, y in
                zip(pmul(q, b) + [F(0)] * 10, r + [F(0)] * 20)]
        assert trim(back)[: len(trim(a))] == trim(a)
        assert deg(r) < deg(b) or not trim(r)


class TestNumberTheory:
    def test_int_divisors(self):
        assert int_divisors(12) == [1, 2, 3, 4, 6, 12]
        assert int_divisors(1) == [1]

    def test_rational_roots(self):
        # 6x^2 - 5x + 1 = (2x-1)(3x-1)
        assert sorted(rational_roots([1, -5, 6])) == [F(1, 3), F(1, 2)]
        assert integer_roots([6, -5, 1]) == [2, 3]
        assert rational_roots([1]) == []

    def test_integer_roots_with_zero_constant(self):
        # n(n-3): roots 0 and 3
        assert sorted(integer_roots([0, -3, 1])) == [0, 3]

    @given(polys)
    def test_igcd_divides(self, a):
        a = trim([c for c in a])
        b = pmul(a, [1, 1]) if a else []
        g = igcd_poly(a, b)
        if a:
            assert deg(g) >= deg(a)


class TestClearDenominators:
    def test_basic(self):
        ints_out, scale = clear_denominators([F(1, 2), F(1, 3)])
        assert ints_out == [3, 2] and scale == F(1, 6)

    @given(st.lists(st.fractions(max_denominator=20), min_size=1, max_size=5))
    @settings(max_examples=60)
    def test_rescaling_recovers_input(self, fr):
        ints_out, scale = clear_denominators(fr)
        assert [scale * c for c in ints_out] == trim(list(fr))


class TestPade:
    def test_geometric(self):
        # 1/(1-2x) from its series; compare as canonical rational functions
        series = [F(2) ** k for k in range(8)]
        num, den = pade(series, 0, 1)
        assert RatFunc(num, den) == RatFunc([F(1)], [F(1), F(-2)])


class TestRatFunc:
    def test_canonical_form(self):
        r = RatFunc([F(2), F(2)], [F(4)])   # (2+2y)/4 -> (1/2)(1+y)
        assert r.den == (F(1),)
        assert r == RatFunc([F(1, 2), F(1, 2)])

    def test_field_ops(self):
        one_minus = RatFunc([F(1), F(-1)])
        r = RATFUNC_ONE / one_minus
        assert r == RatFunc([F(1)], [F(1), F(-1)])
        assert r.den[-1] == F(1)            # denominator kept monic
        assert (r - r).is_zero
        assert r * one_minus == RATFUNC_ONE
        assert (RATFUNC_ZERO + r) == r

    def test_eval0_and_regularity(self):
        r = RatFunc([F(1)], [F(1), F(-1)])
        assert r.regular_at_0 and r.eval0() == F(1)
        pole = RatFunc([F(1)], [F(0), F(1)])     # 1/y
        assert not pole.regular_at_0
        with pytest.raises(ZeroDivisionError):
            pole.eval0()

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=4),
           st.lists(st.integers(-5, 5), min_size=1, max_size=4))
    @settings(max_examples=60)
    def test_add_matches_pointwise(self, a, b):
        if not trim(frac_poly(a)) or not trim(frac_poly(b)):
            return
        ra = RATFUNC_ONE / RatFunc(frac_poly(a)) if trim(frac_poly(a)) else RATFUNC_ZERO
        rb = RatFunc(frac_poly(b))
        s = ra + rb
        for x in (F(2), F(3), F(5)):
            da = peval(frac_poly(a), x)
            if da == 0 or peval(list(s.den), x) == 0:
                continue
            lhs = peval(list(s.num), x) / peval(list(s.den), x)
            assert lhs == 1 / da + peval(frac_poly(b), x)


def test_pgcd_of_common_factor():
    a = pmul(frac_poly([1, 1]), frac_poly([2, 1]))
    b = pmul(frac_poly([1, 1]), frac_poly([3, 1]))
    g = pgcd(a, b)
    assert trim(g) == [F(1), F(1)]
