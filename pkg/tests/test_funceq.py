"""Well-posedness analysis and the exact series expansion engine."""

from __future__ import annotations

from fractions import Fraction as F

import pytest

from tuttesolve import (FuncEq, MPoly, check_well_posed, expand_series,
                        parse_equation, specialize_y0)
from tuttesolve.errors import (AmbiguousBranch, DegenerateKernel,
                               NoSeriesBranch, PoleAtYZero)
from tuttesolve.polyq import RatFunc

from . import _frozen, _oracle

psi, g, x, y = (MPoly.var(v) for v in ("psi", "g", "x", "y"))


class TestFuncEqType:
    def test_requires_psi(self):
        with pytest.raises(ValueError):
            FuncEq(x + y)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            FuncEq(MPoly.zero())

    def test_rejects_internal_variables(self):
        with pytest.raises(ValueError):
            FuncEq(psi + MPoly.var("z"))

    def test_render_round_trip(self):
        eq = parse_equation(_frozen.TUTTE_EQ)
        assert parse_equation(eq.render()) == eq


class TestWellPosedness:
    def test_flagship_kernel_data(self, tutte_eq):
        wp = check_well_posed(tutte_eq)
        assert wp.mode == _frozen.TUTTE_KERNEL_MODE
        assert wp.kernelValuation == _frozen.TUTTE_KERNEL_VALUATION
        assert wp.c0 == RatFunc([F(1)])
        assert wp.gamma0 == F(1)
        assert wp.kernelA == RatFunc([F(0), F(-1), F(1)])   # y^2 - y
        assert wp.kernelB.is_zero

    def test_direct_mode_when_kernel_regular(self):
        wp = check_well_posed(parse_equation("psi - 1 - x*psi**2"))
        assert wp.mode == "direct" and wp.kernelValuation == 0

    def test_two_branches_is_ambiguous(self):
        with pytest.raises(AmbiguousBranch):
            check_well_posed(parse_equation("psi**2 - psi"))

    def test_no_rational_branch(self):
        with pytest.raises(NoSeriesBranch):
            check_well_posed(parse_equation("psi**2 + 1"))

    def test_underdetermined_equation_is_degenerate(self):
        with pytest.raises(DegenerateKernel):
            check_well_posed(parse_equation("psi - g - x*y"))


class TestExpansion:
    def test_flagship_prefix_matches_closed_form(self, tutte_sx, tutte_seq):
        want = [_oracle.counting_term(n) for n in range(31)]
        assert list(tutte_seq) == want
        # the first catalytic coefficient is 1/(1-y), computable by hand
        assert tutte_sx[1] == RatFunc([F(1)], [F(1), F(-1)])

    def test_deep_expansion_regression(self, tutte_eq):
        # high powers of (1-y) in the denominators; used to overflow a cap
        s = expand_series(tutte_eq, 38)
        got = specialize_y0(s)
        assert list(got) == [_oracle.counting_term(n) for n in range(39)]

    def test_engineered_pole_is_reported(self):
        eq = parse_equation("y**2*psi + g + x*y")
        with pytest.raises(PoleAtYZero):
            specialize_y0(expand_series(eq, 4))

    def test_negative_order_rejected(self, tutte_eq):
        with pytest.raises(ValueError):
            expand_series(tutte_eq, -1)

    def test_specialize_is_y0_column(self, tutte_sx, tutte_seq):
        assert list(tutte_seq) == [c.eval0() for c in tutte_sx]
