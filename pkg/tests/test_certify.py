"""Elimination, defect annihilators, and the a-posteriori certificate."""

from __future__ import annotations

from fractions import Fraction as F

import pytest

from tuttesolve import (AlgEq, MPoly, QSeries, SeriesX, certify,
                        defect_annihilator, eliminate_g, expand_series,
                        parse_equation, vanishing_bound)
from tuttesolve.certify import (_eval_psi_poly, _first_nonzero_loc,
                                _radical_ctx)
from tuttesolve.errors import (InvalidElimination, NoVanishingFactor,
                               ResultantVanishes)
from tuttesolve.polyq import RatFunc

from . import _frozen, _oracle

psi, g, x, y, z = (MPoly.var(v) for v in ("psi", "g", "x", "y", "z"))
one = MPoly.const(1)


def rf(*cs):
    return RatFunc([F(c) for c in cs])


def toy_witness(order: int) -> SeriesX:
    # psi = 1/(1-x) + x*y, written out coefficient by coefficient
    cs = [rf(1), RatFunc([F(1), F(1)])] + [rf(1)] * (order - 1)
    return SeriesX(cs[: order + 1])


TOY_P1 = AlgEq((one - x) * MPoly.var("f") - one, QSeries([F(1)] * 13))


class TestEliminateG:
    def test_linear_toy(self):
        eq = parse_equation("psi - g - x*y")
        p2 = eliminate_g(eq, TOY_P1, toy_witness(12))
        want = ((one - x) * (psi - x * y) - one).normalized()
        assert p2.P == want
        assert p2.branch == toy_witness(12)

    def test_keeps_only_vanishing_factor(self):
        # after eliminating g the polynomial splits as (psi - x)(psi + 1);
        # the witness psi = x singles out the first factor
        eq = parse_equation("g + (psi - x)*(psi + 1)")
        p1 = AlgEq(MPoly.var("f"), QSeries([F(0)] * 8))
        witness = SeriesX([RatFunc.const(0), rf(1)] + [RatFunc.const(0)] * 6)
        p2 = eliminate_g(eq, p1, witness)
        assert p2.P == (psi - x).normalized()

    def test_no_factor_vanishes(self):
        eq = parse_equation("g + (psi - x)*(psi + 1)")
        p1 = AlgEq(MPoly.var("f"), QSeries([F(0)] * 8))
        witness = SeriesX([rf(1)] + [RatFunc.const(0)] * 7)
        with pytest.raises(NoVanishingFactor):
            eliminate_g(eq, p1, witness)

    def test_shared_factor_collapses_resultant(self):
        eq = parse_equation("psi*g - psi*x")
        p1 = AlgEq(MPoly.var("f") - x, QSeries([F(0), F(1)]))
        with pytest.raises(ResultantVanishes):
            eliminate_g(eq, p1, SeriesX([rf(1)] * 2))

    def test_equation_must_involve_f(self):
        eq = parse_equation("psi - g - x*y")
        bad = AlgEq(x - one, QSeries([F(1)] * 4))
        with pytest.raises(InvalidElimination):
            eliminate_g(eq, bad, toy_witness(3))

    def test_flagship_shape(self, tutte_p2, tutte_sx):
        for v, d in _frozen.TUTTE_P2_DEGREES.items():
            assert tutte_p2.P.degree(v) == d
        assert len(tutte_p2.P.terms) == _frozen.TUTTE_P2_SUPPORT
        assert tutte_p2.branch == tutte_sx


class TestDefectAnnihilator:
    def test_linear_toy_gives_bare_z(self):
        eq = parse_equation("psi - g - x*y")
        p2 = eliminate_g(eq, TOY_P1, toy_witness(12))
        M = defect_annihilator(eq, TOY_P1, p2)
        assert M == z
        assert vanishing_bound(M, "z") == 0

    def test_flagship_shape_via_certificate(self, tutte_cert):
        M = tutte_cert.annihilator
        for v, d in _frozen.TUTTE_M_DEGREES.items():
            assert M.degree(v) == d
        assert len(M.terms) == _frozen.TUTTE_M_SUPPORT
        assert vanishing_bound(M, "z") == _frozen.TUTTE_BOUND


class TestCertify:
    def test_flagship_is_proven(self, tutte_cert):
        assert tutte_cert.status == "proven" and tutte_cert.is_proven
        assert tutte_cert.bound == _frozen.TUTTE_BOUND
        assert tutte_cert.checkedOrder == _frozen.TUTTE_CHECKED_ORDER
        assert tutte_cert.kernel.mode == _frozen.TUTTE_KERNEL_MODE
        assert tutte_cert.kernel.kernelValuation == _frozen.TUTTE_KERNEL_VALUATION
        assert tutte_cert.annihilator_support == _frozen.TUTTE_M_SUPPORT

    def test_perturbed_specialization_is_refuted(self, tutte_eq, tutte_p1,
                                                 tutte_p2):
        bad = AlgEq(tutte_p1.P + x, tutte_p1.branch)
        cert = certify(tutte_eq, bad, tutte_p2)
        assert cert.status == "refuted" and not cert.is_proven
        assert cert.annihilator is None
        assert cert.checkedOrder >= 0

    def test_perturbed_bivariate_is_refuted(self, tutte_eq, tutte_p1,
                                            tutte_p2):
        from tuttesolve.certify import BivarAlgEq
        bad = BivarAlgEq(tutte_p2.P + x, tutte_p2.branch)
        cert = certify(tutte_eq, tutte_p1, bad)
        assert cert.status == "refuted"
        assert cert.annihilator is None

    def test_bivariate_holds_past_checked_order(self, tutte_eq, tutte_p2):
        # independent spot check well beyond the certified order
        deep = expand_series(tutte_eq, _frozen.TUTTE_CHECKED_ORDER + 8)
        ctx = _radical_ctx(deep)
        vals = _eval_psi_poly(tutte_p2.P, deep, len(deep.coeffs), ctx)
        assert _first_nonzero_loc(vals) is None
