"""Truncated series containers and the reference evaluator."""

from __future__ import annotations

from fractions import Fraction as F

import pytest

from tuttesolve import MPoly, QSeries, SeriesX, series_eval
from tuttesolve.errors import PoleAtYZero
from tuttesolve.polyq import RATFUNC_ONE, RATFUNC_ZERO, RatFunc

psi, g, x, y = (MPoly.var(v) for v in ("psi", "g", "x", "y"))
Y = RatFunc([F(0), F(1)])

from . import _oracle


def test_qseries_basics():
    s = QSeries([1, 2, F(1, 2)])
    assert s.order == 2 and len(s) == 3
    assert s[2] == F(1, 2)
    assert s.prefix(1) == QSeries([1, 2])
    with pytest.raises(ValueError):
        s.prefix(5)
    with pytest.raises(ValueError):
        QSeries([])


def test_seriesx_rejects_pole_at_y0():
    pole = RATFUNC_ONE / Y
    with pytest.raises(PoleAtYZero):
        SeriesX([RATFUNC_ONE, pole])


def test_seriesx_accessors():
    s = SeriesX([RATFUNC_ONE, Y, RATFUNC_ZERO])
    assert s.order == 2
    assert s[1] == Y
    assert s.prefix(1).coeffs == (RATFUNC_ONE, Y)


def test_series_eval_small_case():
    # Q = psi*g + x*y at psi = 1 + y*x, g = 1 + 2x
    Q = psi * g + x * y
    sx = SeriesX([RATFUNC_ONE, Y])
    gs = QSeries([1, 2])
    out = series_eval(Q, sx, gs, 1)
    assert out[0] == RATFUNC_ONE
    # order 1: psi0*g1 + psi1*g0 + y = 2 + y + y
    assert out[1] == RatFunc([F(2), F(2)])


def test_series_eval_matches_independent_convolution():
    # Q = psi^2 - g with psi = sum (1+y)^n x^n-ish data, g its y=0 line
    coeffs = [RatFunc([F(1), F(n)]) for n in range(6)]
    sx = SeriesX(coeffs)
    gs = QSeries([c.eval0() for c in coeffs])
    out = series_eval(psi ** 2 - g, sx, gs, 5)
    # independent check at y = 0: (sum x^n)^2 - same = square - line
    a = [F(1)] * 6
    sq = _oracle.ser_mul(a, a, 6)
    for k in range(6):
        got = out[k].eval0()
        assert got == sq[k] - a[k]


def test_series_eval_requires_enough_terms():
    sx = SeriesX([RATFUNC_ONE])
    with pytest.raises(ValueError):
        series_eval(psi, sx, QSeries([1]), 3)
