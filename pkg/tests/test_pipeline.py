"""End-to-end pipeline runs, coefficient tables, and column extraction."""

from __future__ import annotations

from fractions import Fraction as F

import pytest

from tuttesolve import (CoeffTable, PipelineConfig, column_series,
                        parse_equation, run_pipeline, unroll)
from tuttesolve.errors import (AmbiguousBranch, InvalidBounds, PipelineError,
                               PoleAtYZero)

from . import _frozen, _oracle


def strip_timings(doc: dict) -> dict:
    doc = dict(doc)
    doc.pop("timings_ms", None)
    return doc


class TestGoldenRuns:
    def test_doubling_sequence(self):
        rep = run_pipeline(PipelineConfig("psi - 1 - 2*x*psi", guess_order=12,
                                          max_complexity=4, eval_at=10))
        assert rep.proven
        assert rep.value.value == F(1024)
        assert list(rep.series_prefix) == [F(2) ** n for n in range(13)]
        assert unroll(rep.recurrence, 20).value == F(2) ** 20

    def test_catalan_equation(self):
        # g never appears, so elimination degenerates to the equation itself
        rep = run_pipeline(PipelineConfig("psi - 1 - x*psi**2", guess_order=24,
                                          max_complexity=4, eval_at=60))
        assert rep.proven
        assert rep.value.value == F(_oracle.catalan(60))
        want = [F(_oracle.catalan(n)) for n in range(25)]
        assert list(rep.series_prefix) == want
        assert rep.minimized is not None
        assert rep.minimized.coeffs == ((-2, -4), (2, 1))

    def test_flagship_summary(self, tutte_report):
        rep = tutte_report
        assert rep.proven
        assert rep.certificate.bound == _frozen.TUTTE_BOUND
        assert rep.certificate.checked_order == _frozen.TUTTE_CHECKED_ORDER
        assert rep.value.value == _oracle.counting_term(1000)
        assert rep.value.digits == 969


class TestStageAttribution:
    def test_ambiguous_branch_stops_well_posedness(self):
        cfg = PipelineConfig("psi**2 - psi", guess_order=8, max_complexity=2,
                             eval_at=0)
        with pytest.raises(PipelineError) as e:
            run_pipeline(cfg)
        assert e.value.stage == "well-posedness"
        assert isinstance(e.value.cause, AmbiguousBranch)

    def test_pole_stops_expansion(self):
        cfg = PipelineConfig("y**2*psi + g + x*y", guess_order=8,
                             max_complexity=2, eval_at=0)
        with pytest.raises(PipelineError) as e:
            run_pipeline(cfg)
        assert e.value.stage in ("expansion", "specialize")
        assert isinstance(e.value.cause, PoleAtYZero)


class TestConfig:
    def test_bounds_validated(self):
        with pytest.raises(InvalidBounds):
            PipelineConfig("psi - 1 - x*psi", guess_order=7)
        with pytest.raises(InvalidBounds):
            PipelineConfig("psi - 1 - x*psi", max_complexity=0)
        with pytest.raises(InvalidBounds):
            PipelineConfig("psi - 1 - x*psi", eval_at=-1)
        with pytest.raises(InvalidBounds):
            PipelineConfig("psi - 1 - x*psi", guess_order=64, max_order=32)

    def test_unknown_format_rejected(self):
        with pytest.raises(ValueError):
            PipelineConfig("psi - 1 - x*psi", format="yaml")

    def test_deterministic_modulo_timings(self):
        cfg = PipelineConfig("psi - 1 - x*psi**2", guess_order=16,
                             max_complexity=4, eval_at=12)
        a, b = run_pipeline(cfg), run_pipeline(cfg)
        assert strip_timings(a.to_dict()) == strip_timings(b.to_dict())


class TestColumns:
    def test_flagship_bottom_row(self, tutte_eq):
        got = column_series(tutte_eq, 0, 4)
        assert list(got) == [F(1), F(1), F(3), F(13), F(68)]

    def test_flagship_first_column(self, tutte_eq):
        got = column_series(tutte_eq, 1, 4)
        assert list(got) == [F(0), F(1), F(6), F(36), F(228)]

    def test_y_free_equation_has_zero_columns(self):
        eq = parse_equation("psi - 1 - 2*x*psi")
        assert all(c == 0 for c in column_series(eq, 1, 6))
        assert all(c == 0 for c in column_series(eq, 3, 6))

    def test_table_matches_columns(self, tutte_eq):
        tab = CoeffTable.build(tutte_eq, 3, 3)
        assert tab.shape == (4, 4)
        assert tab.entries[0] == (F(1), F(0), F(0), F(0))
        assert tab.entries[1] == (F(1), F(1), F(1), F(1))
        for m in range(4):
            col = column_series(tutte_eq, m, 3)
            assert [tab.entry(n, m) for n in range(4)] == list(col)

    def test_column_report_in_pipeline(self):
        rep = run_pipeline(PipelineConfig("psi - 1 - x*psi**2", guess_order=16,
                                          max_complexity=4, eval_at=6,
                                          column=0))
        # column 0 is only reported when explicitly requested with m > 0
        assert rep.column is None
