"""tuttesolve: exact guess-and-certify solver for functional equations
of the form Q(psi(x, y), psi(x, 0), x, y) = 0 with one catalytic variable.

The pipeline expands the unique series solution, guesses an algebraic
equation for the specialization psi(x, 0) from finitely many exact
coefficients, eliminates to an equation for the full bivariate series,
certifies both a posteriori by a finite computation, converts to a linear
ODE and then to a recurrence with polynomial coefficients, minimizes the
recurrence under a complexity cap, and evaluates the sequence exactly at
any index.  Everything is exact rational arithmetic; there is no floating
point anywhere.
"""

from .errors import (AmbiguousBranch, DegenerateKernel, EquationSyntaxError,
                     InsufficientData, InvalidBounds, InvalidElimination,
                     InvalidIndex, MissingInitials, NonPolynomial,
                     NonSquarefree, NoSeriesBranch, NoVanishingFactor,
                     PipelineError, PoleAtYZero, RefutedGuess,
                     ResourceCeiling, ResultantVanishes, TutteSolveError,
                     UnknownVariable, ZeroAnnihilator, ZeroPolynomial)
from .mpoly import MPoly, resultant, squarefree_primitive, vanishing_bound
from .polyq import RatFunc
from .series import QSeries, SeriesX, series_eval
from .funceq import (FuncEq, WellPosedness, check_well_posed, expand_series,
                     specialize_y0)
from .guessing import FAIL, AlgEq, guess_algeq
from .certify import (BivarAlgEq, Certificate, certify, defect_annihilator,
                      eliminate_g)
from .holonomic import (ABSENT, LinODE, PRec, algeq_to_ode, minimize_rec,
                        ode_to_rec)
from .evalrec import SequenceValue, tutte_closed_form, unroll
from .pipeline import (CoeffTable, PipelineConfig, column_series,
                       run_pipeline)
from .eqparse import parse_equation
from .report import (CertificateSummary, ColumnReport, Report, parse_report,
                     render_report)

__version__ = "0.1.0"

__all__ = [
    "ABSENT", "AlgEq", "AmbiguousBranch", "BivarAlgEq", "Certificate",
    "CertificateSummary", "CoeffTable", "ColumnReport", "DegenerateKernel",
    "EquationSyntaxError", "FAIL", "FuncEq", "InsufficientData",
    "InvalidBounds", "InvalidElimination", "InvalidIndex", "LinODE",
    "MPoly", "MissingInitials", "NonPolynomial", "NonSquarefree",
    "NoSeriesBranch", "NoVanishingFactor", "PRec", "PipelineConfig",
    "PipelineError", "PoleAtYZero", "QSeries", "RatFunc", "RefutedGuess",
    "Report", "ResourceCeiling", "ResultantVanishes", "SequenceValue",
    "SeriesX", "TutteSolveError", "UnknownVariable", "WellPosedness",
    "ZeroAnnihilator", "ZeroPolynomial", "algeq_to_ode", "certify",
    "check_well_posed", "column_series", "defect_annihilator",
    "eliminate_g", "expand_series", "guess_algeq", "minimize_rec",
    "ode_to_rec", "parse_equation", "parse_report", "render_report",
    "resultant", "run_pipeline", "series_eval", "specialize_y0",
    "squarefree_primitive", "tutte_closed_form", "unroll",
    "vanishing_bound",
]
