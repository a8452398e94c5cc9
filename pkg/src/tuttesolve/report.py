"""Report assembly and rendering.

A :class:`Report` is the end product of a pipeline run: the canonical
equation echo, the two algebraic equations, a certificate summary, the
differential equation, the recurrences, the requested sequence value, a
series prefix for cross-checking, and per-stage timings.  Three renderings
are provided: plain text, markdown, and a structured JSON document that
round-trips through :func:`parse_report`.

Polynomials serialize as nested coefficient arrays under an explicit
variable-order header, outermost variable first, so the document is
self-describing without this package's term encoding.
"""

from __future__ import annotations

import json
import textwrap
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .certify import Certificate
from .holonomic import ABSENT, LinODE, PRec
from .evalrec import SequenceValue
from .mpoly import MPoly
from .series import QSeries

FORMAT_MARKER = "tuttesolve-report"
FORMAT_VERSION = 1

# integers longer than this render as a digit count plus an appendix
INLINE_DIGIT_LIMIT = 40

COLUMN_LABEL = "guessed, not certified"


# ---------------------------------------------------------------------------
# polynomial <-> nested coefficient arrays

def _nested(p: MPoly, pvars: Sequence[str]):
    if not pvars:
        return p.constant_value()
    rows = p.as_univariate(pvars[0])
    return [_nested(r, pvars[1:]) for r in rows]


def poly_to_doc(p: MPoly) -> dict:
    pvars = list(p.variables())
    return {"vars": pvars, "coeffs": _nested(p, pvars)}


def _unnest(node, pvars: Sequence[str]) -> MPoly:
    if not pvars:
        return MPoly.const(int(node))
    rows = [_unnest(c, pvars[1:]) for c in node]
    return MPoly.from_univariate(rows, pvars[0])


def poly_from_doc(d: dict) -> MPoly:
    return _unnest(d["coeffs"], list(d["vars"]))


def _frac_str(v: Fraction) -> str:
    return str(v)


# ---------------------------------------------------------------------------
# report pieces

@dataclass(frozen=True)
class CertificateSummary:
    """What the report keeps of a Certificate: status and the key numbers."""

    status: str                     # "proven" | "refuted" | "skipped"
    bound: int | None
    checked_order: int | None
    annihilator_support: int | None

    @classmethod
    def from_certificate(cls, c: Certificate) -> "CertificateSummary":
        return cls(c.status, c.bound, c.checkedOrder, c.annihilator_support)

    @classmethod
    def skipped(cls) -> "CertificateSummary":
        return cls("skipped", None, None, None)


@dataclass(frozen=True)
class ColumnReport:
    """Coefficient extraction at a fixed power of y, plus an uncertified guess."""

    index: int
    series: tuple[Fraction, ...]
    equation: MPoly | None          # None when the guesser returned FAIL


class Report:
    """Everything a pipeline run produced, ready for rendering."""

    __slots__ = ("equation", "p1", "p2", "certificate", "ode", "recurrence",
                 "minimized", "value", "series_prefix", "column",
                 "max_complexity", "timings_ms")

    def __init__(self, equation: str, p1: MPoly | None, p2: MPoly | None,
                 certificate: CertificateSummary, ode: LinODE | None,
                 recurrence: PRec | None, minimized, value: SequenceValue | None,
                 series_prefix: Sequence[Fraction], column: ColumnReport | None,
                 max_complexity: int, timings_ms: dict[str, int]):
        self.equation = equation
        self.p1 = p1
        self.p2 = p2
        self.certificate = certificate
        self.ode = ode
        self.recurrence = recurrence
        self.minimized = minimized          # PRec or ABSENT
        self.value = value
        self.series_prefix = tuple(Fraction(v) for v in series_prefix)
        self.column = column
        self.max_complexity = max_complexity
        self.timings_ms = dict(timings_ms)

    @property
    def proven(self) -> bool:
        return self.certificate.status == "proven"

    # -- structured form --------------------------------------------------

    def to_dict(self) -> dict:
        cert = {
            "status": self.certificate.status,
            "bound": self.certificate.bound,
            "checked_order": self.certificate.checked_order,
            "annihilator_support": self.certificate.annihilator_support,
        }
        ode = None
        if self.ode is not None:
            ode = {
                "vars": ["x"],
                "coeffs": [list(p) for p in self.ode.coeffs],
                "inhom": list(self.ode.inhom) if self.ode.inhom else None,
            }
        column = None
        if self.column is not None:
            column = {
                "index": self.column.index,
                "series": [_frac_str(v) for v in self.column.series],
                "equation": (poly_to_doc(self.column.equation)
                             if self.column.equation is not None else None),
                "label": COLUMN_LABEL,
            }
        value = None
        if self.value is not None:
            value = {
                "index": self.value.index,
                "integer_digits": (self.value.digits
                                   if self.value.is_integer else None),
                "decimal_string": str(self.value.value),
            }
        return {
            "format": FORMAT_MARKER,
            "version": FORMAT_VERSION,
            "equation": self.equation,
            "max_complexity": self.max_complexity,
            "p1": poly_to_doc(self.p1) if self.p1 is not None else None,
            "p2": poly_to_doc(self.p2) if self.p2 is not None else None,
            "certificate": cert,
            "ode": ode,
            "recurrence": _rec_to_doc(self.recurrence),
            "minimized_recurrence": _rec_to_doc(
                self.minimized if self.minimized is not ABSENT else None),
            "value": value,
            "series_prefix": [_frac_str(v) for v in self.series_prefix],
            "column": column,
            "timings_ms": dict(self.timings_ms),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        if d.get("format") != FORMAT_MARKER:
            raise ValueError("not a tuttesolve report document")
        if d.get("version") != FORMAT_VERSION:
            raise ValueError(f"unsupported report version {d.get('version')!r}")
        prefix = [Fraction(v) for v in d["series_prefix"]]
        branch = QSeries(prefix if prefix else [Fraction(0)])
        ode = None
        if d["ode"] is not None:
            ode = LinODE(d["ode"]["coeffs"], d["ode"]["inhom"] or (), branch)
        cert = CertificateSummary(
            d["certificate"]["status"], d["certificate"]["bound"],
            d["certificate"]["checked_order"],
            d["certificate"]["annihilator_support"])
        rec = _rec_from_doc(d["recurrence"])
        mini = _rec_from_doc(d["minimized_recurrence"])
        value = None
        if d["value"] is not None:
            value = SequenceValue(d["value"]["index"],
                                  Fraction(d["value"]["decimal_string"]))
        column = None
        if d["column"] is not None:
            column = ColumnReport(
                d["column"]["index"],
                tuple(Fraction(v) for v in d["column"]["series"]),
                (poly_from_doc(d["column"]["equation"])
                 if d["column"]["equation"] is not None else None))
        return cls(
            d["equation"],
            poly_from_doc(d["p1"]) if d["p1"] is not None else None,
            poly_from_doc(d["p2"]) if d["p2"] is not None else None,
            cert, ode, rec, mini if mini is not None else ABSENT, value,
            prefix, column, d["max_complexity"], d["timings_ms"])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Report):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self) -> str:
        return (f"Report(equation={self.equation!r}, "
                f"status={self.certificate.status!r})")


def _rec_to_doc(r) -> dict | None:
    if r is None or r is ABSENT:
        return None
    return {"coeffs": [list(q) for q in r.coeffs],
            "initials": [_frac_str(v) for v in r.initials]}


def _rec_from_doc(d: dict | None) -> PRec | None:
    if d is None:
        return None
    return PRec(d["coeffs"], [Fraction(v) for v in d["initials"]])


# ---------------------------------------------------------------------------
# rendering

def _tag(r: Report) -> str:
    return "" if r.proven else "(conjectural) "


def _value_lines(r: Report) -> tuple[str, list[str]]:
    """Main bullet line for the value plus appendix digit lines (maybe empty)."""
    v = r.value
    if v is None:
        return "not available", []
    name = f"a({v.index})"
    if not v.is_integer:
        return f"{name} = {v.value}", []
    if v.digits <= INLINE_DIGIT_LIMIT:
        return f"{name} = {v.value}", []
    lines = textwrap.wrap(str(v.value), width=70)
    return (f"{name} is an integer with {v.digits} digits "
            f"(full decimal expansion in the appendix)", lines)


def _cert_argument(r: Report) -> list[str]:
    c = r.certificate
    if c.status == "skipped":
        return ["Certification was skipped on request; every displayed object",
                "is a guess fitted to the computed series prefix."]
    if c.status == "refuted":
        return [f"Certification FAILED at order {c.checked_order}: the guessed",
                "equations do not annihilate the series there.  All displayed",
                "objects are conjectural."]
    return [
        "The defect of the guessed pair is annihilated by a polynomial",
        f"M(z, x, y) of monomial support {c.annihilator_support}.  The",
        f"Newton polygon of M in z gives vanishing bound B = {c.bound}:",
        "any series root of M with x-valuation exceeding B is identically",
        f"zero.  The expansion was checked through order N = {c.checked_order},",
        "chosen at least B plus both Hensel slacks, so",
        "the algebraic roots singled out by the checked prefixes exist,",
        "are unique, and their defect is a series root of M vanishing past",
        "every finite Newton slope.  The defect is therefore zero, and",
        "since the well-posedness analysis pins the series solution of the",
        "functional equation to the same prefix, the displayed equations",
        "hold identically.",
    ]


def _series_line(r: Report) -> str:
    return ", ".join(str(v) for v in r.series_prefix)


def _initials_line(rec: PRec) -> str:
    return ", ".join(f"a({i}) = {v}" for i, v in enumerate(rec.initials))


def _render_text(r: Report) -> str:
    out: list[str] = []
    push = out.append
    push("tuttesolve report")
    push("=" * 17)
    push("")
    push("Functional equation (Q = 0 with psi = psi(x, y), g = psi(x, 0)):")
    push(f"    {r.equation}")
    push("")
    if r.proven:
        push(f"Status: proven (checked order {r.certificate.checked_order}, "
             f"vanishing bound {r.certificate.bound})")
    else:
        push(f"Status: conjectural (certification {r.certificate.status})")
    push("")
    tag = _tag(r)
    push(f"1. {tag}Algebraic equation for g(x) = psi(x, 0), written in f = g(x):")
    push(f"       {r.p1.render() if r.p1 is not None else 'not available'}")
    push("")
    push(f"2. {tag}Algebraic equation for the full series psi = psi(x, y):")
    push(f"       {r.p2.render() if r.p2 is not None else 'not available'}")
    push("")
    push(f"3. {tag}Recurrence for the coefficients a(n) = [x^n] g(x):")
    if r.recurrence is not None:
        push(f"       {r.recurrence.render()}")
        push(f"       with {_initials_line(r.recurrence)}")
    else:
        push("       not available")
    if r.ode is not None:
        push(f"   Derived from the differential equation:")
        push(f"       {r.ode.render()}")
    if r.minimized is ABSENT:
        push(f"   Minimal form: no recurrence with order+degree <= "
             f"{r.max_complexity}")
    elif r.minimized is not None and r.minimized != r.recurrence:
        push(f"   Minimal form (order+degree <= {r.max_complexity}):")
        push(f"       {r.minimized.render()}")
        push(f"       with {_initials_line(r.minimized)}")
    push("")
    vline, digits = _value_lines(r)
    push(f"4. {tag}Exact sequence value:")
    push(f"       {vline}")
    push("")
    push(f"Series prefix a(0), a(1), ...:")
    push(f"    {_series_line(r)}")
    if r.column is not None:
        push("")
        push(f"Column m = {r.column.index} of psi (coefficients of y^{r.column.index}), "
             f"{COLUMN_LABEL}:")
        push("    " + ", ".join(str(v) for v in r.column.series))
        if r.column.equation is not None:
            push(f"    guessed equation: {r.column.equation.render()}")
        else:
            push("    no algebraic equation found within the bounds")
    push("")
    push("Appendix A. Certificate")
    push(f"    status: {r.certificate.status}")
    if r.certificate.bound is not None:
        push(f"    vanishing bound B: {r.certificate.bound}")
        push(f"    checked order N: {r.certificate.checked_order}")
        push(f"    defect annihilator support: "
             f"{r.certificate.annihilator_support}")
    for line in _cert_argument(r):
        push(f"    {line}")
    if digits:
        push("")
        push(f"Appendix B. Decimal digits of a({r.value.index})")
        for line in digits:
            push(f"    {line}")
    push("")
    push("Timings (ms): " + ", ".join(
        f"{k}={v}" for k, v in r.timings_ms.items()))
    return "\n".join(out) + "\n"


def _render_markdown(r: Report) -> str:
    out: list[str] = []
    push = out.append
    push("# tuttesolve report")
    push("")
    push("Functional equation (`Q = 0` with `psi = psi(x, y)`, `g = psi(x, 0)`):")
    push("")
    push(f"    {r.equation}")
    push("")
    if r.proven:
        push(f"**Status: proven** (checked order {r.certificate.checked_order}, "
             f"vanishing bound {r.certificate.bound})")
    else:
        push(f"**Status: conjectural** (certification {r.certificate.status})")
    push("")
    tag = _tag(r)
    push(f"1. {tag}Algebraic equation for `g(x) = psi(x, 0)`, written in `f = g(x)`:")
    push(f"   `{r.p1.render() if r.p1 is not None else 'not available'}`")
    push(f"2. {tag}Algebraic equation for the full series `psi = psi(x, y)`:")
    push(f"   `{r.p2.render() if r.p2 is not None else 'not available'}`")
    push(f"3. {tag}Recurrence for the coefficients `a(n) = [x^n] g(x)`:")
    if r.recurrence is not None:
        push(f"   `{r.recurrence.render()}`")
        push(f"   with {_initials_line(r.recurrence)}")
    else:
        push("   not available")
    if r.ode is not None:
        push(f"   derived from the differential equation "
             f"`{r.ode.render()}`")
    if r.minimized is ABSENT:
        push(f"   minimal form: no recurrence with order+degree <= "
             f"{r.max_complexity}")
    elif r.minimized is not None and r.minimized != r.recurrence:
        push(f"   minimal form (order+degree <= {r.max_complexity}): "
             f"`{r.minimized.render()}`")
        push(f"   with {_initials_line(r.minimized)}")
    vline, digits = _value_lines(r)
    push(f"4. {tag}Exact sequence value: {vline}")
    push("")
    push(f"Series prefix `a(0), a(1), ...`: {_series_line(r)}")
    if r.column is not None:
        push("")
        push(f"## Column m = {r.column.index} ({COLUMN_LABEL})")
        push("")
        push("Series: " + ", ".join(str(v) for v in r.column.series))
        if r.column.equation is not None:
            push(f"Guessed equation: `{r.column.equation.render()}`")
        else:
            push("No algebraic equation found within the bounds.")
    push("")
    push("## Appendix A. Certificate")
    push("")
    push(f"- status: {r.certificate.status}")
    if r.certificate.bound is not None:
        push(f"- vanishing bound B: {r.certificate.bound}")
        push(f"- checked order N: {r.certificate.checked_order}")
        push(f"- defect annihilator support: "
             f"{r.certificate.annihilator_support}")
    push("")
    for line in _cert_argument(r):
        push(line)
    if digits:
        push("")
        push(f"## Appendix B. Decimal digits of a({r.value.index})")
        push("")
        for line in digits:
            push(f"    {line}")
    push("")
    push("Timings (ms): " + ", ".join(
        f"{k}={v}" for k, v in r.timings_ms.items()))
    return "\n".join(out) + "\n"


def render_report(r: Report, format: str = "text") -> str:
    """Render a report as `text`, `markdown`, or `structured` (JSON)."""
    if format == "structured":
        return json.dumps(r.to_dict(), indent=2) + "\n"
    if format == "markdown":
        return _render_markdown(r)
    if format == "text":
        return _render_text(r)
    raise ValueError(f"unknown report format {format!r}")


def parse_report(text: str) -> Report:
    """Inverse of ``render_report(r, 'structured')``."""
    return Report.from_dict(json.loads(text))
