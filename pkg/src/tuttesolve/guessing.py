"""Guess an exact algebraic equation P(f, x) = 0 from series coefficients.

The fit is exact rational linear algebra over every available coefficient,
so a returned equation annihilates the whole input prefix by construction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import linalg, polyq
from .errors import InvalidBounds, ZeroPolynomial
from .mpoly import MPoly, squarefree_primitive
from .series import QSeries


class _Fail:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return "FAIL"


#: Falsy sentinel: no support within the degree bounds fits the series.
FAIL = _Fail()


def _fix_sign(P: MPoly) -> MPoly:
    # canonical sign: lowest x-coefficient of the top f-power block positive
    top = P.coeff_of("f", P.degree("f"))
    low = top.coeff_of("x", top.valuation("x"))
    return -P if low.constant_value() < 0 else P


class AlgEq:
    """Polynomial relation in {f, x} together with its series witness.

    The constructor only checks shape (nonzero, right variables); whether
    the relation actually annihilates the witness is the certifier's job,
    which must be able to receive wrong candidates and refute them.
    """

    __slots__ = ("P", "branch", "degF", "degX", "hensel")

    def __init__(self, P: MPoly, branch: QSeries):
        if P.is_zero:
            raise ZeroPolynomial("algebraic equation must be nonzero")
        extra = set(P.variables()) - {"f", "x"}
        if extra:
            raise ValueError(f"unexpected variables in algebraic equation: {sorted(extra)}")
        self.P = P
        self.branch = branch
        self.degF = P.degree("f")
        self.degX = P.degree("x")
        dP = P.derivative("f")
        s0 = branch[0]
        val = Fraction(0)
        for e, c in dP.terms.items():
            if e[4] == 0:  # exponent of x; only x=0 terms survive
                val += c * s0 ** e[2]  # exponent of f
        self.hensel = val != 0

    def render(self) -> str:
        return self.P.render()

    def __repr__(self) -> str:
        return f"AlgEq({self.P.render()})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgEq):
            return NotImplemented
        return self.P == other.P and self.branch == other.branch

    def __hash__(self) -> int:
        return hash((self.P, self.branch))


def _truncated_powers(s: Sequence[Fraction], top: int, L: int) -> list[list[Fraction]]:
    pows = [[Fraction(0)] * L for _ in range(top + 1)]
    pows[0][0] = Fraction(1)
    base = list(s[:L])
    for i in range(1, top + 1):
        prev = pows[i - 1]
        cur = pows[i]
        for a in range(L):
            pa = prev[a]
            if pa:
                for b in range(L - a):
                    cur[a + b] += pa * base[b]
    return pows


def _annihilates(P: MPoly, pows: list[list[Fraction]], L: int) -> bool:
    acc = [Fraction(0)] * L
    for e, c in P.terms.items():
        i, j = e[2], e[4]
        if j >= L:
            continue
        row = pows[i]
        for m in range(j, L):
            acc[m] += c * row[m - j]
    return not any(acc)


def guess_algeq(s: QSeries, maxDegF: int, maxDegX: int, margin: int = 6):
    """Search for integer κ with Σ κ_ij f^i x^j ≡ 0 mod x^len(s), f = s.

    Supports are tried in increasing (degF, degX); a support is only
    eligible when the coefficient count exceeds the unknown count by at
    least `margin`.  Returns the canonical squarefree annihilator as an
    AlgEq, or FAIL when no eligible support fits.
    """
    if maxDegF < 1 or maxDegX < 0 or margin < 4:
        raise InvalidBounds(
            f"need maxDegF >= 1, maxDegX >= 0, margin >= 4; got ({maxDegF}, {maxDegX}, {margin})"
        )
    L = len(s)
    pows = _truncated_powers(s.coeffs, maxDegF, L)
    for dF in range(1, maxDegF + 1):
        for dX in range(0, maxDegX + 1):
            unknowns = (dF + 1) * (dX + 1)
            if unknowns + margin > L:
                continue
            cols = [(i, j) for i in range(dF + 1) for j in range(dX + 1)]
            rows = []
            for m in range(L):
                rows.append([pows[i][m - j] if m >= j else Fraction(0) for (i, j) in cols])
            basis = linalg.nullspace(rows)
            if not basis:
                continue
            candidates = []
            for pos, v in enumerate(basis):
                ints, _ = polyq.clear_denominators(v)
                raw = MPoly.zero()
                for (i, j), c in zip(cols, ints):
                    if c:
                        raw = raw + MPoly.monomial(c, f=i, x=j)
                raw = raw.normalized()
                height = max(abs(c) for c in raw.terms.values())
                candidates.append(((raw.degree("f"), raw.degree("x"), height, pos), raw))
            candidates.sort(key=lambda t: t[0])
            for _, raw in candidates:
                if raw.degree("f") == 0:
                    continue
                P = _fix_sign(squarefree_primitive(raw, "f"))
                # squarefree reduction can weaken a truncated fit; re-verify
                if _annihilates(P, pows, L):
                    return AlgEq(P, s)
            continue
    return FAIL
