"""Truncated power series in x over exact coefficient domains.

Public types: :class:`QSeries` (rational-number coefficients, the image of a
series at y = 0) and :class:`SeriesX` (coefficients are rational functions of
y, each regular at y = 0, enforced at construction).  ``series_eval``
substitutes truncated series into a polynomial with exact arithmetic.

The private ``_LocCtx``/``_Loc`` pair is the working representation used by
the expansion and certification loops: a coefficient is stored as
scale * n(y) / D(y)^e against a fixed denominator polynomial D, so the hot
path runs on integer convolutions and never reduces fractions.  Values are
converted to canonical :class:`RatFunc` form only at module boundaries.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from . import polyq
from .errors import PoleAtYZero
from .mpoly import MPoly
from .polyq import RatFunc


class QSeries:
    """Truncation of a univariate series; exactly order+1 rational entries."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs: tuple[Fraction, ...] = tuple(Fraction(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("QSeries needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def prefix(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError("prefix longer than the stored truncation")
        return QSeries(self.coeffs[: order + 1])

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if len(self.coeffs) > 8 else ""
        return f"QSeries([{shown}{tail}], order={self.order})"


class SeriesX:
    """Truncation in x with RatFunc-in-y coefficients, regular at y = 0."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatFunc]):
        cs = tuple(coeffs)
        if not cs:
            raise ValueError("SeriesX needs at least the constant term")
        for k, c in enumerate(cs):
            if not c.regular_at_0:
                raise PoleAtYZero(
                    f"coefficient of x^{k} has a pole at y = 0: {c}")
        self.coeffs = cs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i) -> RatFunc:
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesX):
            return NotImplemented
        return self.coeffs == other.coeffs

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    def prefix(self, order: int) -> "SeriesX":
        if order > self.order:
            raise ValueError("prefix longer than the stored truncation")
        return SeriesX(self.coeffs[: order + 1])

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:4])
        tail = ", ..." if len(self.coeffs) > 4 else ""
        return f"SeriesX([{shown}{tail}], order={self.order})"


def _mul_trunc_rf(a: Sequence[RatFunc], b: Sequence[RatFunc], K: int) -> list[RatFunc]:
    out = [polyq.RATFUNC_ZERO] * (K + 1)
    for i, ca in enumerate(a):
        if i > K or ca.is_zero:
            continue
        for j, cb in enumerate(b):
            if i + j > K:
                break
            if cb.is_zero:
                continue
            out[i + j] = out[i + j] + ca * cb
    return out


def series_eval(Q: MPoly, psi: SeriesX, g: QSeries, K: int) -> SeriesX:
    """Truncation to order K in x of Q(psi, g, x, y), exact.

    Both series must carry at least K+1 coefficients.  Pure reference
    implementation over canonical RatFunc coefficients; the expansion and
    certification engines use the localized representation instead.
    """
    if psi.order < K or g.order < K:
        raise ValueError("series truncations shorter than the target order")
    one = [polyq.RATFUNC_ONE] + [polyq.RATFUNC_ZERO] * K
    psi_pows: list[list[RatFunc]] = [one]
    dpsi = max(0, Q.degree("psi"))
    base_psi = [psi[i] for i in range(K + 1)]
    for _ in range(dpsi):
        psi_pows.append(_mul_trunc_rf(psi_pows[-1], base_psi, K))
    g_pows: list[list[RatFunc]] = [one]
    dg = max(0, Q.degree("g"))
    base_g = [RatFunc.const(g[i]) for i in range(K + 1)]
    for _ in range(dg):
        g_pows.append(_mul_trunc_rf(g_pows[-1], base_g, K))

    # group monomials of Q by their (psi, g) exponents
    grouped: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
    from .mpoly import VARS
    iv = {v: i for i, v in enumerate(VARS)}
    for e, c in Q.terms.items():
        a, b = e[iv["psi"]], e[iv["g"]]
        grouped.setdefault((a, b), []).append((e[iv["x"]], e[iv["y"]], c))
    out = [polyq.RATFUNC_ZERO] * (K + 1)
    for (a, b), mons in grouped.items():
        base = _mul_trunc_rf(psi_pows[a], g_pows[b], K)
        for i, j, c in mons:
            mono = RatFunc([Fraction(0)] * j + [Fraction(c)])
            for n in range(0, K + 1 - i):
                if base[n].is_zero:
                    continue
                out[n + i] = out[n + i] + base[n] * mono
    return SeriesX(out)


# --- localized coefficient engine (package internal) ---

class _LocCtx:
    """Fixed localization context: denominators are powers of one D(y)."""

    __slots__ = ("D", "val", "_powers")

    def __init__(self, D: Sequence[int]):
        D = polyq.trim(list(D))
        if not D:
            raise ZeroDivisionError("localization by the zero polynomial")
        if D[-1] < 0:
            D = [-c for c in D]
        self.D = D
        v = 0
        while not D[v]:
            v += 1
        self.val = v
        self._powers: dict[int, list[int]] = {0: [1], 1: list(D)}

    def power(self, e: int) -> list[int]:
        got = self._powers.get(e)
        if got is None:
            half = self.power(e // 2)
            got = polyq.pmul(half, half)
            if e % 2:
                got = polyq.pmul(got, self.D)
            self._powers[e] = got
        return got

    def zero(self) -> "_Loc":
        return _Loc(self, [], Fraction(1), 0)

    def from_fraction(self, c: Fraction) -> "_Loc":
        if not c:
            return self.zero()
        return _Loc(self, [1], Fraction(c), 0)

    def from_fpoly(self, coeffs: Sequence[Fraction]) -> "_Loc":
        ints, scale = polyq.clear_denominators(coeffs)
        if not ints:
            return self.zero()
        return _Loc(self, ints, scale, 0)

    def from_ratfunc(self, rf: RatFunc) -> "_Loc":
        """Represent num/den; den must divide a power of D."""
        if rf.is_zero:
            return self.zero()
        nint, nscale = polyq.clear_denominators(rf.num)
        dint, dscale = polyq.clear_denominators(rf.den)
        dfr = [Fraction(c) for c in dint]
        # if den | D^e at all, some e <= deg(den) works (every factor of
        # den divides D, multiplicities bounded by deg)
        for e in range(0, polyq.deg(dint) + 2):
            q, r = polyq.pdivmod([Fraction(c) for c in self.power(e)], dfr)
            if not r:
                cof, cscale = polyq.clear_denominators(q)
                return _Loc(self, polyq.pmul(nint, cof),
                            nscale * cscale / dscale, e)
        raise ArithmeticError(
            "denominator does not divide a power of the localization")


class _Loc:
    """Value scale * num(y) / D(y)^e; num is an int list, scale a Fraction."""

    __slots__ = ("ctx", "num", "scale", "e")

    def __init__(self, ctx: _LocCtx, num: list[int], scale: Fraction, e: int):
        self.ctx = ctx
        self.num = num
        self.scale = scale
        self.e = e

    @property
    def is_zero(self) -> bool:
        return not self.num

    def __add__(self, other: "_Loc") -> "_Loc":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        e = max(self.e, other.e)
        na = self.num if self.e == e else polyq.pmul(
            self.num, self.ctx.power(e - self.e))
        nb = other.num if other.e == e else polyq.pmul(
            other.num, self.ctx.power(e - other.e))
        sa, sb = self.scale, other.scale
        pg = math.gcd(sa.numerator, sb.numerator)
        ql = sa.denominator * sb.denominator // math.gcd(
            sa.denominator, sb.denominator)
        s = Fraction(pg, ql)
        ma = int(sa / s)
        mb = int(sb / s)
        out = [ma * c for c in na]
        if len(out) < len(nb):
            out.extend([0] * (len(nb) - len(out)))
        for i, c in enumerate(nb):
            out[i] += mb * c
        polyq.trim(out)
        if not out:
            return self.ctx.zero()
        return _Loc(self.ctx, out, s, e)

    def __neg__(self) -> "_Loc":
        return _Loc(self.ctx, self.num, -self.scale, self.e)

    def __sub__(self, other: "_Loc") -> "_Loc":
        return self + (-other)

    def __mul__(self, other: "_Loc") -> "_Loc":
        if self.is_zero or other.is_zero:
            return self.ctx.zero()
        return _Loc(self.ctx, polyq.pmul(self.num, other.num),
                    self.scale * other.scale, self.e + other.e)

    def scaled(self, c: Fraction) -> "_Loc":
        if not c or self.is_zero:
            return self.ctx.zero()
        return _Loc(self.ctx, self.num, self.scale * c, self.e)

    def val_y(self) -> int:
        """y-adic valuation; raises on zero."""
        if self.is_zero:
            raise ZeroDivisionError("valuation of zero")
        v = 0
        while not self.num[v]:
            v += 1
        return v - self.e * self.ctx.val

    def regular_at_0(self) -> bool:
        return self.is_zero or self.val_y() >= 0

    def y_coeff(self, m: int) -> Fraction:
        """Taylor coefficient of y^m at y = 0; requires regularity."""
        if self.is_zero:
            return Fraction(0)
        series = self.y_prefix(m)
        return series[m]

    def eval0(self) -> Fraction:
        return self.y_coeff(0)

    def y_prefix(self, m: int) -> list[Fraction]:
        """Taylor coefficients through y^m; requires regularity at 0."""
        if self.is_zero:
            return [Fraction(0)] * (m + 1)
        vnum = 0
        while not self.num[vnum]:
            vnum += 1
        vden = self.e * self.ctx.val
        if vnum < vden:
            raise PoleAtYZero("localized value has a pole at y = 0")
        den = self.ctx.power(self.e)
        ns = self.num[vnum:]
        ds = den[vden:] if vden else den
        shift = vnum - vden
        out = [Fraction(0)] * (m + 1)
        n = m + 1 - shift
        rem = [Fraction(c) for c in ns[:n]] + [Fraction(0)] * max(
            0, n - len(ns))
        d0 = Fraction(ds[0])
        for k in range(n):
            c = rem[k] / d0
            out[k + shift] = c * self.scale
            if c:
                for j in range(1, min(len(ds), n - k)):
                    rem[k + j] -= c * ds[j]
        return out

    def to_ratfunc(self) -> RatFunc:
        if self.is_zero:
            return polyq.RATFUNC_ZERO
        num = [c * self.scale for c in self.num]
        return RatFunc(num, [Fraction(c) for c in self.ctx.power(self.e)])

    def __repr__(self) -> str:
        return f"_Loc({self.to_ratfunc()})"
