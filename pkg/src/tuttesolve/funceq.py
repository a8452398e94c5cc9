"""Functional equations Q(psi(x,y), psi(x,0), x, y) = 0.

``check_well_posed`` finds the unique admissible order-0 branch and the
kernel data; ``expand_series`` solves order by order for the coefficients
c_k(y); ``specialize_y0`` reads off the diagonal sequence c_k(0).

Per-order structure: writing the partial sum psi_<k = sum c_i x^i and the
x^k coefficient of Q(psi_<k + c_k x^k, ...) as A(y) c_k(y) + B(y) c_k(0) +
N_k(y) = 0 with A = dQ/dpsi and B = dQ/dg frozen at order 0, the coupled
unknowns (c_k, c_k(0)) are resolved by one of two admissible modes:

* direct: A(0) + B(0) != 0 fixes c_k(0), then c_k = -(B c_k(0) + N_k)/A;
* simple kernel: A(0) = B(0) = 0 with A vanishing to order exactly 1 at
  y = 0 and A'(0) + B'(0) != 0; the y^1 coefficient of the identity then
  fixes c_k(0).

A(0) + B(0) = 0 with A(0) != 0 leaves the pair underdetermined (or
inconsistent) at every order, and higher-order kernel vanishing is out of
scope; both are rejected as DegenerateKernel up front.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Sequence

from . import polyq
from .errors import (
    AmbiguousBranch,
    DegenerateKernel,
    NoSeriesBranch,
    PoleAtYZero,
)
from .mpoly import MPoly, VARS
from .polyq import RatFunc
from .series import QSeries, SeriesX, _Loc, _LocCtx

_ALLOWED = {"psi", "g", "x", "y"}


class FuncEq:
    """A polynomial functional equation; Q must involve psi."""

    __slots__ = ("Q",)

    def __init__(self, Q: MPoly):
        if Q.is_zero:
            raise ValueError("the zero polynomial is not a functional equation")
        extra = set(Q.variables()) - _ALLOWED
        if extra:
            raise ValueError(f"unsupported variables in equation: {sorted(extra)}")
        if Q.degree("psi") < 1:
            raise ValueError("equation does not involve psi")
        self.Q = Q

    def render(self) -> str:
        return self.Q.render()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FuncEq):
            return NotImplemented
        return self.Q == other.Q

    def __repr__(self) -> str:
        return f"FuncEq({self.render()})"


class WellPosedness:
    """Witness data for a well-posed equation."""

    __slots__ = ("c0", "kernelA", "kernelB", "kernelValuation", "mode")

    def __init__(self, c0: RatFunc, kernelA: RatFunc, kernelB: RatFunc,
                 kernelValuation: int, mode: str):
        self.c0 = c0
        self.kernelA = kernelA
        self.kernelB = kernelB
        self.kernelValuation = kernelValuation
        self.mode = mode

    @property
    def gamma0(self) -> Fraction:
        return self.c0.eval0()

    def __repr__(self) -> str:
        return (f"WellPosedness(c0={self.c0}, kernelA={self.kernelA}, "
                f"kernelB={self.kernelB}, valuation={self.kernelValuation})")


# --- order-0 branch search -------------------------------------------------
#
# The order-0 equation R(c, gamma, y) = Q(c, gamma, 0, y) = 0 couples a
# rational function c(y) with gamma = c(0).  Roots are found without a
# factorization engine: specialize y at a sample point keeping the
# polynomial squarefree of full degree, take the rational roots there,
# Newton-lift each to a power series, reconstruct a rational function by
# Pade approximation, and verify the candidate exactly.  Completeness: a
# rational-function root is regular at the sample point (its denominator
# divides the leading coefficient, nonzero there) and distinct roots take
# distinct values there (discriminant nonzero), so every root is hit.

def _fpoly_from_bivar(R: MPoly, gval: Fraction | None) -> list[list[Fraction]]:
    """Coefficients [psi-power][y-power] of R with g := gval substituted."""
    dc = R.degree("psi")
    dy = max(0, R.degree("y"))
    out = [[Fraction(0)] * (dy + 1) for _ in range(dc + 1)]
    ip, ig, iy = VARS.index("psi"), VARS.index("g"), VARS.index("y")
    for e, c in R.terms.items():
        v = Fraction(c)
        if e[ig]:
            if gval is None:
                raise ValueError("unexpected g exponent")
            v *= gval ** e[ig]
        out[e[ip]][e[iy]] += v
    return out


def _trunc_mul(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * n
    for i, ca in enumerate(a[:n]):
        if ca:
            for j, cb in enumerate(b[: n - i]):
                if cb:
                    out[i + j] += ca * cb
    return out


def _series_inv(a: Sequence[Fraction], n: int) -> list[Fraction]:
    inv = [Fraction(1) / a[0]]
    while len(inv) < n:
        m = min(2 * len(inv), n)
        t = _trunc_mul(a, inv, m)
        t[0] -= 2
        inv = [-c for c in _trunc_mul(inv, t, m)]
    return inv


def _eval_c_series(coeffs: list[list[Fraction]], c: list[Fraction],
                   n: int) -> list[Fraction]:
    """Evaluate sum_i coeffs[i](t) * c(t)^i truncated to order n (Horner)."""
    acc = [Fraction(0)] * n
    for row in reversed(coeffs):
        acc = _trunc_mul(acc, c, n)
        for j, v in enumerate(row[:n]):
            acc[j] += v
    return acc


def _newton_lift(coeffs_t: list[list[Fraction]], r0: Fraction,
                 order: int) -> list[Fraction]:
    """Series root of sum coeffs_t[i](t) c^i with c(0) = r0, simple root."""
    dcoeffs = [[c * i for c in row] for i, row in enumerate(coeffs_t)][1:]
    c = [r0]
    prec = 1
    while prec < order + 1:
        prec = min(2 * prec, order + 1)
        cpad = c + [Fraction(0)] * (prec - len(c))
        val = _eval_c_series(coeffs_t, cpad, prec)
        der = _eval_c_series(dcoeffs, cpad, prec)
        inv = _series_inv(der, prec)
        step = _trunc_mul(val, inv, prec)
        c = [cv - sv for cv, sv in zip(cpad, step)]
    return c


def _ratfunc_roots(P: list[list[Fraction]]) -> list[RatFunc]:
    """All rational-function roots c(y) of sum_i P[i](y) c^i = 0."""
    # squarefree + primitive reduction through the integer layer
    terms: dict[tuple, int] = {}
    lcm = 1
    for row in P:
        for v in row:
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ip, iy = VARS.index("psi"), VARS.index("y")
    for i, row in enumerate(P):
        for l, v in enumerate(row):
            n = int(v * lcm)
            if n:
                e = [0] * len(VARS)
                e[ip], e[iy] = i, l
                terms[tuple(e)] = n
    A = MPoly(terms)
    if A.degree("psi") < 1:
        return []
    from .mpoly import squarefree_primitive
    S = squarefree_primitive(A, "psi")
    if S.degree("psi") < 1:
        return []
    rows = _fpoly_from_bivar(S, None)
    dC = len(rows) - 1
    dY = max(len(polyq.trim(list(r))) - 1 for r in rows if any(r))
    dY = max(dY, 0)
    sample = None
    for a in itertools.chain([0], (s * v for v in range(1, 200) for s in (1, -1))):
        spec = polyq.trim([polyq.peval(row, Fraction(a)) for row in rows])
        if len(spec) - 1 != dC:
            continue
        ispec, _ = polyq.clear_denominators(spec)
        der = polyq.trim([c * i for i, c in enumerate(ispec)][1:])
        if len(polyq.igcd_poly(ispec, der)) == 1:
            sample = Fraction(a)
            spec_poly = spec
            break
    if sample is None:
        raise DegenerateKernel(
            "could not find a regular sample point for the order-0 branch search")
    out: list[RatFunc] = []
    shifted = [polyq.pshift(row, sample) for row in rows]
    order = 2 * dY + 2
    spec_int, _ = polyq.clear_denominators(spec_poly)
    for r0 in polyq.rational_roots(spec_int):
        series = _newton_lift(shifted, r0, order)
        pq = polyq.pade(series, dY, dY)
        if pq is None:
            continue
        num, den = pq
        cand = RatFunc(polyq.pshift(num, -sample), polyq.pshift(den, -sample))
        # exact verification against the original (pre-reduction) polynomial
        total = polyq.RATFUNC_ZERO
        power = polyq.RATFUNC_ONE
        for row in P:
            total = total + RatFunc(list(row)) * power
            power = power * cand
        if total.is_zero and cand not in out:
            out.append(cand)
    return out


def _eval_at_branch(m: MPoly, c0: RatFunc, g0: Fraction) -> RatFunc:
    """Evaluate an MPoly in (psi, g, y) at psi = c0(y), g = g0."""
    rows = _fpoly_from_bivar(m, g0) if m.degree("g") >= 1 else _fpoly_from_bivar(m, None)
    total = polyq.RATFUNC_ZERO
    power = polyq.RATFUNC_ONE
    for row in rows:
        total = total + RatFunc(list(row)) * power
        power = power * c0
    return total


def check_well_posed(eq: FuncEq) -> WellPosedness:
    """Find the unique admissible branch and classify the per-order solve."""
    R = eq.Q.subs_int({"x": 0})
    if R.degree("psi") < 1:
        if R.is_zero:
            raise DegenerateKernel(
                "order-0 equation vanishes identically; branch undetermined")
        raise NoSeriesBranch("order-0 equation has no root in psi")
    pairs: list[tuple[RatFunc, Fraction]] = []
    if R.degree("g") >= 1:
        # consistency polynomial in the shared constant gamma = c(0)
        T: list[Fraction] = []
        ip, ig, iy = VARS.index("psi"), VARS.index("g"), VARS.index("y")
        for e, c in R.terms.items():
            if e[iy]:
                continue
            d = e[ip] + e[ig]
            if d >= len(T):
                T.extend([Fraction(0)] * (d + 1 - len(T)))
            T[d] += c
        if not polyq.trim(T):
            raise DegenerateKernel(
                "order-0 consistency polynomial vanishes identically")
        t_int, _ = polyq.clear_denominators(T)
        for gv in polyq.rational_roots(t_int):
            rows = _fpoly_from_bivar(R, gv)
            if not any(any(r) for r in rows):
                raise DegenerateKernel(
                    f"order-0 equation vanishes identically at branch value {gv}")
            for cand in _ratfunc_roots(rows):
                if cand.regular_at_0 and cand.eval0() == gv:
                    if all(cand != p[0] for p in pairs):
                        pairs.append((cand, gv))
    else:
        rows = _fpoly_from_bivar(R, None)
        for cand in _ratfunc_roots(rows):
            if cand.regular_at_0:
                pairs.append((cand, cand.eval0()))
    if not pairs:
        raise NoSeriesBranch(
            "no rational-function root of the order-0 equation is regular at y=0")
    if len(pairs) > 1:
        raise AmbiguousBranch(
            f"{len(pairs)} admissible order-0 branches: "
            + ", ".join(str(p[0]) for p in pairs))
    c0, g0 = pairs[0]
    x0 = {"x": 0}
    A = _eval_at_branch(eq.Q.derivative("psi").subs_int(x0), c0, g0)
    B = _eval_at_branch(eq.Q.derivative("g").subs_int(x0), c0, g0)
    if A.is_zero:
        raise DegenerateKernel("kernel dQ/dpsi vanishes identically on the branch")
    a0 = A.eval0()
    b0 = B.eval0()
    s = a0 + b0
    if s != 0:
        mode = "direct"
    elif a0 != 0:
        # one scalar equation 0*c_k(0) = -N_k(0): never uniquely solvable
        raise DegenerateKernel(
            "kernel sum A(0)+B(0) vanishes while A(0) does not; the per-order "
            "solve is underdetermined or inconsistent at every order")
    else:
        if A.series(1)[1] == 0:
            raise DegenerateKernel(
                "kernel A vanishes to order >= 2 at y=0 (unsupported multiplicity)")
        if (A + B).series(1)[1] == 0:
            raise DegenerateKernel(
                "solvability function A+B vanishes to order >= 2 at y=0")
        mode = "kernel"
    return WellPosedness(c0, A, B, 0 if mode == "direct" else 1, mode)


# --- series expansion ------------------------------------------------------

class _Expander:
    """Taylor-jet engine: carries the x-coefficients of every normalized
    mixed partial of Q at the current partial sums, over localized
    coefficients with the fixed denominator D = den(c0) * num(A)."""

    def __init__(self, eq: FuncEq, wp: WellPosedness, K: int):
        self.K = K
        self.wp = wp
        Q = eq.Q
        self.dpsi = Q.degree("psi")
        self.dg = max(0, Q.degree("g"))
        q_int, _ = polyq.clear_denominators(wp.c0.den)
        an_int, an_scale = polyq.clear_denominators(wp.kernelA.num)
        ad_int, ad_scale = polyq.clear_denominators(wp.kernelA.den)
        self.ctx = _LocCtx(polyq.pmul(q_int, an_int))
        self._div_num = polyq.pmul(ad_int, q_int)
        self._div_scale = ad_scale / an_scale
        # normalized partials T[i][j] = d^i_psi d^j_g Q / (i! j!)
        T: list[list[MPoly]] = [[Q]]
        for i in range(1, self.dpsi + 1):
            T.append([T[i - 1][0].derivative("psi").divexact(MPoly.const(i))])
        for i in range(self.dpsi + 1):
            for j in range(1, self.dg + 1):
                T[i].append(T[i][j - 1].derivative("g").divexact(MPoly.const(j)))
        g0 = wp.gamma0
        self.J: dict[tuple[int, int], list[_Loc]] = {}
        for i in range(self.dpsi + 1):
            for j in range(self.dg + 1):
                xs = T[i][j].as_univariate("x")
                row = [self.ctx.zero()] * (K + 1)
                for m, cm in enumerate(xs[: K + 1]):
                    if not cm.is_zero:
                        row[m] = self.ctx.from_ratfunc(
                            _eval_at_branch(cm, wp.c0, g0))
                self.J[(i, j)] = row
        self.order_ij = sorted(self.J, key=lambda ij: (ij[0] + ij[1], ij))
        self.a_val0 = wp.kernelA.eval0()
        self.b_val0 = wp.kernelB.eval0()
        self.s_val = self.a_val0 + self.b_val0
        if wp.mode == "kernel":
            self.t_val = wp.kernelA.series(1)[1] + wp.kernelB.series(1)[1]

    def _div_by_a(self, v: _Loc) -> _Loc:
        if v.is_zero:
            return v
        return _Loc(self.ctx, polyq.pmul(v.num, self._div_num),
                    v.scale * self._div_scale, v.e + 1)

    def solve_order(self, k: int) -> tuple[_Loc, Fraction]:
        N = self.J[(0, 0)][k]
        B = self.J[(0, 1)][0] if self.dg else self.ctx.zero()
        if self.wp.mode == "direct":
            gam = -N.eval0() / self.s_val
        else:
            if N.eval0() != 0:
                raise DegenerateKernel(
                    f"order {k}: constant term N_k(0) = {N.eval0()} != 0 "
                    "in the kernel mode; no solution")
            gam = -N.y_coeff(1) / self.t_val
        numer = (B.scaled(gam) + N) if self.dg else N
        ck = self._div_by_a(numer.scaled(Fraction(-1)))
        if not ck.regular_at_0():
            raise PoleAtYZero(
                f"coefficient of x^{k} has a pole at y = 0; "
                "the equation does not define a power series")
        if ck.eval0() != gam:
            raise DegenerateKernel(
                f"order {k}: computed c_k(0) = {ck.eval0()} conflicts with "
                f"the solved value {gam}")
        return ck, gam

    def apply_order(self, k: int, ck: _Loc, gam: Fraction) -> None:
        K = self.K
        cpow = [None, ck]
        for a in range(2, self.dpsi + 1):
            cpow.append(cpow[-1] * ck)
        gpow = [Fraction(1)]
        for b in range(self.dg):
            gpow.append(gpow[-1] * gam)
        for (i, j) in self.order_ij:
            row = self.J[(i, j)]
            for a in range(self.dpsi - i + 1):
                for b in range(self.dg - j + 1):
                    if a == 0 and b == 0:
                        continue
                    step = k * (a + b)
                    if step > K:
                        continue
                    src = self.J[(i + a, j + b)]
                    coef = (math.comb(i + a, a)
                            * math.comb(j + b, b)) * gpow[b]
                    if coef == 0:
                        continue
                    if a == 0:
                        for m in range(step, K + 1):
                            v = src[m - step]
                            if not v.is_zero:
                                row[m] = row[m] + v.scaled(coef)
                    else:
                        mult = cpow[a].scaled(coef)
                        for m in range(step, K + 1):
                            v = src[m - step]
                            if not v.is_zero:
                                row[m] = row[m] + v * mult
        assert self.J[(0, 0)][k].is_zero, "order-k defect must vanish"


def expand_series(eq: FuncEq, K: int) -> SeriesX:
    """Solve for c_0(y), ..., c_K(y) with Q annihilated to order K."""
    if K < 0:
        raise ValueError("negative expansion order")
    wp = check_well_posed(eq)
    eng = _Expander(eq, wp, K)
    coeffs = [wp.c0]
    for k in range(1, K + 1):
        ck, gam = eng.solve_order(k)
        eng.apply_order(k, ck, gam)
        coeffs.append(ck.to_ratfunc())
    return SeriesX(coeffs)


def specialize_y0(s: SeriesX) -> QSeries:
    """The sequence c_k(0) (Step: plug in y = 0)."""
    vals = []
    for k, c in enumerate(s):
        if not c.regular_at_0:
            raise PoleAtYZero(f"coefficient of x^{k} has a pole at y = 0")
        vals.append(c.eval0())
    return QSeries(vals)
