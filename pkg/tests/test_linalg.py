"""Exact nullspace computations used by the guessers."""

from __future__ import annotations

import random
from fractions import Fraction as F

from tuttesolve.linalg import nullspace, nullspace_field
from tuttesolve.polyq import RATFUNC_ONE, RATFUNC_ZERO, RatFunc


def rank_of(rows):
    m = [list(r) for r in rows]
    rank, cols = 0, len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = F(1) / m[rank][c]
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                fac = m[r][c]
                m[r] = [v - fac * w for v, w in zip(m[r], m[rank])]
        rank += 1
    return rank


def test_simple_kernel():
    rows = [[F(1), F(1), F(0)], [F(0), F(0), F(1)]]
    basis = nullspace(rows)
    assert len(basis) == 1
    v = basis[0]
    assert v[2] == 0 and v[0] == -v[1] and any(v)


def test_full_rank_has_trivial_kernel():
    rows = [[F(2), F(1)], [F(1), F(1)]]
    assert nullspace(rows) == []


def test_randomized_rank_nullity_and_annihilation():
    rng = random.Random(20260815)
    for _ in range(150):
        n = rng.randint(1, 5)
        m = rng.randint(1, 5)
        rows = [[F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(m)]
                for _ in range(n)]
        basis = nullspace(rows)
        assert len(basis) == m - rank_of(rows)
        for v in basis:
            assert any(v)
            for r in rows:
                assert sum(a * b for a, b in zip(r, v)) == 0


def test_deterministic_echelon_output():
    rows = [[F(1), F(2), F(3)]]
    b1 = nullspace(rows)
    b2 = nullspace([list(r) for r in rows])
    assert b1 == b2
    # one basis vector per free column, marked with a 1
    assert len(b1) == 2
    assert b1[0][1] == 1 and b1[1][2] == 1


def test_field_nullspace_over_rational_functions():
    yv = RatFunc([F(0), F(1)])
    rows = [[RATFUNC_ONE, yv, RATFUNC_ZERO],
            [RATFUNC_ZERO, RATFUNC_ZERO, RATFUNC_ONE]]
    basis = nullspace_field(rows, RATFUNC_ZERO, RATFUNC_ONE)
    assert len(basis) == 1
    v = basis[0]
    assert v[2].is_zero
    # first row: v0 + y*v1 = 0
    assert (v[0] + yv * v[1]).is_zero


def test_field_nullspace_matches_fraction_version():
    rng = random.Random(7)
    for _ in range(40):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        data = [[F(rng.randint(-5, 5)) for _ in range(m)] for _ in range(n)]
        b_frac = nullspace(data)
        rows = [[RatFunc([c]) if c else RATFUNC_ZERO for c in r] for r in data]
        b_field = nullspace_field(rows, RATFUNC_ZERO, RATFUNC_ONE)
        assert len(b_frac) == len(b_field)
        for vf, vr in zip(b_frac, b_field):
            for cf, cr in zip(vf, vr):
                want = RatFunc([cf]) if cf else RATFUNC_ZERO
                assert cr == want
