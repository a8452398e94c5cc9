"""Exact rational nullspace via fraction-free (Bareiss) elimination."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence


def _int_row(row: Sequence[Fraction]) -> list[int]:
    lcm = 1
    for v in row:
        v = Fraction(v)
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    out = [int(Fraction(v) * lcm) for v in row]
    g = 0
    for v in out:
        g = math.gcd(g, v)
        if g == 1:
            break
    if g > 1:
        out = [v // g for v in out]
    return out


def nullspace(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right nullspace, one vector per free column.

    Deterministic: pivots are chosen first-nonzero scanning top down, and
    each basis vector has value 1 at its free column.
    """
    R = len(rows)
    if R == 0:
        raise ValueError("nullspace of an empty matrix is ambiguous")
    C = len(rows[0])
    M = [_int_row(r) for r in rows]
    piv_cols: list[int] = []
    prev = 1
    r = 0
    for c in range(C):
        pr = next((i for i in range(r, R) if M[i][c]), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        p = M[r][c]
        for i in range(r + 1, R):
            fi = M[i][c]
            M[i] = [(p * M[i][j] - fi * M[r][j]) // prev for j in range(C)]
        prev = p
        piv_cols.append(c)
        r += 1
        if r == R:
            break
    free_cols = [c for c in range(C) if c not in set(piv_cols)]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * C
        v[fc] = Fraction(1)
        # echelon back-substitution, bottom pivot row first
        for pr in range(len(piv_cols) - 1, -1, -1):
            pc = piv_cols[pr]
            acc = Fraction(0)
            for j in range(pc + 1, C):
                if v[j]:
                    acc += M[pr][j] * v[j]
            v[pc] = -acc / M[pr][pc]
        basis.append(v)
    return basis


def nullspace_field(rows, zero, one):
    """Right-nullspace basis over an arbitrary exact field.

    Elements need +, -, *, /, == and a falsy zero test via == zero.
    Same deterministic echelon construction as `nullspace`.
    """
    R = len(rows)
    if R == 0:
        raise ValueError("nullspace of an empty matrix is ambiguous")
    C = len(rows[0])
    M = [list(r) for r in rows]
    piv_cols: list[int] = []
    r = 0
    for c in range(C):
        pr = next((i for i in range(r, R) if not M[i][c] == zero), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = one / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(R):
            if i != r and not M[i][c] == zero:
                fi = M[i][c]
                M[i] = [a - fi * b for a, b in zip(M[i], M[r])]
        piv_cols.append(c)
        r += 1
        if r == R:
            break
    free_cols = [c for c in range(C) if c not in set(piv_cols)]
    basis = []
    for fc in free_cols:
        v = [zero] * C
        v[fc] = one
        for pr, pc in enumerate(piv_cols):
            if fc > pc:
                v[pc] = zero - M[pr][fc]
        basis.append(v)
    return basis
