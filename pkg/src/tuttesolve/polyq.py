"""Dense univariate polynomial arithmetic over exact rationals and integers.

A polynomial is a plain list of coefficients, constant term first, with no
trailing zeros; the zero polynomial is the empty list.  Fraction-coefficient
lists and int-coefficient lists share the same layout, and the names below
follow a small convention: unprefixed helpers take Fraction lists, the
``i``-prefixed ones take int lists.

The module also provides :class:`RatFunc`, the canonical rational function
in one variable used as the coefficient domain of bivariate series, plus the
number-theoretic helpers (divisors, rational roots, Pade reconstruction)
needed by the series-branch search.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Iterable, Sequence


def trim(cs: list) -> list:
    while cs and not cs[-1]:
        cs.pop()
    return cs


def deg(p: Sequence) -> int:
    """Degree, with deg(0) = -1."""
    return len(p) - 1


def padd(a: Sequence, b: Sequence) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def pneg(a: Sequence) -> list:
    return [-c for c in a]


def psub(a: Sequence, b: Sequence) -> list:
    return padd(a, pneg(b))


def pscale(a: Sequence, s) -> list:
    if not s:
        return []
    return [c * s for c in a]


def pmul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return trim(out)


def ppow(a: Sequence, n: int) -> list:
    out = [1]
    base = list(a)
    while n:
        if n & 1:
            out = pmul(out, base)
        n >>= 1
        if n:
            base = pmul(base, base)
    return out


def peval(a: Sequence, x):
    out = 0
    for c in reversed(a):
        out = out * x + c
    return out


def pshift(a: Sequence, s) -> list:
    """Coefficients of a(t + s) via repeated synthetic division by (t - s)."""
    out = []
    work = trim(list(a))
    while work:
        q = [0] * (len(work) - 1)
        acc = work[-1]
        for i in range(len(work) - 2, -1, -1):
            q[i] = acc
            acc = work[i] + s * acc
        out.append(acc)
        work = trim(q)
    return trim(out)


def pderiv(a: Sequence) -> list:
    return trim([i * a[i] for i in range(1, len(a))])


def pdivmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    """Quotient and remainder over the fraction field.  b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in a]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = Fraction(b[-1])
    while len(r) >= len(b):
        c = r[-1] / lead
        k = len(r) - len(b)
        q[k] = c
        for i, bc in enumerate(b):
            r[k + i] -= c * bc
        trim_one = r.pop()
        assert not trim_one
        trim(r)
    return trim(q), r


def pmonic(a: Sequence) -> list:
    if not a:
        return []
    lead = a[-1]
    return [Fraction(c, 1) / lead for c in a]


# --- integer-coefficient helpers ---

def icontent(a: Iterable[int]) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def ipp(a: Sequence[int]) -> list[int]:
    """Primitive part with positive leading coefficient."""
    a = trim(list(a))
    if not a:
        return []
    g = icontent(a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def iprem(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b."""
    r = list(a)
    lb = b[-1]
    steps = len(a) - len(b) + 1
    for _ in range(steps):
        if len(r) < len(b):
            r = [c * lb for c in r]
            continue
        lr = r[-1]
        k = len(r) - len(b)
        r = [c * lb for c in r[:-1]]
        for i, bc in enumerate(b[:-1]):
            r[k + i] -= lr * bc
        trim(r)
        if not r:
            return []
    return r


def igcd_poly(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Gcd of integer polynomials, primitive with positive lead, content included."""
    a = trim(list(a))
    b = trim(list(b))
    if not a:
        return ipp(b)
    if not b:
        return ipp(a)
    cont = math.gcd(icontent(a), icontent(b))
    a, b = ipp(a), ipp(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, ipp(iprem(a, b))
    return [c * cont for c in a]


def clear_denominators(a: Sequence[Fraction]) -> tuple[list[int], Fraction]:
    """Write a Fraction polynomial as scale * (primitive int polynomial)."""
    a = trim([Fraction(c) for c in a])
    if not a:
        return [], Fraction(0)
    lcm = 1
    for c in a:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in a]
    g = icontent(ints)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints], Fraction(g, lcm)


def pgcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    """Monic gcd over the rationals (via primitive integer PRS)."""
    ia, _ = clear_denominators(a)
    ib, _ = clear_denominators(b)
    g = igcd_poly(ia, ib)
    return pmonic([Fraction(c) for c in g])


# --- integer factorization (for rational root candidates) ---

_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(0xC0FFEE ^ n)
    while True:
        c = rng.randrange(1, n)
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; n must be nonzero."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor zero")
    out: dict[int, int] = {}
    for p in range(2, 100000):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def int_divisors(n: int) -> list[int]:
    """Sorted positive divisors of |n| (n nonzero)."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def rational_roots(a: Sequence[int]) -> list[Fraction]:
    """All rational roots of an integer polynomial, without multiplicity.

    Complete by the rational root theorem; every candidate is verified by
    exact evaluation.
    """
    a = ipp(a)
    if len(a) <= 1:
        return []
    roots = []
    v = 0
    while not a[v]:
        v += 1
    if v:
        roots.append(Fraction(0))
        a = a[v:]
    if len(a) <= 1:
        return roots
    seen = set(roots)
    for p in int_divisors(a[0]):
        for q in int_divisors(a[-1]):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in seen:
                    continue
                seen.add(cand)
                if peval(a, cand) == 0:
                    roots.append(cand)
    roots.sort()
    return roots


def integer_roots(a: Sequence[int]) -> list[int]:
    return [int(r) for r in rational_roots(a) if r.denominator == 1]


def pade(series: Sequence[Fraction], dn: int, dd: int) -> tuple[list, list] | None:
    """Reconstruct p/q with deg p <= dn, deg q <= dd from dn+dd+1 series terms.

    Returns (p, q) with q(0) != 0 and p = q * series mod t^(dn+dd+1), or None
    when no such pair exists.  Uses the extended Euclidean scheme.
    """
    order = dn + dd + 1
    if len(series) < order:
        raise ValueError("not enough series terms for Pade reconstruction")
    s = trim([Fraction(c) for c in series[:order]])
    rm1 = [Fraction(0)] * order + [Fraction(1)]
    r0 = s
    vm1: list = []
    v0: list = [Fraction(1)]
    while r0 and deg(r0) > dn:
        q, r1 = pdivmod(rm1, r0)
        v1 = psub(vm1, pmul(q, v0))
        rm1, r0 = r0, r1
        vm1, v0 = v0, v1
    p, q = r0, v0
    if not q or deg(q) > dd:
        return None
    g = pgcd(p, q) if p else []
    if g and deg(g) > 0:
        p, _ = pdivmod(p, g)
        q, _ = pdivmod(q, g)
    if not q or not q[0]:
        return None
    check = pmul(q, s)
    if trim(check[:order]) != p:
        return None
    return p, q


def poly_str(a: Sequence, var: str) -> str:
    """Human-readable rendering, highest degree first."""
    if not a:
        return "0"
    parts = []
    for i in reversed(range(len(a))):
        c = a[i]
        if not c:
            continue
        if i == 0:
            mono = ""
        elif i == 1:
            mono = var
        else:
            mono = f"{var}^{i}"
        if mono and abs(c) == 1:
            body = mono
        elif mono:
            body = f"{abs(c)}*{mono}"
        else:
            body = f"{abs(c)}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class RatFunc:
    """A rational function in one variable, canonical form.

    Denominator is monic and coprime to the numerator, so equality is
    syntactic.  Instances are immutable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Sequence, den: Sequence = (Fraction(1),)):
        num = trim([Fraction(c) for c in num])
        den = trim([Fraction(c) for c in den])
        if not den:
            raise ZeroDivisionError("zero denominator in RatFunc")
        if not num:
            self.num: tuple = ()
            self.den: tuple = (Fraction(1),)
            return
        g = pgcd(num, den)
        if deg(g) > 0:
            num, _ = pdivmod(num, g)
            den, _ = pdivmod(den, g)
        lead = den[-1]
        self.num = tuple(c / lead for c in num)
        self.den = tuple(c / lead for c in den)

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls([Fraction(c)])

    @property
    def is_zero(self) -> bool:
        return not self.num

    @property
    def regular_at_0(self) -> bool:
        return bool(self.den[0])

    def eval0(self) -> Fraction:
        if not self.den[0]:
            raise ZeroDivisionError("rational function has a pole at 0")
        return (self.num[0] if self.num else Fraction(0)) / self.den[0]

    def evaluate(self, x: Fraction) -> Fraction:
        d = peval(self.den, x)
        if not d:
            raise ZeroDivisionError(f"pole at {x}")
        return peval(self.num, x) / d

    def series(self, order: int) -> list[Fraction]:
        """Taylor coefficients at 0 through the given order (inclusive)."""
        if not self.den[0]:
            raise ZeroDivisionError("rational function has a pole at 0")
        out = []
        rem = list(self.num) + [Fraction(0)] * (order + 1)
        d0 = self.den[0]
        for k in range(order + 1):
            c = rem[k] / d0
            out.append(c)
            if c:
                for j in range(1, min(len(self.den), order + 1 - k)):
                    rem[k + j] -= c * self.den[j]
        return out

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(
            padd(pmul(self.num, other.den), pmul(other.num, self.den)),
            pmul(self.den, other.den),
        )

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __neg__(self) -> "RatFunc":
        r = RatFunc.__new__(RatFunc)
        r.num = tuple(-c for c in self.num)
        r.den = self.den
        return r

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(pmul(self.num, other.num), pmul(self.den, other.den))

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.is_zero:
            raise ZeroDivisionError("division by zero RatFunc")
        return RatFunc(pmul(self.num, other.den), pmul(self.den, other.num))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def __str__(self) -> str:
        n = poly_str(self.num, "y") if self.num else "0"
        if self.den == (Fraction(1),):
            return n
        d = poly_str(self.den, "y")
        return f"({n})/({d})"


RATFUNC_ZERO = RatFunc([])
RATFUNC_ONE = RatFunc([Fraction(1)])
