"""Exact real-root decisions: Sturm counts, real-rootedness, interlacing.

Everything runs over the integers or :class:`fractions.Fraction`; no floating
point is involved.  The interlacing relation ``g << f`` is the weak one (shared
roots allowed) and is decided through the Wronskian test

    g << f   iff   f'g - fg' >= 0 on the real line,

for real-rooted ``f, g`` with positive leading coefficients whose degrees
differ by 0 or 1.  The anchor case is g = 1, f = z + 1, where the Wronskian is
the constant 1.  :func:`interlaces_by_roots` decides the same relation a
second way, by isolating roots and checking the alternation chain directly.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional, Sequence

from eulerpoly.errors import DomainError
from eulerpoly.polycore import ONE, IntPoly

Interval = tuple[Fraction, Fraction]


# integer remainder helpers (internal)


def _prem(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    """A positive integer multiple of the remainder of a by b.

    Each elimination step scales the running dividend by |lc(b)|, so the
    result differs from the true remainder by a positive factor only, which
    is all that Sturm sign sequences and gcds need.
    """
    a = list(a)
    db = len(b) - 1
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    lb = b[-1]
    sb = 1 if lb > 0 else -1
    alb = abs(lb)
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        a = [x * alb for x in a]
        # subtract (c * sign(lb)) z^shift b, which cancels the scaled top term
        f = c * sb
        for j in range(db + 1):
            a[shift + j] -= f * b[j]
        while a and not a[-1]:
            a.pop()
        if a:
            g = 0
            for x in a:
                g = gcd(g, x)
                if g == 1:
                    break
            if g > 1:
                a = [x // g for x in a]
    return IntPoly(a)


def primitive(f: IntPoly) -> IntPoly:
    """Primitive part with positive leading coefficient."""
    if not f:
        return f
    g = f.content()
    if f.lc < 0:
        g = -g
    return IntPoly(c // g for c in f.coeffs)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Greatest common divisor, primitive with positive leading coefficient."""
    if not a:
        return primitive(b)
    if not b:
        return primitive(a)
    x, y = primitive(a), primitive(b)
    while y:
        x, y = y, primitive(_prem(x.coeffs, y.coeffs))
    return primitive(x)


def exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient a / b, which must be exact and integral."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    lb = b.lc
    q = [0] * max(len(rem) - db, 0)
    for k in range(len(rem) - 1 - db, -1, -1):
        c, r = divmod(rem[k + db], lb)
        if r:
            raise DomainError(f"{b} does not divide {a} over the integers")
        q[k] = c
        if c:
            for j in range(db + 1):
                rem[k + j] -= c * b.coeffs[j]
    if any(rem):
        raise DomainError(f"{b} does not divide {a}")
    return IntPoly(q)


@lru_cache(maxsize=4096)
def square_free_part(f: IntPoly) -> IntPoly:
    """f / gcd(f, f'), primitive with positive leading coefficient."""
    if not f:
        raise DomainError("square-free part of the zero polynomial")
    return primitive(exact_div(f, poly_gcd(f, f.derivative())))


def square_free_decomposition(f: IntPoly) -> list[tuple[IntPoly, int]]:
    return list(_yun(f))


@lru_cache(maxsize=4096)
def _yun(f: IntPoly) -> tuple[tuple[IntPoly, int], ...]:
    """Yun's algorithm: nonconstant square-free factors with their multiplicities.

    The factors are primitive with positive leading coefficients and pairwise
    coprime; f equals their product up to a constant.
    """
    if not f:
        raise DomainError("square-free decomposition of the zero polynomial")
    out = []
    if f.degree == 0:
        return ()
    df = f.derivative()
    a0 = poly_gcd(f, df)
    b = exact_div(f, a0)
    c = exact_div(df, a0)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = exact_div(b, a)
        c = exact_div(d, a)
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a, i))
        i += 1
    return tuple(out)


# Sturm machinery


def sign_at(f: IntPoly, x) -> int:
    """Sign of f(x) for x an int, a Fraction, or +/- infinity (as floats)."""
    if not f:
        return 0
    if x == float("inf"):
        return 1 if f.lc > 0 else -1
    if x == float("-inf"):
        s = 1 if f.lc > 0 else -1
        return s if f.degree % 2 == 0 else -s
    x = Fraction(x)
    p, q = x.numerator, x.denominator
    d = len(f.coeffs) - 1
    val = 0
    pk, qk = 1, q**d
    for c in f.coeffs:
        val += c * pk * qk
        pk *= p
        qk //= q
    return (val > 0) - (val < 0)


def sturm_chain(f: IntPoly) -> list[IntPoly]:
    """f, f', -rem(f, f'), ... each rescaled by a positive rational."""
    return list(_sturm_chain(f))


@lru_cache(maxsize=4096)
def _sturm_chain(f: IntPoly) -> tuple[IntPoly, ...]:
    chain = [f, f.derivative()]
    while chain[-1]:
        r = _prem(chain[-2].coeffs, chain[-1].coeffs)
        if not r:
            break
        chain.append(-r)
    return tuple(p for p in chain if p)


def _variations(chain: Sequence[IntPoly], x) -> int:
    signs = [s for s in (sign_at(p, x) for p in chain) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def sturm_count(f: IntPoly, interval: Optional[Interval] = None) -> int:
    """Number of distinct real roots of f on the real line or in (a, b]."""
    if not f:
        raise DomainError("root count of the zero polynomial")
    if f.degree == 0:
        return 0
    chain = _sturm_chain(square_free_part(f))
    if interval is None:
        lo, hi = float("-inf"), float("inf")
    else:
        lo, hi = Fraction(interval[0]), Fraction(interval[1])
        if lo >= hi:
            return 0
    return _variations(chain, lo) - _variations(chain, hi)


def root_bound(f: IntPoly) -> Fraction:
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    lc = abs(f.lc)
    return 1 + max((Fraction(abs(c), lc) for c in f.coeffs[:-1]), default=Fraction(0))


def isolate_real_roots(f: IntPoly) -> list[Interval]:
    """Disjoint half-open intervals (a, b], ascending, one per distinct real root."""
    if not f:
        raise DomainError("root isolation of the zero polynomial")
    if f.degree == 0:
        return []
    sq = square_free_part(f)
    chain = _sturm_chain(sq)
    bound = root_bound(sq)
    out: list[Interval] = []
    stack = [(-bound, bound, _variations(chain, -bound), _variations(chain, bound))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        n = vlo - vhi
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        vmid = _variations(chain, mid)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi, vmid, vhi))
    out.sort()
    return out


def is_real_rooted(f: IntPoly) -> bool:
    """Zero, constants, and polynomials whose roots are all real (with multiplicity)."""
    if not f or f.degree == 0:
        return True
    sq = square_free_part(f)
    return sturm_count(sq) == sq.degree


def is_nonnegative_on_reals(f: IntPoly) -> bool:
    if not f:
        return True
    if f.lc < 0 or f.degree % 2:
        return False
    if f.degree == 0:
        return True
    odd = ONE
    for factor, mult in square_free_decomposition(f):
        if mult % 2:
            odd = odd * factor
    return odd.degree == 0 or sturm_count(odd) == 0


# interlacing


class Reason(str, enum.Enum):
    OK = "ok"
    NOT_REAL_ROOTED_LEFT = "not-real-rooted-left"
    NOT_REAL_ROOTED_RIGHT = "not-real-rooted-right"
    DEGREE_GAP = "degree-gap"
    LEADING_SIGN = "leading-sign"
    WRONSKIAN_SIGN = "wronskian-sign"


@dataclass(frozen=True)
class InterlacingVerdict:
    holds: bool
    reason: Reason
    pair: Optional[tuple[int, int]] = None

    def __post_init__(self):
        if self.holds != (self.reason is Reason.OK):
            raise ValueError("holds must be true exactly when reason is ok")

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {"holds": self.holds, "reason": self.reason.value}


OK = InterlacingVerdict(True, Reason.OK)


def _fail(reason: Reason) -> InterlacingVerdict:
    return InterlacingVerdict(False, reason)


def wronskian(g: IntPoly, f: IntPoly) -> IntPoly:
    """f'g - fg'; nonnegative everywhere when g << f."""
    return f.derivative() * g - f * g.derivative()


def interlaces(g: IntPoly, f: IntPoly) -> InterlacingVerdict:
    """Decide g << f."""
    if not is_real_rooted(g):
        return _fail(Reason.NOT_REAL_ROOTED_LEFT)
    if not is_real_rooted(f):
        return _fail(Reason.NOT_REAL_ROOTED_RIGHT)
    if not g or not f:
        if g.lc < 0 or f.lc < 0:
            return _fail(Reason.LEADING_SIGN)
        return OK
    if g.lc < 0 or f.lc < 0:
        return _fail(Reason.LEADING_SIGN)
    if f.degree - g.degree not in (0, 1):
        return _fail(Reason.DEGREE_GAP)
    if not is_nonnegative_on_reals(wronskian(g, f)):
        return _fail(Reason.WRONSKIAN_SIGN)
    return OK


def is_interlacing_sequence(fs: Sequence[IntPoly]) -> InterlacingVerdict:
    """All pairs i < j must satisfy fs[i] << fs[j]."""
    for i in range(len(fs)):
        for j in range(i + 1, len(fs)):
            v = interlaces(fs[i], fs[j])
            if not v:
                return InterlacingVerdict(False, v.reason, (i, j))
    return OK


# independent route: root isolation and alternation chains


def real_roots_with_multiplicity(f: IntPoly, intervals: Sequence[Interval]) -> list[int]:
    """Multiplicity of f at the unique root inside each given isolating interval.

    ``intervals`` must isolate the roots of some polynomial whose root set
    contains all real roots of f.
    """
    factors = square_free_decomposition(f)
    out = []
    for iv in intervals:
        m = 0
        for fac, k in factors:
            if sturm_count(fac, iv):
                m += k
        out.append(m)
    return out


def interlaces_by_roots(g: IntPoly, f: IntPoly) -> bool:
    """Decide g << f by comparing sorted root lists against the alternation chain.

    Roots are identified by the index of their isolating interval for the
    square-free part of f*g, so ties between f and g are exact.
    """
    if not g or not f:
        other = f if not g else g
        if not other:
            return True
        if other.lc < 0:
            return False
        return _root_list(other, isolate_real_roots(other)) is not None
    if g.lc < 0 or f.lc < 0:
        return False
    common = isolate_real_roots(f * g)
    us = _root_list(f, common)
    vs = _root_list(g, common)
    if us is None or vs is None:
        return False
    if len(us) == len(vs):
        # v_d <= u_d <= v_{d-1} <= ... <= v_1 <= u_1, read ascending
        chain = [x for pair in zip(vs, us) for x in pair]
    elif len(us) == len(vs) + 1:
        # u_d <= v_{d-1} <= u_{d-1} <= ... <= v_1 <= u_1
        chain = [us[0]] + [x for pair in zip(vs, us[1:]) for x in pair]
    else:
        return False
    return all(a <= b for a, b in zip(chain, chain[1:]))


def _root_list(f: IntPoly, intervals: Sequence[Interval]) -> Optional[list[int]]:
    """Ascending list of root indices with repetition, or None if f is not real-rooted."""
    if f.degree == 0:
        return []
    mults = real_roots_with_multiplicity(f, intervals)
    if sum(mults) != f.degree:
        return None
    return [i for i, m in enumerate(mults) for _ in range(m)]
