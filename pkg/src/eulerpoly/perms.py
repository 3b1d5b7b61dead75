"""Permutation statistics and the classical Eulerian-type polynomials.

Permutations are tuples in one-line notation over 1..n.
"""
from __future__ import annotations

from collections import Counter
from itertools import permutations
from math import comb
from typing import NamedTuple, Sequence, Union

from eulerpoly.errors import ConsistencyError, DomainError
from eulerpoly.invseq import InvSeq
from eulerpoly.polycore import ONE, ONE_PLUS_Z, ZERO, IntPoly, binomial_transform, from_counts, poly_sum
from eulerpoly.recurrence import binomial_eulerian

Perm = tuple[int, ...]


class PermStats(NamedTuple):
    des: int
    exc: int
    fix: int
    bad: int
    bad_prime: int


def check_perm(p: Sequence[int]) -> Perm:
    p = tuple(p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise DomainError(f"{p} is not a permutation of 1..{len(p)}")
    return p


def _bad(p: Perm) -> int:
    # p_k is bad when it is a right-to-left minimum and exceeds p_{k-1} (p_0 = 0)
    count = 0
    suffix_min = len(p) + 1
    for k in range(len(p) - 1, -1, -1):
        if p[k] < suffix_min:
            prev = p[k - 1] if k else 0
            if prev < p[k]:
                count += 1
            suffix_min = p[k]
    return count


def _stats(p: Perm) -> PermStats:
    n = len(p)
    des = sum(1 for i in range(n - 1) if p[i] > p[i + 1])
    exc = sum(1 for i in range(n) if p[i] > i + 1)
    fix = sum(1 for i in range(n) if p[i] == i + 1)
    bad = _bad(p)
    bad_prime = bad - 1 if n and p[0] == 1 else bad
    return PermStats(des, exc, fix, bad, bad_prime)


def perm_stats(p: Sequence[int]) -> PermStats:
    return _stats(check_perm(p))


def lehmer_code(p: Sequence[int]) -> tuple[int, ...]:
    """t_i = #{j > i : p_j < p_i}."""
    p = check_perm(p)
    return tuple(sum(1 for y in p[i + 1:] if y < x) for i, x in enumerate(p))


def from_lehmer_code(t: Sequence[int]) -> Perm:
    n = len(t)
    avail = list(range(1, n + 1))
    out = []
    for i, ti in enumerate(t):
        if not 0 <= ti < n - i:
            raise DomainError(f"invalid Lehmer code entry t_{i + 1} = {ti}")
        out.append(avail.pop(ti))
    return tuple(out)


def theta(p: Sequence[int]) -> InvSeq:
    """(t_{n-1}, ..., t_1): the Lehmer code reversed with t_n dropped.

    Lands in the inversion sequences for s = (2, 3, ..., n).  For n = 1 the
    image is the empty sequence.
    """
    p = check_perm(p)
    if not p:
        raise DomainError("theta needs n >= 1")
    t = lehmer_code(p)
    return tuple(reversed(t[:-1]))


def theta_inverse(e: Sequence[int]) -> Perm:
    return from_lehmer_code(tuple(reversed(tuple(e))) + (0,))


def theta_svec(n: int) -> tuple[int, ...]:
    return tuple(range(2, n + 1))


def eulerian_poly(n: int) -> IntPoly:
    """Descent generating polynomial over S_n."""
    counts = Counter(_stats(p).des for p in permutations(range(1, n + 1)))
    return IntPoly(counts[d] for d in range(max(counts) + 1))


def derangement_poly(n: int) -> IntPoly:
    """Excedance generating polynomial over derangements of [n]."""
    counts = Counter()
    for p in permutations(range(1, n + 1)):
        st = _stats(p)
        if st.fix == 0:
            counts[st.exc] += 1
    if not counts:
        return ZERO
    return IntPoly(counts[d] for d in range(max(counts) + 1))


class ClassicRoutes(NamedTuple):
    by_definition: IntPoly
    by_fix_exc: IntPoly
    by_bad_des: IntPoly
    by_svec: IntPoly


def a_tilde_definition(n: int) -> IntPoly:
    """1 + z * sum_{m=1}^{n} C(n, m) A_m."""
    return ONE + poly_sum(eulerian_poly(m) * comb(n, m) for m in range(1, n + 1)).shift(1)


def a_tilde_derangement_sum(n: int) -> IntPoly:
    """sum_k C(n, k) (1+z)^(n-k) d_k."""
    return binomial_transform([derangement_poly(k) for k in range(n + 1)], n)


def binomial_eulerian_classic(n: int, check: bool = True) -> ClassicRoutes:
    """The binomial Eulerian polynomial of S_n computed four ways.

    Raises ConsistencyError if the routes disagree and ``check`` is set.
    """
    if n < 1:
        raise DomainError("n must be positive")
    fe, bd = Counter(), Counter()
    for p in permutations(range(1, n + 1)):
        st = _stats(p)
        fe[st.fix, st.exc] += 1
        bd[st.bad, st.des] += 1
    routes = ClassicRoutes(
        a_tilde_definition(n), from_counts(fe), from_counts(bd), binomial_eulerian(theta_svec(n))
    )
    if check and len(set(routes)) != 1:
        raise ConsistencyError(f"routes for n = {n} disagree: {[str(r) for r in routes]}")
    return routes


def binomial_eulerian_perm(n: int) -> IntPoly:
    """Fast path: the s-engine on s = (2, ..., n)."""
    if n < 1:
        raise DomainError("n must be positive")
    return binomial_eulerian(theta_svec(n))


Alpha = Union[IntPoly, int, str]

_ALPHAS = {"0": ZERO, "1": ONE, "1+z": ONE_PLUS_Z}


def as_alpha(alpha: Alpha) -> IntPoly:
    if isinstance(alpha, IntPoly):
        return alpha
    if isinstance(alpha, int):
        return IntPoly.constant(alpha)
    try:
        return _ALPHAS[alpha.replace(" ", "")]
    except KeyError:
        raise DomainError(f"alpha must be one of 0, 1, 1+z; got {alpha!r}") from None


def alpha_recurrence(n: int, alpha: Alpha) -> list[IntPoly]:
    """(A^alpha_{n,i})_{i=0}^{n-1} by the transfer matrix.

    The n x (n-1) matrix has alpha in the corner, 1 on and above the diagonal,
    z strictly below it; its last row is all z.
    """
    if n < 1:
        raise DomainError("n must be positive")
    a = as_alpha(alpha)
    vec = [ONE]
    for size in range(2, n + 1):
        # prefix[j] = vec[0] + ... + vec[j-1]
        prefix = [ZERO]
        for v in vec:
            prefix.append(prefix[-1] + v)
        total = prefix[-1]
        new = []
        for i in range(size):
            row = prefix[i].shift(1) + (total - prefix[i])
            if i == 0:
                row = row - vec[0] + a * vec[0]
            new.append(row)
        vec = new
    return vec


def alpha_brute(n: int, alpha: Alpha) -> list[IntPoly]:
    """sum over pi with pi_1 = i+1 of alpha^bad'(pi) z^des(pi), by enumeration."""
    if n < 1:
        raise DomainError("n must be positive")
    a = as_alpha(alpha)
    counts = [Counter() for _ in range(n)]
    for p in permutations(range(1, n + 1)):
        st = _stats(p)
        counts[p[0] - 1][st.bad_prime, st.des] += 1
    out = []
    for c in counts:
        out.append(poly_sum((a ** b).shift(d) * k for (b, d), k in c.items()))
    return out
