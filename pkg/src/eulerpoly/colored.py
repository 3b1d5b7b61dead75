"""Colored permutations Z_r wr S_n and the symmetric decomposition of their
binomial Eulerian polynomials.

A colored permutation is stored as ``ColoredPerm(perm, colors, r)`` with
``perm`` in one-line notation over 1..n and ``colors[i]`` in 0..r-1.
"""
from __future__ import annotations

from collections import Counter
from itertools import combinations, permutations, product
from math import comb
from typing import Iterator, NamedTuple, Sequence

from eulerpoly.errors import ConsistencyError, DomainError
from eulerpoly.invseq import InvSeq, check_invseq
from eulerpoly.perms import check_perm, from_lehmer_code, lehmer_code
from eulerpoly.polycore import ONE, ZERO, IntPoly, binomial_transform, from_counts, poly_sum
from eulerpoly.recurrence import binomial_eulerian, refined_polys


class ColoredPerm(NamedTuple):
    perm: tuple[int, ...]
    colors: tuple[int, ...]
    r: int

    def __str__(self) -> str:
        return " ".join(f"{p}^{c}" for p, c in zip(self.perm, self.colors)) or "()"


def colored(perm: Sequence[int], colors: Sequence[int], r: int) -> ColoredPerm:
    """Validated constructor."""
    perm = check_perm(perm)
    colors = tuple(colors)
    if r < 1:
        raise DomainError("r must be positive")
    if len(colors) != len(perm):
        raise DomainError("one color per position is required")
    if any(not 0 <= c < r for c in colors):
        raise DomainError(f"colors must lie in [0, {r - 1}]")
    return ColoredPerm(perm, colors, r)


def enumerate_colored(n: int, r: int) -> Iterator[ColoredPerm]:
    for p in permutations(range(1, n + 1)):
        for c in product(range(r), repeat=n):
            yield ColoredPerm(p, c, r)


class ColoredStats(NamedTuple):
    des: int
    exc: int
    is_derangement: bool
    bad_set: frozenset
    sign_class: str


def _des(p, c) -> int:
    n = len(p)
    des = 0
    for i in range(n):
        nxt_p, nxt_c = (p[i + 1], c[i + 1]) if i + 1 < n else (n + 1, 0)
        if c[i] > nxt_c or (c[i] == nxt_c and p[i] > nxt_p):
            des += 1
    return des


def _bad_set(p, c) -> frozenset:
    # suffix_min[j] = min(p[j:]), with n+1 for the empty suffix
    n = len(p)
    suffix_min = [n + 1] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix_min[j] = min(p[j], suffix_min[j + 1])
    bad = set()
    for j in range(n):
        prev_p, prev_c = (p[j - 1], c[j - 1]) if j else (0, 0)
        if p[j] < suffix_min[j + 1] and prev_p < suffix_min[j] and c[j] == prev_c:
            bad.add(p[j])
    return frozenset(bad)


def _sign_class(c) -> str:
    return "minus" if c and c[-1] else "plus"


def colored_stats(sigma: ColoredPerm) -> ColoredStats:
    p, c, r = colored(*sigma)
    exc = sum(1 for i, x in enumerate(p) if x > i + 1 or (x == i + 1 and c[i] > 0))
    derangement = all(not (x == i + 1 and c[i] == 0) for i, x in enumerate(p))
    return ColoredStats(_des(p, c), exc, derangement, _bad_set(p, c), _sign_class(c))


def psi_svec(n: int, r: int) -> tuple[int, ...]:
    """(rn, r(n-1), ..., 2r, r)."""
    return tuple(r * (n - i) for i in range(n))


def psi(sigma: ColoredPerm) -> InvSeq:
    """e_i = (n-i+1) c_i + t_i with t the Lehmer code."""
    p, c, r = colored(*sigma)
    n = len(p)
    t = lehmer_code(p)
    return tuple((n - i) * c[i] + t[i] for i in range(n))


def psi_inv(e: Sequence[int], r: int) -> ColoredPerm:
    n = len(e)
    e = check_invseq(e, psi_svec(n, r))
    colors = tuple(e[i] // (n - i) for i in range(n))
    t = tuple(e[i] % (n - i) for i in range(n))
    return ColoredPerm(from_lehmer_code(t), colors, r)


def colored_eulerian(n: int, r: int) -> IntPoly:
    counts = Counter(_des(s.perm, s.colors) for s in enumerate_colored(n, r))
    return poly_sum(IntPoly.monomial(d, k) for d, k in counts.items())


def colored_derangement(n: int, r: int) -> IntPoly:
    counts = Counter()
    for s in enumerate_colored(n, r):
        st = colored_stats(s)
        if st.is_derangement:
            counts[st.exc] += 1
    return poly_sum(IntPoly.monomial(d, k) for d, k in counts.items())


def d_plus_minus(n: int, r: int) -> tuple[IntPoly, IntPoly]:
    """Descent sums over bad-element-free colored permutations, split by the
    color of the last letter.  The empty permutation counts as plus."""
    if n < 0 or r < 1:
        raise DomainError("need n >= 0 and r >= 1")
    if n == 0:
        return ONE, ZERO
    plus, minus = Counter(), Counter()
    for s in enumerate_colored(n, r):
        if not _bad_set(s.perm, s.colors):
            (minus if s.colors[-1] else plus)[_des(s.perm, s.colors)] += 1
    to_poly = lambda cnt: poly_sum(IntPoly.monomial(d, k) for d, k in cnt.items())
    return to_poly(plus), to_poly(minus)


def a_tilde_definition(n: int, r: int) -> IntPoly:
    """sum_m C(n, m) z^(n-m) A_{m,r}."""
    return poly_sum(colored_eulerian(m, r).shift(n - m) * comb(n, m) for m in range(n + 1))


class ATildeRoutes(NamedTuple):
    by_formula: tuple[IntPoly, IntPoly]
    by_bad_des: tuple[IntPoly, IntPoly]
    by_engine: tuple[IntPoly, IntPoly]


class ATildeParts(NamedTuple):
    plus: IntPoly
    minus: IntPoly
    total: IntPoly


def a_tilde_by_formula(n: int, r: int) -> tuple[IntPoly, IntPoly]:
    parts = [d_plus_minus(k, r) for k in range(n + 1)]
    return (
        binomial_transform([pm[0] for pm in parts], n),
        binomial_transform([pm[1] for pm in parts], n),
    )


def a_tilde_by_bad_des(n: int, r: int) -> tuple[IntPoly, IntPoly]:
    plus, minus = Counter(), Counter()
    for s in enumerate_colored(n, r):
        key = (len(_bad_set(s.perm, s.colors)), _des(s.perm, s.colors))
        (minus if s.colors[-1] else plus)[key] += 1
    return from_counts(plus), from_counts(minus)


def a_tilde_by_engine(n: int, r: int) -> tuple[IntPoly, IntPoly]:
    fam = refined_polys(psi_svec(n, r))
    return fam[0], poly_sum(fam.polys[1:])


def a_tilde_routes(n: int, r: int) -> ATildeRoutes:
    if n < 1 or r < 1:
        raise DomainError("need n >= 1 and r >= 1")
    return ATildeRoutes(a_tilde_by_formula(n, r), a_tilde_by_bad_des(n, r), a_tilde_by_engine(n, r))


def a_tilde_parts(n: int, r: int, check: bool = True) -> ATildeParts:
    """The plus/minus parts and their sum; the engine route is returned.

    With ``check`` set, the two enumerative routes and the definition sum are
    computed as well and any disagreement raises ConsistencyError.
    """
    if n < 1 or r < 1:
        raise DomainError("need n >= 1 and r >= 1")
    plus, minus = a_tilde_by_engine(n, r)
    total = plus + minus
    if check:
        routes = a_tilde_routes(n, r)
        if len(set(routes)) != 1:
            raise ConsistencyError(f"plus/minus routes disagree for n = {n}, r = {r}")
        if total != a_tilde_definition(n, r):
            raise ConsistencyError(f"plus + minus differs from the definition sum for n = {n}, r = {r}")
    return ATildeParts(plus, minus, total)


def a_tilde_plus_as_binomial_eulerian(n: int, r: int) -> IntPoly:
    """The s-binomial Eulerian polynomial for s = (rn, ..., 2r)."""
    return binomial_eulerian(psi_svec(n, r)[:-1])


def bad_insertion_construct(sigma0: ColoredPerm, T: Sequence[int], n: int) -> ColoredPerm:
    """Build a colored permutation of [n] whose bad set is exactly T.

    ``sigma0`` must have no bad elements.  Its letters are relabeled onto
    [n] minus T in order; then each element of T, smallest first, goes to the
    front with color 0 if it is 1, or else right after the rightmost
    right-to-left minimum smaller than it, taking that letter's color.
    """
    p0, c0, r = colored(*sigma0)
    k = len(p0)
    T = sorted(set(T))
    if len(T) != n - k or any(not 1 <= x <= n for x in T):
        raise DomainError(f"T must be a subset of [1, {n}] of size {n - k}")
    if _bad_set(p0, c0):
        raise DomainError("sigma0 must have no bad elements")
    rest = [x for x in range(1, n + 1) if x not in set(T)]
    p = [rest[x - 1] for x in p0]
    c = list(c0)
    for i in T:
        if i == 1:
            p.insert(0, 1)
            c.insert(0, 0)
            continue
        pos = None
        running = n + 1
        for j in range(len(p) - 1, -1, -1):
            if p[j] < running:
                running = p[j]
                if p[j] < i:
                    pos = j
                    break
        if pos is None:
            raise DomainError(f"no right-to-left minimum below {i}")
        p.insert(pos + 1, i)
        c.insert(pos + 1, c[pos])
    return ColoredPerm(tuple(p), tuple(c), r)


def bad_free(k: int, r: int) -> Iterator[ColoredPerm]:
    for s in enumerate_colored(k, r):
        if not _bad_set(s.perm, s.colors):
            yield s


def insertion_preimages(n: int, r: int) -> Iterator[tuple[ColoredPerm, tuple[int, ...]]]:
    """All (sigma0, T) pairs feeding the insertion construction for size n."""
    for k in range(n + 1):
        for sigma0 in bad_free(k, r):
            for T in combinations(range(1, n + 1), n - k):
                yield sigma0, T
