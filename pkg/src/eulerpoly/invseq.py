"""Brute-force oracles over s-inversion sequences.

An s-inversion sequence is a tuple ``e`` with ``0 <= e_i < s_i``.  Statistics
compare consecutive ratios ``e_i/s_i`` over the pair indices ``0..n`` using
the boundary values e_0 = e_{n+1} = 0, s_0 = s_{n+1} = 1.  Ratios are compared
by integer cross-multiplication.

Everything here enumerates exhaustively; it is the ground truth that the
recurrence engine is checked against, not a fast path.
"""
from __future__ import annotations

from collections import Counter
from itertools import product
from typing import Iterator, NamedTuple, Sequence

from eulerpoly.errors import DomainError
from eulerpoly.polycore import IntPoly, from_counts

SVec = tuple[int, ...]
InvSeq = tuple[int, ...]


class Stats(NamedTuple):
    asc: int
    col: int
    des: int
    col_prime: int


def check_svec(s: Sequence[int]) -> SVec:
    s = tuple(s)
    for x in s:
        if not isinstance(x, int) or x < 1:
            raise DomainError(f"s entries must be positive integers, got {x!r}")
    return s


def check_invseq(e: Sequence[int], s: Sequence[int]) -> InvSeq:
    e = tuple(e)
    if len(e) != len(s):
        raise DomainError(f"sequence length {len(e)} does not match s length {len(s)}")
    for ei, si in zip(e, s):
        if not 0 <= ei < si:
            raise DomainError(f"entry {ei} out of range [0, {si})")
    return e


def enumerate_inversion_sequences(s: Sequence[int]) -> Iterator[InvSeq]:
    """All of I_n^s in lexicographic order, streamed."""
    return product(*(range(x) for x in check_svec(s)))


def _compare_counts(e: Sequence[int], s: Sequence[int]) -> tuple[int, int, int, int]:
    asc = col = des = 0
    prev_e, prev_s = 0, 1
    n = len(e)
    col_prime = 0
    for i in range(n + 1):
        if i < n:
            cur_e, cur_s = e[i], s[i]
        else:
            cur_e, cur_s = 0, 1
        lhs, rhs = prev_e * cur_s, cur_e * prev_s
        if lhs < rhs:
            asc += 1
        elif lhs > rhs:
            des += 1
        else:
            col += 1
            if i < n:
                col_prime += 1
        prev_e, prev_s = cur_e, cur_s
    return asc, col, des, col_prime


def stats(e: Sequence[int], s: Sequence[int]) -> Stats:
    """Ascents, collisions, descents over pairs 0..n, and collisions over 0..n-1."""
    s = check_svec(s)
    e = check_invseq(e, s)
    return Stats(*_compare_counts(e, s))


def brute_binomial_eulerian(s: Sequence[int]) -> IntPoly:
    """Sum of (1+z)^col z^asc over I_n^s."""
    s = check_svec(s)
    counts = Counter()
    for e in product(*(range(x) for x in s)):
        asc, col, _, _ = _compare_counts(e, s)
        counts[col, asc] += 1
    return from_counts(counts)


def brute_s_eulerian(s: Sequence[int]) -> IntPoly:
    s = check_svec(s)
    counts = Counter()
    for e in product(*(range(x) for x in s)):
        counts[0, _compare_counts(e, s)[0]] += 1
    return from_counts(counts)


def brute_s_derangement(s: Sequence[int]) -> IntPoly:
    """Ascent polynomial over the collision-free sequences."""
    s = check_svec(s)
    counts = Counter()
    for e in product(*(range(x) for x in s)):
        asc, col, _, _ = _compare_counts(e, s)
        if col == 0:
            counts[0, asc] += 1
    return from_counts(counts)


def brute_refined(s: Sequence[int]) -> list[IntPoly]:
    """(p_{n,0}, ..., p_{n,s_n - 1}) by enumeration, graded by the last entry."""
    s = check_svec(s)
    if not s:
        raise DomainError("refined polynomials need a nonempty s")
    counts = [Counter() for _ in range(s[-1])]
    for e in product(*(range(x) for x in s)):
        asc, _, _, col_prime = _compare_counts(e, s)
        counts[e[-1]][col_prime, asc] += 1
    return [from_counts(c) for c in counts]


def involution_f(e: Sequence[int], s: Sequence[int]) -> InvSeq:
    """Componentwise e_i -> -e_i mod s_i; swaps ascents and descents."""
    s = check_svec(s)
    e = check_invseq(e, s)
    return tuple(-x % y for x, y in zip(e, s))
