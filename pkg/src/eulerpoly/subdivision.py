"""h-polynomials attached to edgewise subdivisions of a simplex.

Nothing geometric is built: h-polynomials come from closed forms in the E_r
operator, cross-checked against word enumerators.  A word of length n+1 is
``w_0 w_1 ... w_n`` with letters in 0..r-1 and ``w_0 = w_n = 0``; its
statistics run over the n consecutive pairs.
"""
from __future__ import annotations

from collections import Counter
from itertools import product
from math import comb
from typing import Iterator, NamedTuple, Sequence

from eulerpoly.errors import ConsistencyError, DomainError
from eulerpoly.polycore import (
    IntPoly,
    binomial_powers,
    er_apply,
    from_counts,
    poly_sum,
    r_sections,
)
from eulerpoly.recurrence import Marker, ThresholdSpec, threshold_transform

Word = tuple[int, ...]


def _check(n: int, r: int) -> None:
    if n < 0:
        raise DomainError("length parameter must be nonnegative")
    if r < 1:
        raise DomainError("r must be positive")


def enumerate_words(n: int, r: int, smirnov: bool = False) -> Iterator[Word]:
    """Words w_0..w_n over [0, r-1] with zero boundary letters.

    For n = 0 the single word is (0,).  With ``smirnov`` set, words with two
    equal adjacent letters are skipped.
    """
    _check(n, r)
    if n == 0:
        yield (0,)
        return
    for middle in product(range(r), repeat=n - 1):
        w = (0,) + middle + (0,)
        if smirnov and any(a == b for a, b in zip(w, w[1:])):
            continue
        yield w


def word_stats(w: Sequence[int]) -> tuple[int, int]:
    """(asc, col) over consecutive pairs."""
    asc = sum(1 for a, b in zip(w, w[1:]) if a < b)
    col = sum(1 for a, b in zip(w, w[1:]) if a == b)
    return asc, col


def _word_sum(n: int, r: int) -> IntPoly:
    counts = Counter()
    for w in enumerate_words(n, r):
        asc, col = word_stats(w)
        counts[col, asc] += 1
    return from_counts(counts)


def word_enumerator(m: int, r: int) -> IntPoly:
    """sum of (1+z)^col z^asc over words with m free letters (m + 2 letters in all)."""
    _check(m, r)
    return _word_sum(m + 1, r)


def smirnov_sum(k: int, r: int) -> IntPoly:
    """sum of z^asc over Smirnov words w_0..w_k."""
    counts = Counter(word_stats(w)[0] for w in enumerate_words(k, r, smirnov=True))
    return poly_sum(IntPoly.monomial(a, c) for a, c in counts.items())


def local_h_esd(k: int, r: int) -> IntPoly:
    """E_r((z + z^2 + ... + z^(r-1))^k)."""
    _check(k, r)
    return er_apply(IntPoly.geometric(1, r - 1) ** k, r)


class HDeltaRoutes(NamedTuple):
    by_er: IntPoly
    by_binomial_sum: IntPoly
    by_words: IntPoly


def h_delta_esd(n: int, r: int, check: bool = True) -> HDeltaRoutes:
    """h-polynomial of the sphere built from the r-fold edgewise subdivision of
    an (n-1)-simplex, three ways.

    The word route sums over words w_0..w_n, i.e. n-1 free letters.
    """
    _check(n, r)
    by_er = er_apply(IntPoly.geometric(0, r) ** n, r)
    powers = binomial_powers(n)
    by_sum = poly_sum(powers[n - k] * local_h_esd(k, r) * comb(n, k) for k in range(n + 1))
    routes = HDeltaRoutes(by_er, by_sum, _word_sum(n, r))
    if check and len(set(routes)) != 1:
        raise ConsistencyError(f"h-polynomial routes disagree for n = {n}, r = {r}")
    return routes


def h_sections(n: int, r: int) -> list[IntPoly]:
    """(h_{n,r-1}, ..., h_{n,1}, h_{n,0}): r-sections of (1 + z + ... + z^r)^n, high index first."""
    _check(n, r)
    return list(reversed(r_sections(IntPoly.geometric(0, r) ** n, r)))


def lem_f_spec(r: int) -> ThresholdSpec:
    """The multiplication-by-(1 + ... + z^r) matrix as a threshold spec."""
    return ThresholdSpec(tuple(range(1, r + 1)), (Marker.ONE_PLUS_Z,) * r)


def lem_f_transform(sections: Sequence[IntPoly]) -> list[IntPoly]:
    """Sections of (1 + z + ... + z^r) f from those of f, both high index first.

    Row i of the matrix has 1 + z on the diagonal, 1 to the right and z to
    the left.
    """
    r = len(sections)
    if r < 1:
        raise DomainError("need at least one section")
    out = []
    for i in range(r):
        left = poly_sum(sections[:i]).shift(1)
        right = poly_sum(sections[i + 1:])
        out.append(left + sections[i] + sections[i].shift(1) + right)
    return out


def lem_f_via_threshold(sections: Sequence[IntPoly]) -> list[IntPoly]:
    return threshold_transform(sections, lem_f_spec(len(sections)), check=False)


def iterate_lem_f(n: int, r: int) -> list[IntPoly]:
    """Apply the section transform n times starting from f = 1."""
    _check(n, r)
    secs = [IntPoly()] * (r - 1) + [IntPoly.constant(1)]
    for _ in range(n):
        secs = lem_f_transform(secs)
    return secs
