import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eulerpoly.errors import DomainError
from eulerpoly.polycore import ONE, ONE_PLUS_Z, ZERO, Z, IntPoly, poly_sum
from eulerpoly.realroot import (
    Reason,
    interlaces,
    interlaces_by_roots,
    is_interlacing_sequence,
    is_nonnegative_on_reals,
    is_real_rooted,
    isolate_real_roots,
    exact_div,
    poly_gcd,
    primitive,
    square_free_decomposition,
    square_free_part,
    sturm_count,
)
from eulerpoly.recurrence import random_interlacing_sequence

P = IntPoly


def from_roots(roots, lc=1):
    f = P([lc])
    for r in roots:
        r = Fraction(r)
        f = f * P([-r.numerator, r.denominator])
    return f


rational_roots = st.lists(
    st.fractions(min_value=-6, max_value=6, max_denominator=4), min_size=1, max_size=6
)


def test_sturm_count_examples():
    assert sturm_count(P([-1, 0, 1])) == 2
    assert sturm_count(P([1, 0, 1])) == 0
    assert sturm_count(P([1, 3, 1])) == 2
    with pytest.raises(DomainError):
        sturm_count(ZERO)


def test_sturm_count_half_open_interval():
    f = P([-1, 0, 1])  # roots -1 and 1
    assert sturm_count(f, (-1, 1)) == 1
    assert sturm_count(f, (Fraction(-3, 2), 1)) == 2
    assert sturm_count(f, (1, 2)) == 0


def test_square_free_part_examples():
    assert square_free_part(ONE_PLUS_Z ** 3) == ONE_PLUS_Z
    assert square_free_part(P([-1, 0, 1])) == P([-1, 0, 1])
    assert square_free_part(P([0, 1, 2, 1])) == P([0, 1, 1])


def test_gcd():
    assert poly_gcd(P([-1, 0, 1]), P([1, 2, 1])) == ONE_PLUS_Z


def test_real_rootedness_examples():
    assert is_real_rooted(P([1, 3, 1]))
    assert not is_real_rooted(P([1, 0, 1]))
    assert is_real_rooted(ONE_PLUS_Z ** 3)
    assert is_real_rooted(P([5]))


def test_nonnegativity_examples():
    assert is_nonnegative_on_reals(P([2, 2, 1]))
    assert not is_nonnegative_on_reals(Z)
    assert is_nonnegative_on_reals(ONE_PLUS_Z ** 2)


@given(st.lists(st.integers(-9, 9), max_size=6))
def test_nonnegative_both_signs_only_for_zero(cs):
    f = P(cs)
    assert (is_nonnegative_on_reals(f) and is_nonnegative_on_reals(-f)) == (not f)


@given(rational_roots)
def test_isolation_finds_every_distinct_root(roots):
    f = from_roots(roots, 3)
    ivs = isolate_real_roots(f)
    distinct = sorted(set(Fraction(r) for r in roots))
    assert len(ivs) == len(distinct)
    for (a, b), r in zip(ivs, distinct):
        assert a < r <= b
    assert is_real_rooted(f)
    assert sturm_count(f) == len(distinct)


@given(rational_roots)
def test_yun_decomposition_multiplies_back(roots):
    f = from_roots(roots)
    decomposition = square_free_decomposition(f)
    rebuilt = ONE
    for factor, mult in decomposition:
        rebuilt = rebuilt * factor ** mult
    assert rebuilt == f or rebuilt == -f


@given(rational_roots)
def test_adding_complex_pair_breaks_real_rootedness(roots):
    f = from_roots(roots) * P([1, 0, 1])
    assert not is_real_rooted(f)


def test_interlacing_examples():
    assert interlaces(ONE, ONE_PLUS_Z)
    assert interlaces(P([2, 1]), ONE_PLUS_Z)
    v = interlaces(ONE_PLUS_Z, P([2, 1]))
    assert not v and v.reason is Reason.WRONSKIAN_SIGN
    g, f = P([1, 3, 1]), P([1, 3, 2])
    assert not interlaces(g, f) and not interlaces(f, g)


def test_interlacing_reasons():
    assert interlaces(P([1, 0, 1]), ONE_PLUS_Z).reason is Reason.NOT_REAL_ROOTED_LEFT
    assert interlaces(ONE, P([1, 0, 1])).reason is Reason.NOT_REAL_ROOTED_RIGHT
    assert interlaces(ONE, ONE_PLUS_Z ** 2).reason is Reason.DEGREE_GAP
    assert interlaces(-ONE, ONE_PLUS_Z).reason is Reason.LEADING_SIGN
    assert interlaces(ONE, ONE_PLUS_Z).to_json() == {"holds": True, "reason": "ok"}


def test_sequence_examples():
    assert is_interlacing_sequence([ONE_PLUS_Z, Z, Z])
    assert is_interlacing_sequence([P([1, 3, 1]), P([0, 2, 1]), P([0, 1, 2])])
    v = is_interlacing_sequence([P([1, 3, 1]), P([1, 3, 2])])
    assert not v and v.pair == (0, 1)


@given(rational_roots)
def test_real_rooted_interlaces_itself(roots):
    f = from_roots(roots, 2)
    assert interlaces(f, f)
    assert interlaces_by_roots(f, f)


@settings(max_examples=150)
@given(rational_roots, rational_roots)
def test_wronskian_agrees_with_root_alternation(r1, r2):
    for g, f in ((from_roots(r1), from_roots(r2)), (from_roots(r1[:-1]), from_roots(r1))):
        assert bool(interlaces(g, f)) == interlaces_by_roots(g, f)
        assert bool(interlaces(f, g)) == interlaces_by_roots(f, g)


@settings(max_examples=60)
@given(st.integers(0, 10**6), st.integers(1, 5), st.integers(0, 5))
def test_generated_sequences_interlace_and_sum_is_real_rooted(seed, q, degree):
    fs = random_interlacing_sequence(random.Random(seed), q, degree)
    assert is_interlacing_sequence(fs)
    for i in range(q):
        for j in range(i + 1, q):
            assert interlaces_by_roots(fs[i], fs[j])
    if all(f.nonnegative() for f in fs):
        assert is_real_rooted(poly_sum(fs))


@given(rational_roots, rational_roots, st.lists(st.integers(-4, 4), min_size=1, max_size=3))
def test_gcd_recovers_common_factor(r1, r2, common):
    h = from_roots(common)
    a, b = from_roots(r1, 2) * h, from_roots(r2, 3) * h
    d = poly_gcd(a, b)
    assert exact_div(a, d) * d == a
    assert exact_div(b, d) * d == b
    exact_div(d, primitive(h))


def test_exact_div_rejects_non_divisors():
    with pytest.raises(DomainError):
        exact_div(P([1, 0, 1]), ONE_PLUS_Z)
    with pytest.raises(DomainError):
        exact_div(P([1, 1]), P([1, 2]))
