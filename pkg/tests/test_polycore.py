import json

import pytest
from hypothesis import given, strategies as st

from eulerpoly.errors import DomainError
from eulerpoly.polycore import (
    ONE,
    ONE_PLUS_Z,
    ZERO,
    Z,
    IntPoly,
    binomial_powers,
    binomial_transform,
    er_apply,
    from_counts,
    gamma_expand,
    gamma_recombine,
    is_palindromic,
    poly_arith,
    r_sections,
    recombine_sections,
    symmetric_decompose,
)

coeff_lists = st.lists(st.integers(-50, 50), max_size=7)
polys = coeff_lists.map(IntPoly)
small_ints = st.integers(-5, 5)


def test_normalization_strips_trailing_zeros():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]) == ZERO
    assert ZERO.degree == float("-inf")
    assert IntPoly([3]).degree == 0


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        IntPoly([1.5])


def test_str():
    assert str(IntPoly([1, 3, 1])) == "1 + 3z + z^2"
    assert str(ZERO) == "0"


def test_json_roundtrip_keeps_big_integers():
    f = IntPoly([10**40, -7, 1])
    doc = f.to_json()
    assert doc == {"var": "z", "coeffs": [str(10**40), "-7", "1"]}
    assert IntPoly.from_json(json.loads(json.dumps(doc))) == f


def test_poly_arith_examples():
    assert poly_arith(ONE_PLUS_Z, Z, "mul") == IntPoly([0, 1, 1])
    assert poly_arith(ONE_PLUS_Z, ONE, "sub") == Z
    assert ONE_PLUS_Z ** 3 == IntPoly([1, 3, 3, 1])


def test_binomial_powers_match_repeated_product():
    acc = ONE
    for k, p in enumerate(binomial_powers(8)):
        assert p == acc
        acc = acc * ONE_PLUS_Z


def test_from_counts():
    # (1+z)^2 z + 3 z^0
    assert from_counts({(2, 1): 1, (0, 0): 3}) == IntPoly([3, 1, 2, 1])
    assert from_counts({}) == ZERO


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, polys, small_ints)
def test_evaluation_is_a_ring_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


@given(polys, polys)
def test_degree_of_product(a, b):
    if a and b:
        assert (a * b).degree == a.degree + b.degree


@given(polys, st.integers(1, 5))
def test_sections_recombine(f, r):
    secs = r_sections(f, r)
    assert len(secs) == r
    assert recombine_sections(secs) == f
    assert secs[0] == er_apply(f, r)


def test_er_apply_example():
    # E_2(1 + z + z^2)^2 = E_2(1 + 2z + 3z^2 + 2z^3 + z^4) = 1 + 3z + z^2
    assert er_apply(IntPoly.geometric(0, 2) ** 2, 2) == IntPoly([1, 3, 1])


def test_r_sections_example():
    assert r_sections(IntPoly([1, 2, 3, 2, 1]), 2) == [IntPoly([1, 3, 1]), IntPoly([2, 2])]


@given(st.lists(st.integers(0, 20), max_size=5), st.integers(0, 9))
def test_gamma_roundtrip(gammas, n):
    gammas = gammas[: n // 2 + 1]
    f = gamma_recombine(gammas, n)
    assert is_palindromic(f, n)
    assert gamma_expand(f, n) == gammas + [0] * (n // 2 + 1 - len(gammas))


def test_gamma_examples():
    assert gamma_expand(IntPoly([1, 3, 1]), 2) == [1, 1]
    assert gamma_expand(IntPoly([1, 7, 7, 1]), 3) == [1, 4]
    with pytest.raises(DomainError):
        gamma_expand(IntPoly([1, 2]), 1)


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=8))
def test_symmetric_decomposition_reconstructs(cs):
    h = IntPoly(cs)
    n = len(cs) - 1
    # lower-degree input still works
    a, b = symmetric_decompose(h, n)
    assert a + b.shift(1) == h
    assert is_palindromic(a, n) and is_palindromic(b, n - 1)


def test_symmetric_decomposition_example():
    # 1 + 4z + z^2 with n = 3: a palindromic about 3/2, b about 1
    a, b = symmetric_decompose(IntPoly([1, 4, 1]), 3)
    assert a + b.shift(1) == IntPoly([1, 4, 1])
    assert is_palindromic(a, 3) and is_palindromic(b, 2)


def test_symmetric_decompose_rejects_high_degree():
    with pytest.raises(DomainError):
        symmetric_decompose(IntPoly([1, 1, 1]), 1)


def test_binomial_transform():
    # sum C(2,k)(1+z)^(2-k) d_k with d = (1, 0, z)
    assert binomial_transform([ONE, ZERO, Z], 2) == IntPoly([1, 3, 1])


@given(polys, st.integers(1, 4))
def test_inflate_and_shift(f, r):
    assert f.inflate(r)(2) == f(2 ** r)
    assert f.shift(r) == f * IntPoly.monomial(r)


@given(polys)
def test_derivative_product_rule(f):
    g = ONE_PLUS_Z * f
    assert g.derivative() == f + ONE_PLUS_Z * f.derivative()
