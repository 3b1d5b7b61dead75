from collections import Counter
from math import factorial

import pytest

from eulerpoly.colored import (
    ColoredPerm,
    a_tilde_definition,
    a_tilde_parts,
    a_tilde_plus_as_binomial_eulerian,
    a_tilde_routes,
    bad_insertion_construct,
    colored,
    colored_derangement,
    colored_eulerian,
    colored_stats,
    d_plus_minus,
    enumerate_colored,
    insertion_preimages,
    psi,
    psi_inv,
    psi_svec,
)
from eulerpoly.errors import DomainError
from eulerpoly.invseq import stats
from eulerpoly.perms import binomial_eulerian_perm
from eulerpoly.polycore import ONE, ONE_PLUS_Z, ZERO, IntPoly, gamma_expand, symmetric_decompose
from eulerpoly.realroot import interlaces, is_real_rooted

P = IntPoly
SMALL = [(n, r) for n in range(1, 5) for r in range(1, 4)]


def test_stats_examples():
    st = colored_stats(colored((1,), (1,), 2))
    assert (st.des, st.exc, st.is_derangement, st.bad_set, st.sign_class) == (1, 1, True, frozenset(), "minus")
    st = colored_stats(colored((1,), (0,), 2))
    assert (st.des, st.exc, st.is_derangement, st.bad_set, st.sign_class) == (0, 0, False, {1}, "plus")
    st = colored_stats(colored((2, 1), (1, 0), 2))
    assert (st.des, st.exc, st.is_derangement, st.bad_set) == (1, 1, True, frozenset())


def test_validation():
    with pytest.raises(DomainError):
        colored((1, 2), (0, 2), 2)
    with pytest.raises(DomainError):
        colored((1, 2), (0,), 2)
    with pytest.raises(DomainError):
        psi_inv((4, 0), 2)


def test_psi_examples():
    assert psi(colored((2, 1), (1, 0), 2)) == (3, 0)
    assert psi_svec(2, 2) == (4, 2)
    assert psi(colored((1, 2, 3), (0, 0, 0), 3)) == (0, 0, 0)


@pytest.mark.parametrize("n,r", SMALL)
def test_psi_bijection_and_transport(n, r):
    s = psi_svec(n, r)
    seen = set()
    for sigma in enumerate_colored(n, r):
        e = psi(sigma)
        seen.add(e)
        assert psi_inv(e, r) == sigma
        cs, es = colored_stats(sigma), stats(e, s)
        assert cs.des == es.des
        assert len(cs.bad_set) == es.col_prime
        assert (cs.sign_class == "plus") == (e[-1] == 0)
    assert len(seen) == factorial(n) * r**n


def test_small_polynomials():
    assert colored_eulerian(1, 2) == ONE_PLUS_Z
    assert colored_derangement(2, 2) == P([0, 4, 1])
    assert d_plus_minus(1, 2) == (ZERO, P([0, 1]))
    assert d_plus_minus(0, 3) == (ONE, ZERO)


@pytest.mark.parametrize("n,r", SMALL)
def test_plus_minus_sum_to_derangements(n, r):
    plus, minus = d_plus_minus(n, r)
    assert plus + minus == colored_derangement(n, r)


def test_parts_examples():
    assert a_tilde_parts(1, 2) == (ONE_PLUS_Z, P([0, 1]), P([1, 2]))
    for n in range(1, 5):
        parts = a_tilde_parts(n, 1)
        assert parts.minus == ZERO
        assert parts.total == a_tilde_definition(n, 1)
        assert parts.total == binomial_eulerian_perm(n)


@pytest.mark.parametrize("n,r", [(n, r) for n in range(1, 5) for r in (2, 3)])
def test_decomposition_properties(n, r):
    routes = a_tilde_routes(n, r)
    assert len(set(routes)) == 1
    parts = a_tilde_parts(n, r)
    assert interlaces(parts.plus, parts.minus)
    assert is_real_rooted(parts.total)
    a, b = symmetric_decompose(parts.total, n)
    assert a == parts.plus and b.shift(1) == parts.minus
    assert min(gamma_expand(a, n)) >= 0
    assert min(gamma_expand(b, n - 1)) >= 0
    assert parts.plus == a_tilde_plus_as_binomial_eulerian(n, r)


def test_insertion_examples():
    sigma = bad_insertion_construct(ColoredPerm((), (), 2), (1,), 1)
    assert sigma == ColoredPerm((1,), (0,), 2)
    assert colored_stats(sigma).bad_set == {1}
    base = ColoredPerm((1,), (1,), 2)
    assert bad_insertion_construct(base, (), 1) == base
    with pytest.raises(DomainError):
        bad_insertion_construct(ColoredPerm((1,), (0,), 2), (), 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_insertion_is_bijective(n):
    r = 2
    images = Counter()
    for sigma0, T in insertion_preimages(n, r):
        sigma = bad_insertion_construct(sigma0, T, n)
        st = colored_stats(sigma)
        assert st.bad_set == set(T)
        assert st.des == colored_stats(sigma0).des
        images[sigma] += 1
    assert set(images) == set(enumerate_colored(n, r))
    assert set(images.values()) == {1}
