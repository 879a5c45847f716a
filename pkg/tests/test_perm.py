import pytest
from hypothesis import given
from sympy.combinatorics import Permutation as SPerm

from grouplat.perm import (
    ConsistencyError,
    Permutation,
    PermutationError,
    compose,
    cycle_census,
    fixpoint_profile,
    format_cycles,
    format_images,
    identity,
    inverse,
    mobius,
    order,
    parity,
    parity_from_fixpoints,
    parse_perm,
)

from conftest import perms


def test_parity_examples():
    assert parity(identity(5)) == 0
    assert parity(parse_perm("(0 1)", 4)) == 1
    assert parity(parse_perm("(0 1 2 3 4 5 6)")) == 0


def test_cycle_census_examples():
    assert cycle_census(identity(3)) == {1: 3}
    assert cycle_census(parse_perm("(0 1)(2 3 4)", 6)) == {1: 1, 2: 2, 3: 3}
    assert cycle_census(parse_perm("(0 1 2 3)")) == {4: 4}


def test_parity_from_fixpoints_examples():
    assert parity_from_fixpoints({1: 5}, 1) == 0
    t = parse_perm("(0 1)", 4)
    assert parity_from_fixpoints({1: 2, 2: 4}, 2) == parity(t) == 1
    c = parse_perm("(0 1 2 3)")
    assert parity_from_fixpoints({1: 0, 2: 0, 4: 4}, 4) == parity(c) == 1


def test_parity_from_fixpoints_errors():
    with pytest.raises(PermutationError):
        parity_from_fixpoints({1: 4}, 2)
    with pytest.raises(ConsistencyError):
        parity_from_fixpoints({1: 0, 2: 1}, 2)


@given(perms(max_degree=30))
def test_fixpoint_route_matches_direct_parity(p):
    fix, f = fixpoint_profile(p)
    assert parity_from_fixpoints(fix, f) == parity(p)


@given(perms(max_degree=15))
def test_parity_matches_sympy(p):
    assert parity(p) == SPerm(list(p)).parity()


@given(perms(degree=9), perms(degree=9))
def test_parity_is_a_homomorphism(p, q):
    assert parity(compose(p, q)) == parity(p) ^ parity(q)


@given(perms(degree=9), perms(degree=9))
def test_composition_order_matches_sympy(p, q):
    # sympy also applies the left factor first
    assert compose(p, q) == tuple((SPerm(list(p)) * SPerm(list(q))).array_form)


@given(perms(max_degree=20))
def test_census_sums_to_degree_and_keys_divide_order(p):
    census = cycle_census(p)
    assert sum(census.values()) == len(p)
    assert all(order(p) % e == 0 for e in census)


@given(perms(max_degree=20))
def test_inverse(p):
    assert compose(p, inverse(p)) == tuple(range(len(p)))


@given(perms(max_degree=12))
def test_text_round_trips(p):
    P = Permutation(p)
    assert parse_perm(format_cycles(P), len(p)) == P
    assert parse_perm(format_images(P)) == P


def test_rejects_bad_input():
    with pytest.raises(PermutationError):
        Permutation([0, 0, 1])
    with pytest.raises(PermutationError):
        parse_perm("(0 1)(1 2)")
    with pytest.raises(PermutationError):
        Permutation([1, 0]) * Permutation([0, 1, 2])
    with pytest.raises(PermutationError):
        parse_perm("(0 5)", 3)


def test_mobius_small_values():
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
