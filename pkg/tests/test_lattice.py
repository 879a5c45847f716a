import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from grouplat.action import Equipartition, equipartition_stabilizer, young_stabilizer
from grouplat.factory import agl, atlas, projective
from grouplat.group import (
    BudgetError,
    GroupError,
    alt,
    cyclic,
    even_part,
    generate,
    is_perm_isomorphic,
    point_stabilizer,
    sym,
    trivial,
)
from grouplat.lattice import (
    Poset,
    chain_poset,
    classify_poset,
    conjugates,
    cycle_normalizer_data,
    hm,
    interval,
    is_second_maximal,
    lattice_isomorphic,
    mr_poset,
    overgroups,
    palffy_check,
    palffy_count_overgroups,
    prime_cycle_census,
    vertical_sum,
)
from grouplat.perm import compose, conjugate, parity, parse_perm
from grouplat.verification import (
    Budget,
    check_affine_wreath_orders,
    check_block_interval_bijection,
    check_klein_exception,
    check_marks_s4,
    check_palffy_random,
    check_three_orbit_m3,
    check_wreath_vertical_sum,
)

from conftest import brute_subgroups

V4 = generate(4, [parse_perm("(0 1)(2 3)"), parse_perm("(0 2)(1 3)")])

SMALL = {
    "S4": sym(4),
    "A5": alt(5),
    "AGL(1,7)": agl(1, 7).group,
    "AGL(1,8)": agl(1, 8).group,
    "S3xS3": generate(6, [(1, 0, 2, 3, 4, 5), (1, 2, 0, 3, 4, 5), (0, 1, 2, 4, 3, 5), (0, 1, 2, 4, 5, 3)]),
    "D8": generate(4, [(1, 2, 3, 0), (3, 2, 1, 0)]),
    "C2xS4": generate(6, [(1, 2, 3, 0, 4, 5), (1, 0, 2, 3, 4, 5), (0, 1, 2, 3, 5, 4)]),
}
_ORACLE: dict = {}


def oracle(name):
    if name not in _ORACLE:
        _ORACLE[name] = brute_subgroups(SMALL[name])
    return _ORACLE[name]


def eqpart_even(n, m):
    return even_part(equipartition_stabilizer(n, Equipartition.consecutive(n, m)))


def hasse_is_transitive_reduction(I):
    n = len(I)
    edges = set(I.hasse)
    for i, j in edges:
        if any(I.leq[i][k] and I.leq[k][j] for k in range(n) if k not in (i, j)):
            return False
    # the covers must regenerate the order
    reach = [[i == j for j in range(n)] for i in range(n)]
    for i, j in edges:
        reach[i][j] = True
    for k, i, j in itertools.product(range(n), repeat=3):
        if reach[i][k] and reach[k][j]:
            reach[i][j] = True
    return reach == I.leq


def test_klein_in_s4_is_m4():
    I = interval(V4, sym(4))
    assert len(I) == 6 and str(I.shape) == "Mr(4)"
    assert sorted(N.order() for N in I.middle()) == [8, 8, 8, 12]


def test_degree_seven_interval_has_five_members():
    H = eqpart_even(6, 2)
    H7 = generate(7, [tuple(g) + (6,) for g in H.generators])
    I = interval(H7, alt(7))
    assert H7.order() == 24 and len(I) == 5 and I.shape.mr == 3


@pytest.mark.parametrize("name", list(SMALL))
def test_overgroups_match_brute_force(name):
    G = SMALL[name]
    subs = oracle(name)
    for X in subs:
        H = generate(G.degree, sorted(X))
        found = {K.element_set() for K in overgroups(H, G)}
        assert found == {Y for Y in subs if X <= Y}


@pytest.mark.parametrize("name", ["S4", "A5", "C2xS4"])
def test_hasse_diagrams_are_transitive_reductions(name):
    G = SMALL[name]
    for X in sorted(oracle(name), key=len)[::3]:
        assert hasse_is_transitive_reduction(interval(generate(G.degree, sorted(X)), G))


def test_interval_errors():
    with pytest.raises(GroupError):
        interval(sym(3), sym(4))
    with pytest.raises(GroupError):
        interval(generate(4, [(1, 2, 3, 0)]), alt(4))


def test_second_maximal_examples():
    A4 = alt(4)
    assert is_second_maximal(V4, A4) == (False, "maximal")
    flag, atoms = is_second_maximal(eqpart_even(8, 2), alt(8))
    assert flag and sorted(a.order() for a in atoms) == [1344, 1344]
    assert is_second_maximal(A4, A4) == (False, "equal")
    flag, reason = is_second_maximal(trivial(4), sym(4))
    assert not flag and reason == "shape general"


def test_marks_examples():
    S4 = sym(4)
    S3 = point_stabilizer(S4, 3)
    t = generate(4, [(1, 0, 2, 3)])
    assert hm(S4, t, S4) == 1
    assert hm(t, S3, S4) == 3
    assert hm(S3, t, S4) == 2
    assert palffy_check(t, S3, S4)
    assert palffy_check(S3, S3, S4)
    ok, measured = check_marks_s4(Budget())
    assert ok, measured


def test_eight_point_atoms_and_marks():
    A8, S8 = alt(8), sym(8)
    L = eqpart_even(8, 2)
    atoms = interval(L, A8).middle()
    K1, K2 = atoms
    assert not any(X == K2 for X in conjugates(K1, A8))
    assert any(X == K2 for X in conjugates(K1, S8))
    c = is_perm_isomorphic(K1, K2)
    assert c is not None and parity(c) == 1
    assert hm(K1, L, A8) == 1 and hm(L, K1, A8) == 7
    assert palffy_check(K1, L, A8)
    # one overgroup per A8-class; the S8-class holds both atoms
    assert hm(K1, L, A8) + hm(K2, L, A8) == 2
    assert hm(K1, L, S8) == 2


@settings(max_examples=10)
@given(st.sampled_from(["S4", "A5", "AGL(1,7)", "C2xS4"]), st.randoms(use_true_random=False))
def test_mark_identity_on_random_pairs(name, rnd):
    G = SMALL[name]
    subs = sorted(oracle(name), key=lambda X: (len(X), sorted(X)))
    K = generate(G.degree, sorted(rnd.choice(subs)))
    L = generate(G.degree, sorted(rnd.choice(subs)))
    assert palffy_check(K, L, G)


def test_mark_identity_grid():
    ok, measured = check_palffy_random(Budget())
    assert ok, measured


def test_counting_overgroups_from_ingredients():
    assert palffy_count_overgroups(5616, 39, {"norm_index_H": 2, "hm_H_G": 144, "norm_index_G": 1}) == 2
    assert palffy_count_overgroups(9999360, 155, {"norm_index_H": 3, "hm_H_G": 9999360 // 155, "norm_index_G": 1}) == 3
    assert palffy_count_overgroups(372000, 93, {"norm_index_H": 5, "hm_H_G": 4000, "norm_index_G": 1}) == 5
    with pytest.raises(GroupError):
        palffy_count_overgroups(5616, 39, {"norm_index_H": 1, "hm_H_G": 143, "norm_index_G": 1})
    with pytest.raises(GroupError):
        palffy_count_overgroups(10, 3, {"norm_index_H": 1, "hm_H_G": 1, "norm_index_G": 1})


def test_cycle_normalizer_data_small():
    data = cycle_normalizer_data(projective(3, 3, "PSL").group)
    assert (data.h_order, data.hm_h_g, data.norm_index_h, data.per_class) == (39, 144, 2, 2)
    with pytest.raises(GroupError):
        cycle_normalizer_data(sym(6))


@pytest.mark.parametrize("G", [cyclic(7), agl(1, 7).group, projective(3, 2, "PSL").group, alt(7), sym(5)])
def test_full_cycle_census_by_enumeration(G):
    expected = sum(1 for g in G.element_set() if _is_full_cycle(g))
    assert prime_cycle_census(G) == expected


def _is_full_cycle(g):
    x, steps = g[0], 1
    while x != 0:
        x, steps = g[x], steps + 1
    return steps == len(g)


def test_poset_shapes():
    assert str(classify_poset(mr_poset(3))) == "Mr(3)"
    assert str(classify_poset(chain_poset(4))) == "chain(4)"
    assert classify_poset(chain_poset(2)).mr == 1
    assert lattice_isomorphic(mr_poset(3), mr_poset(3))
    assert lattice_isomorphic(chain_poset(2), mr_poset(1))
    assert not lattice_isomorphic(chain_poset(2), chain_poset(3))
    assert not lattice_isomorphic(mr_poset(3), mr_poset(2))
    assert lattice_isomorphic(vertical_sum(chain_poset(1), chain_poset(1)), chain_poset(2))
    square = vertical_sum(mr_poset(2), mr_poset(2))
    assert square.size == 7 and str(classify_poset(square)) == "general"
    with pytest.raises(BudgetError):
        lattice_isomorphic(chain_poset(70), chain_poset(70))


@given(st.integers(1, 6), st.integers(1, 6), st.randoms(use_true_random=False))
def test_isomorphism_is_invariant_under_relabelling(r, k, rnd):
    P = vertical_sum(mr_poset(r), chain_poset(k))
    perm = list(range(P.size))
    rnd.shuffle(perm)
    Q = Poset([[P.leq[perm[i]][perm[j]] for j in range(P.size)] for i in range(P.size)])
    assert lattice_isomorphic(P, Q)
    assert not lattice_isomorphic(P, vertical_sum(mr_poset(r + 1), chain_poset(k)))


@pytest.mark.parametrize("check", [check_wreath_vertical_sum, check_klein_exception, check_three_orbit_m3,
                                   check_affine_wreath_orders, check_block_interval_bijection])
def test_catalogued_interval_checks(check):
    ok, measured = check(Budget())
    assert ok, measured


def test_three_orbit_interval_atoms():
    H = young_stabilizer(7, [1, 2, 4])
    I = interval(H, sym(7))
    assert str(I.shape) == "Mr(3)"
    assert sorted(N.order() for N in I.middle()) == [6 * 24, 2 * 120, 720]


def test_twenty_three_point_chain():
    M23 = atlas("M23/23").group
    c = tuple((i + 1) % 23 for i in range(23))
    assert M23.contains(c)
    # x -> u x normalizes <c>; the multipliers inside M23 form the squares mod 23
    mults = [u for u in range(1, 23) if M23.contains(tuple(u * x % 23 for x in range(23)))]
    assert sorted(mults) == sorted({x * x % 23 for x in range(1, 23)})
    N = generate(23, [c, tuple(mults[1] * x % 23 for x in range(23))])
    C = cyclic(23)
    assert C.order() == 23 and N.order() == 253
    assert C.is_subgroup_of(N) and N.is_subgroup_of(M23) and M23.is_subgroup_of(alt(23))
    assert str(interval(C, N).shape) == "chain(1)"
