import pytest
from hypothesis import given, settings, strategies as st

from grouplat.group import all_subgroups, alt, cyclic, even_part, generate, sym, trivial
from grouplat.lattice import interval
from grouplat.product import (
    GoursatDatum,
    ProductError,
    affine_shortcut_example,
    check_datum,
    direct_product,
    elementary_factorization,
    embed,
    factorization_is_valid,
    goursat_build,
    goursat_decompose,
    goursat_is_maximal,
    interval_type,
    product_maximals,
    shortcut_novelty,
    skeleton_orders,
    split,
)
from grouplat.verification import verify_suite

from conftest import brute_subgroups

S3, A3 = sym(3), alt(3)
S3S3 = direct_product(S3, S3)
_SUBS: dict = {}


def subgroups_of(P):
    key = (P.degree, P.order())
    if key not in _SUBS:
        _SUBS[key] = sorted(brute_subgroups(P), key=lambda X: (len(X), sorted(X)))
    return _SUBS[key]


def as_group(X, degree):
    return generate(degree, sorted(X))


def diagonal(G):
    return generate(2 * G.degree, [embed(g, g) for g in G.generators])


def left_factor(X, R):
    return generate(X.degree + R.degree, [embed(g, tuple(range(R.degree))) for g in X.generators])


def right_factor(L, X):
    return generate(L.degree + X.degree, [embed(tuple(range(L.degree)), g) for g in X.generators])


def cartesian(X, Y):
    return generate(X.degree + Y.degree, [embed(g, tuple(range(Y.degree))) for g in X.generators]
                    + [embed(tuple(range(X.degree)), g) for g in Y.generators])


def oracle_covers(subs):
    covers = set()
    for i, X in enumerate(subs):
        for j, Y in enumerate(subs):
            if X < Y and not any(X < Z < Y for Z in subs):
                covers.add((i, j))
    return covers


def test_build_examples():
    ident = {g: g for g in S3.element_set()}
    assert goursat_build(S3, S3, GoursatDatum(S3, trivial(3), S3, trivial(3), ident)) == diagonal(S3)
    odd = min(g for g in S3.element_set() if g not in A3.element_set())
    half = GoursatDatum(S3, A3, S3, A3, {(0, 1, 2): (0, 1, 2), odd: odd})
    H = goursat_build(S3, S3, half)
    assert H.order() == 18 and H == even_part(S3S3)
    C, D = cyclic(3), sym(3)
    cart = goursat_build(S3, S3, GoursatDatum(C, C, D, D, {(0, 1, 2): (0, 1, 2)}))
    assert cart.order() == 18 and cart == cartesian(C, D)


def test_datum_errors():
    ident = {g: g for g in S3.element_set()}
    with pytest.raises(ProductError):
        check_datum(GoursatDatum(S3, generate(3, [(1, 0, 2)]), S3, generate(3, [(1, 0, 2)]), ident))
    with pytest.raises(ProductError):
        check_datum(GoursatDatum(S3, trivial(3), S3, A3, ident))
    swap = {g: g for g in S3.element_set()}
    swap[(1, 0, 2)], swap[(0, 2, 1)] = (0, 2, 1), (1, 0, 2)
    with pytest.raises(ProductError):
        goursat_build(S3, S3, GoursatDatum(S3, trivial(3), S3, trivial(3), swap))
    with pytest.raises(ProductError):
        split((3, 1, 2, 0, 4, 5), 3)
    with pytest.raises(ProductError):
        goursat_decompose(sym(6), 3)


def test_decompose_examples():
    d = goursat_decompose(diagonal(S3), 3)
    assert (d.left.order(), d.left_kernel.order(), d.right.order(), d.right_kernel.order()) == (6, 1, 6, 1)
    assert all(a == b for a, b in d.iso.items())
    c = goursat_decompose(cartesian(A3, S3), 3)
    assert (c.left.order(), c.left_kernel.order(), c.right.order(), c.right_kernel.order()) == (3, 3, 6, 6)
    assert c.index == 1


def test_round_trip_on_every_subgroup_of_s3_x_s3():
    for X in subgroups_of(S3S3):
        H = as_group(X, 6)
        assert goursat_build(S3, S3, goursat_decompose(H, 3)) == H


S4S3_SUBS = []


def s4s3_subgroups():
    if not S4S3_SUBS:
        S4S3_SUBS.extend(all_subgroups(direct_product(sym(4), S3), order_budget=10_000))
    return S4S3_SUBS


@settings(max_examples=30)
@given(st.data())
def test_round_trip_on_s4_x_s3(data):
    H = data.draw(st.sampled_from(s4s3_subgroups()))
    assert goursat_build(sym(4), S3, goursat_decompose(H, 4)) == H


def _oracle_maximals(P):
    # pair-closure brute force up to order 36; the lattice enumerator (itself checked against it) above
    subs = subgroups_of(P) if P.order() <= 36 else [H.element_set() for H in s4s3_subgroups()]
    top = max(subs, key=len)
    return {X for X in subs if X != top and not any(X < Y < top for Y in subs)}


@pytest.mark.parametrize("L,R,count", [(S3, S3, 9), (sym(4), S3, None), (cyclic(5), cyclic(7), 2)])
def test_maximals_match_brute_force(L, R, count):
    found = {M.element_set() for M in product_maximals(L, R)}
    assert found == _oracle_maximals(direct_product(L, R))
    if count is not None:
        assert len(found) == count


def test_maximality_examples():
    dA, dS = diagonal(A3), diagonal(S3)
    flag, case = goursat_is_maximal(dA, dS, 3)
    assert flag and case in ("a", "b")
    assert goursat_is_maximal(dS, even_part(S3S3), 3) == (True, "d")
    assert goursat_is_maximal(dS, S3S3, 3) == (False, None)
    with pytest.raises(ProductError):
        goursat_is_maximal(S3S3, dS, 3)


def test_maximality_agrees_with_covering_in_s3_x_s3():
    subs = subgroups_of(S3S3)
    covers = oracle_covers(subs)
    groups = [as_group(X, 6) for X in subs]
    for i, X in enumerate(subs):
        for j, Y in enumerate(subs):
            if X < Y:
                flag, _ = goursat_is_maximal(groups[i], groups[j], 3)
                assert flag == ((i, j) in covers), (len(X), len(Y))
                if flag:
                    assert interval_type(groups[i], groups[j], 3) != "composed"


def test_maximality_agrees_with_covering_in_s3_x_s4():
    report = verify_suite("appendix-a", only={"product-cover-s3s4"})
    (check,) = report.checks
    assert check.status == "pass", check.measured


def test_interval_type_examples():
    assert interval_type(cartesian(A3, S3), S3S3, 3) == "2L"
    assert interval_type(cartesian(S3, A3), S3S3, 3) == "2R"
    assert interval_type(diagonal(S3), even_part(S3S3), 3) == "3A"
    assert interval_type(S3S3, S3S3, 3) == "trivial"
    inner = diagonal(generate(3, [(0, 2, 1)]))
    outer = generate(6, list(inner.generators) + [embed((1, 2, 0), (0, 1, 2))])
    assert skeleton_orders(inner, outer, 3).left_skeleton == ((1, 2), (2, 2), (3, 6), (6, 6))
    assert interval_type(inner, outer, 3) == "4L"
    mirrored = generate(6, list(inner.generators) + [embed((0, 1, 2), (1, 2, 0))])
    assert interval_type(inner, mirrored, 3) == "4R"


def test_every_interval_of_s3_x_s3_factors_into_elementary_steps():
    groups = [as_group(X, 6) for X in subgroups_of(S3S3)]
    for a in groups:
        for b in groups:
            if a.order() <= b.order() and a.is_subgroup_of(b):
                chain, tags = elementary_factorization(a, b, 3)
                assert chain[0] == a and chain[-1] == b
                assert all(chain[k].is_subgroup_of(chain[k + 1]) for k in range(4))
                assert factorization_is_valid(tags), tags


def test_diagonal_interval_counts_normal_subgroups():
    S4 = sym(4)
    I = interval(diagonal(S4), direct_product(S4, S4))
    assert len(I) == 4
    assert sorted(goursat_decompose(N, 4).left_kernel.order() for N in I.nodes) == [1, 4, 12, 24]


@pytest.mark.parametrize("q,r", [(3, 4), (4, 5)])
def test_affine_shortcut_examples(q, r):
    P, inner, outer = affine_shortcut_example(q)
    report = shortcut_novelty(inner, outer, q)
    assert report.is_novelty and report.has_shortcut
    assert str(report.shape) == f"Mr({r})"
    # same shape by brute force inside the product
    if q == 3:
        subs = subgroups_of(P)
        lo, hi = inner.element_set(), outer.element_set()
        assert sum(1 for X in subs if lo <= X <= hi) == r + 2


def test_cartesian_shortcut_is_not_a_novelty():
    report = shortcut_novelty(right_factor(S3, S3), S3S3, 3)
    assert report.has_shortcut and report.shortcut_tags == ("2L-2L",) and not report.is_novelty
