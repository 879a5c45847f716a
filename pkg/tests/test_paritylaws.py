import itertools
from math import comb

import pytest
from hypothesis import given, settings, strategies as st
from sympy.combinatorics import Permutation as SPerm

from grouplat import paritylaws as laws
from grouplat.factory import agl, wreath_imprimitive_perm, wreath_product_perm
from grouplat.paritylaws import LawError
from grouplat.verification import (
    Budget,
    check_affine_law,
    check_binomial_parity,
    check_diagonal_law,
    check_frobenius_law,
    check_powerset_law,
    check_projective_law,
    check_projective_table,
    check_symplectic_identity,
    check_wreath_law,
    table_row_defective,
    table_row_report,
)

from conftest import perms


def sympy_parity(g):
    return SPerm(list(g)).parity()


def induced(s, points):
    index = {x: i for i, x in enumerate(points)}
    return [index[y] for y in (s(x) for x in points)]


def test_law_examples():
    assert laws.diagonal_parity_law(3, 2, 1) == 0
    assert laws.diagonal_parity_law(3, 3, 1) == 1
    assert all(laws.diagonal_parity_law(n, l, 0) == 0 for n in range(2, 7) for l in range(2, 5))
    assert laws.powerset_parity_law(4, 2, 1) == 0
    assert laws.powerset_parity_law(5, 2, 1) == 1
    assert all(laws.powerset_parity_law(n, 1, b) == b for n in range(2, 9) for b in (0, 1))
    assert laws.frobenius_even(2, 2) is False
    assert laws.frobenius_even(7, 2) is False
    assert laws.frobenius_even(5, 2) is True
    assert laws.affine_even(3, 2) and not laws.affine_even(1, 2) and not laws.affine_even(2, 3)
    assert laws.projective_parity(2, 5, "pgl") == 1
    assert laws.projective_parity(3, 2, "pgl") == 0
    assert laws.projective_parity(3, 9, "field", 1) == 1
    assert laws.wreath_parity_law(3, 2, "top", 1, "imprimitive") == 1
    assert laws.wreath_parity_law(3, 2, "top", 1, "product") == 1
    assert laws.wreath_parity_law(2, 3, "base", 1, "product") == 0
    assert laws.p_part_factorial(2, 8) == 7
    assert laws.p_part_factorial(3, 9) == 4
    assert laws.p_part_factorial(5, 0) == 0


def test_law_domain_errors():
    with pytest.raises(LawError):
        laws.diagonal_parity_law(3, 1, 1)
    with pytest.raises(LawError):
        laws.powerset_parity_law(4, 4, 1)
    with pytest.raises(LawError):
        laws.projective_parity(1, 5, "pgl")
    with pytest.raises(LawError):
        laws.projective_parity(2, 5, "psp")
    with pytest.raises(LawError):
        laws.wreath_parity_law(3, 2, "diagonal", 1, "product")
    with pytest.raises(LawError):
        laws.frobenius_even(9, 1)


@given(st.integers(2, 5).flatmap(lambda n: perms(degree=n)), st.integers(2, 3))
def test_diagonal_law_on_random_elements(s, l):
    n = len(s)
    points = list(itertools.product(range(n), repeat=l))
    image = induced(lambda t: tuple(s[x] for x in t), points)
    assert sympy_parity(image) == laws.diagonal_parity_law(n, l, sympy_parity(s))


@given(st.integers(3, 7).flatmap(lambda n: perms(degree=n)), st.data())
def test_powerset_law_on_random_elements(s, data):
    n = len(s)
    l = data.draw(st.integers(1, n - 1))
    points = [frozenset(c) for c in itertools.combinations(range(n), l)]
    image = induced(lambda c: frozenset(s[x] for x in c), points)
    assert sympy_parity(image) == laws.powerset_parity_law(n, l, sympy_parity(s))


@settings(max_examples=40)
@given(st.integers(2, 5), st.integers(2, 3), st.data())
def test_wreath_laws_on_random_elements(m, l, data):
    beta = data.draw(perms(degree=l))
    a = data.draw(perms(degree=m))
    base = [a] + [tuple(range(m))] * (l - 1)
    for mode, make in (("imprimitive", wreath_imprimitive_perm), ("product", wreath_product_perm)):
        assert sympy_parity(make(m, l, None, beta)) == laws.wreath_parity_law(m, l, "top", sympy_parity(beta), mode)
        assert sympy_parity(make(m, l, base, None)) == laws.wreath_parity_law(m, l, "base", sympy_parity(a), mode)


@pytest.mark.parametrize("n,q", [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (1, 4), (2, 4), (1, 5), (1, 8), (2, 5)])
def test_affine_law_against_groups(n, q):
    assert agl(n, q).group.is_even() == laws.affine_even(n, q)


@given(st.integers(0, 200), st.integers(0, 200))
def test_binomial_parity(n, k):
    assert laws.binomial_parity(n, k) == (comb(n, k) % 2 if k <= n else 0)


@given(st.sampled_from([2, 3, 5, 7, 11]), st.integers(0, 500))
def test_factorial_prime_exponent(p, n):
    from sympy import factorial, multiplicity
    assert laws.p_part_factorial(p, n) == (multiplicity(p, factorial(n)) if n > 1 else 0)


@pytest.mark.parametrize("check", [check_diagonal_law, check_powerset_law, check_frobenius_law, check_affine_law,
                                   check_projective_law, check_wreath_law, check_symplectic_identity,
                                   check_binomial_parity])
def test_law_grids(check):
    ok, measured = check(Budget())
    assert ok, measured


def test_listed_even_parts_of_semilinear_groups():
    ok, measured = check_projective_table(Budget())
    assert ok
    rows = {tuple(r["row"]): r for r in measured["rows"]}
    assert rows[(3, 2, 2)]["literal_match"] and rows[(3, 2, 2)]["index"] == 2
    assert rows[(2, 2, 2)]["literal_match"]
    # listed rows that do not describe the computed even part
    for row in [(2, 1, 2), (2, 3, 2), (2, 5, 2)]:
        assert table_row_defective(*row) and not rows[row]["literal_match"]
    assert rows[(2, 1, 2)]["index"] == 2


def test_four_dimensional_row_over_five():
    report = table_row_report(5, 1, 4)
    assert table_row_defective(5, 1, 4)
    assert not report["literal_match"] and report["index"] == report["predicted_index"]
