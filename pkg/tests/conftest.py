import itertools
import os

from hypothesis import HealthCheck, settings, strategies as st
from sympy.combinatorics import Permutation as SPerm, PermutationGroup

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def perms(draw, min_degree=1, max_degree=12, degree=None):
    n = degree if degree is not None else draw(st.integers(min_degree, max_degree))
    return tuple(draw(st.permutations(range(n))))


def sympy_group(G):
    """The same group as a sympy PermutationGroup (an independent order/membership oracle)."""
    gens = [SPerm(list(g)) for g in G.generators] or [SPerm(list(range(G.degree)))]
    return PermutationGroup(gens)


def closure(gens, n):
    """Brute-force group closure by repeated products."""
    ident = tuple(range(n))
    out = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[i] for i in x)
                if y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(out)


def brute_subgroups(G):
    """Every subgroup as a frozenset: closures of element pairs, then closed under joins."""
    elems = sorted(G.element_set())
    n = G.degree
    found = {closure([a, b], n) for a in elems for b in elems}
    changed = True
    while changed:
        changed = False
        for X, Y in itertools.combinations(list(found), 2):
            J = closure(list(X | Y), n)
            if J not in found:
                found.add(J)
                changed = True
    return found


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
