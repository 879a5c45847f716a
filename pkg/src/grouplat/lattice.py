"""Subgroup intervals, their shapes, homogeneous marks and overgroup counting."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from .action import _primitive_on, _systems_on
from .group import (
    BudgetError,
    Group,
    GroupError,
    SubgroupRegistry,
    _dedupe,
    alt,
    canonical_sort,
    generate,
    normalizer_in_sym,
    orbit,
    orbit_signature,
    orbits,
    sym,
)
from .paritylaws import p_part_factorial
from .perm import compose, conjugate, cycle_lengths, inverse, parity

log = logging.getLogger(__name__)

ELEMENT_BUDGET = 42_000_000
VECTOR_THRESHOLD = 500_000

__all__ = [
    "Poset", "Shape", "Interval", "overgroups", "interval", "classify", "is_second_maximal",
    "hm", "conjugates", "palffy_check", "palffy_count_overgroups", "p_part_factorial",
    "lattice_isomorphic", "vertical_sum", "prime_cycle_census", "cycle_normalizer_data",
]


# -- abstract posets ------------------------------------------------------------

class Poset:
    """Finite bounded poset given by its order relation (leq[i][j] means i <= j)."""

    def __init__(self, leq: Sequence[Sequence[bool]]):
        self.leq = [list(row) for row in leq]
        self.size = len(self.leq)

    def covers(self) -> list:
        n, leq = self.size, self.leq
        edges = []
        for i in range(n):
            for j in range(n):
                if i != j and leq[i][j]:
                    if not any(k not in (i, j) and leq[i][k] and leq[k][j] for k in range(n)):
                        edges.append((i, j))
        return edges

    def bottom(self) -> int:
        return next(i for i in range(self.size) if all(self.leq[i]))

    def top(self) -> int:
        return next(j for j in range(self.size) if all(self.leq[i][j] for i in range(self.size)))

    def heights(self) -> list:
        """Length of the longest chain from the bottom to each element."""
        order = sorted(range(self.size), key=lambda i: sum(self.leq[k][i] for k in range(self.size)))
        h = [0] * self.size
        for j in order:
            for i in range(self.size):
                if i != j and self.leq[i][j]:
                    h[j] = max(h[j], h[i] + 1)
        return h


def vertical_sum(lower: Poset, upper: Poset) -> Poset:
    """Glue the top of ``lower`` to the bottom of ``upper``."""
    t, b = lower.top(), upper.bottom()
    low_idx = list(range(lower.size))
    up_rest = [j for j in range(upper.size) if j != b]
    n = lower.size + len(up_rest)
    leq = [[False] * n for _ in range(n)]
    for i in low_idx:
        for j in low_idx:
            leq[i][j] = lower.leq[i][j]
    pos = {b: t}
    for k, j in enumerate(up_rest):
        pos[j] = lower.size + k
    for i in range(upper.size):
        for j in range(upper.size):
            if upper.leq[i][j]:
                leq[pos[i]][pos[j]] = True
    for i in low_idx:
        for j in up_rest:
            leq[i][pos[j]] = True
    return Poset(leq)


def chain_poset(k: int) -> Poset:
    return Poset([[i <= j for j in range(k + 1)] for i in range(k + 1)])


def mr_poset(r: int) -> Poset:
    n = r + 2
    leq = [[i == j for j in range(n)] for i in range(n)]
    for j in range(n):
        leq[0][j] = True
        leq[j][n - 1] = True
    return Poset(leq)


@dataclass(frozen=True)
class Shape:
    tag: str  # "Mr", "chain" or "general"
    value: int | None = None

    @property
    def mr(self) -> int | None:
        """r when the poset has length 2 with r incomparable atoms (a 3-chain counts as r = 1)."""
        if self.tag == "Mr":
            return self.value
        if self.tag == "chain" and self.value == 2:
            return 1
        return None

    def to_json(self) -> dict:
        if self.tag == "Mr":
            return {"tag": "Mr", "r": self.value}
        if self.tag == "chain":
            return {"tag": "chain", "length": self.value}
        return {"tag": "general"}

    def __str__(self):
        if self.tag == "Mr":
            return f"Mr({self.value})"
        if self.tag == "chain":
            return f"chain({self.value})"
        return "general"


def classify_poset(P: Poset) -> Shape:
    n, leq = P.size, P.leq
    if all(leq[i][j] or leq[j][i] for i in range(n) for j in range(n)):
        return Shape("chain", n - 1)
    b, t = P.bottom(), P.top()
    middle = [i for i in range(n) if i not in (b, t)]
    if all(not leq[i][j] for i in middle for j in middle if i != j):
        return Shape("Mr", len(middle))
    return Shape("general")


# -- overgroup search -------------------------------------------------------------

def _is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def _jordan_prime_cycle(g, n: int) -> bool:
    """True when some power of g is a p-cycle with p prime and p <= n - 3."""
    lengths = cycle_lengths(g)
    for p in {c for c in lengths if c <= n - 3 and _is_prime(c)}:
        if sum(1 for c in lengths if c % p == 0) == 1:
            return True
    return False


class _OvergroupSearch:
    def __init__(self, H: Group, element_budget: int):
        self.H = H
        self.n = H.degree
        self.budget = element_budget
        self.h_gens = [tuple(h) for h in H.generators]
        self.h_transitive = len(orbit(self.h_gens, 0)) == self.n
        self.h_even = all(parity(h) == 0 for h in self.h_gens)
        self.block_maps = []
        if self.h_transitive:
            for part in _systems_on(self.h_gens, range(self.n)):
                where = [0] * self.n
                for i, c in enumerate(part):
                    for x in c:
                        where[x] = i
                self.block_maps.append((part, where))
        self.giants: dict = {}

    def _giant(self, even: bool) -> Group:
        key = "A" if even else "S"
        if key not in self.giants:
            self.giants[key] = alt(self.n) if even else sym(self.n)
        return self.giants[key]

    def _primitive_with(self, g) -> bool:
        if not self.h_transitive:
            return _primitive_on(self.h_gens + [tuple(g)], range(self.n))
        for part, where in self.block_maps:
            if all(len({where[g[x]] for x in c}) == 1 for c in part):
                return False
        return True

    def extension(self, g) -> Group:
        """<H, g>, taking the Jordan shortcut when it applies."""
        n = self.n
        if n >= 5 and self._primitive_with(g):
            words = self.h_gens[:4] + [g]
            for h in self.h_gens[:4]:
                words.append(compose(g, h))
                words.append(compose(h, compose(g, g)))
            if len(self.h_gens) >= 2:
                words.append(compose(compose(g, self.h_gens[0]), self.h_gens[1]))
            for w in words:
                if _jordan_prime_cycle(w, n):
                    return self._giant(self.h_even and parity(g) == 0)
        return generate(n, _dedupe(self.h_gens + [tuple(g)]))

    @staticmethod
    def _mark(g, h_elems, marked: set) -> None:
        from math import gcd
        from .perm import order as perm_order, power
        o = perm_order(g)
        gens = [power(g, k) for k in range(1, o) if gcd(k, o) == 1]
        for x in gens:
            for h in h_elems:
                hx = compose(h, x)
                for h2 in h_elems:
                    marked.add(compose(hx, h2))

    def _contained_stabilizer(self, G: Group):
        """Chain of G based at a point whose whole stabilizer lies in H, or None."""
        H_order = self.H.order()
        for o in orbits(G):
            if H_order % (G.order() // len(o)):
                continue
            chain = G.chain_with_base([min(o)])
            if len(chain.base) < 2:
                return chain
            trans = chain.transversals[0]
            for a in sorted(o):
                t = trans[a]
                ti = inverse(t)
                if all(self.H.contains(compose(compose(ti, s), t)) for s in chain.gens[1]):
                    return G.chain_with_base([a]) if a != min(o) else chain
        return None

    def candidates(self, G: Group):
        """Elements g of G with every <H, g> arising from one of them."""
        chain = self._contained_stabilizer(G)
        if chain is not None:
            # H g H is fixed by the stabilizer-orbit of g(a): one transversal element per orbit
            stab_gens = chain.gens[1] if len(chain.base) > 1 else []
            trans = chain.transversals[0]
            reps, seen = [], set()
            for b in trans:
                if b not in seen:
                    seen.update(orbit(stab_gens, b))
                    reps.append(trans[b])
            return reps, len(reps)
        if self.h_transitive:
            chain = G.chain_with_base([0])
            tail = chain.tail(1)
            size = tail.order()
            if size > self.budget:
                raise BudgetError(f"{size} candidate elements exceed the budget {self.budget}")
            return tail.elements(), size
        size = G.order()
        if size > self.budget:
            raise BudgetError(f"{size} candidate elements exceed the budget {self.budget}")
        return G.chain.elements(), size

    def _normalizer_fixing_zero(self, G: Group) -> list:
        """Elements of N_G(H) fixing point 0; empty when the search is out of budget."""
        try:
            N = normalizer_in_sym(self.H)
        except BudgetError:
            return []
        return [g for g in N.elements() if g[0] == 0 and G.contains(g)]

    def representatives(self, G: Group, chain) -> list:
        """One element of the stabilizer of 0 per class of g ~ h g h' ~ n^-1 g n (vectorized)."""
        import numpy as np

        n = self.n
        E = _chain_rows(chain, n)
        m = E.shape[0]
        weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
        keys = E.astype(np.int64) @ weights
        order = np.argsort(keys)
        sorted_keys = keys[order]

        def locate(X):
            return order[np.searchsorted(sorted_keys, X.astype(np.int64) @ weights)]

        # back_to_zero[x] is the element of H mapping x to 0 (H is regular on its orbit)
        h_elems = sorted(self.H.element_set())
        back_to_zero = np.zeros((n, n), dtype=E.dtype)
        for h in h_elems:
            back_to_zero[h.index(0)] = h
        maps = []
        for h in self.h_gens:
            X = E[:, list(h)]
            maps.append(locate(np.take_along_axis(back_to_zero[X[:, 0]], X.astype(np.intp), 1)))
        for c in self._normalizer_fixing_zero(G):
            ci = inverse(c)
            maps.append(locate(np.asarray(c, dtype=E.dtype)[E[:, list(ci)]]))
        inverses = []
        for f in maps:
            finv = np.empty_like(f)
            finv[f] = np.arange(m)
            inverses.append(finv)
        label = np.arange(m)
        while True:
            prev = label
            for f in maps + inverses:
                label = np.minimum(label, label[f])
            label = label[label]
            if np.array_equal(label, prev):
                break
        reps = np.flatnonzero(label == np.arange(m))
        log.debug("%d candidates reduced to %d classes", m, reps.size)
        return [tuple(int(x) for x in E[i]) for i in reps]

    def run_vectorized(self, G: Group, registry: SubgroupRegistry) -> None:
        H = self.H
        registry.add(H)
        registry.add(G)
        G_order = G.order()
        chain = G.chain_with_base([0]).tail(1)
        if chain.order() > self.budget:
            raise BudgetError(f"{chain.order()} candidate elements exceed the budget {self.budget}")
        conjugators = self._normalizer_fixing_zero(G)
        ident = tuple(range(self.n))
        for g in self.representatives(G, chain):
            if g == ident or H.contains(g):
                continue
            K = self.extension(g)
            if K.order() == G_order:
                continue
            K, new = registry.add(K)
            if new and K.order() < G_order and not _contains_alt(K):
                for c in conjugators:
                    registry.add(generate(self.n, [conjugate(x, c) for x in K.generators]))

    def run(self, G: Group, registry: SubgroupRegistry, depth: int = 0) -> None:
        H = self.H
        registry.add(H)
        registry.add(G)
        ident = tuple(range(self.n))
        covered: list = []
        elems, size = self.candidates(G)
        log.debug("overgroup search depth %d over %d candidates", depth, size)
        G_order = G.order()
        # <H, g> only depends on the double coset HgH and on the cyclic group <g>
        h_elems = sorted(H.element_set()) if H.order() <= 300 and size <= 500_000 else None
        marked: set = set()
        for g in elems:
            if g in marked or g == ident or H.contains(g):
                continue
            if any(K.contains(g) for K in covered):
                continue
            K = self.extension(g)
            if h_elems is not None:
                self._mark(g, h_elems, marked)
            if K.order() == G_order:
                continue
            K, new = registry.add(K)
            if K.order() * 2 == G_order and _is_giant_pair(K, G):
                continue
            if new or K not in covered:
                # every <H, x> with x in K lives in [H, K]; search it once and skip K afterwards
                if K.order() < G_order and not _contains_alt(K):
                    self.run(K, registry, depth + 1)
                    covered.append(K)


def _contains_alt(K: Group) -> bool:
    n = K.degree
    return n >= 5 and K.order() * 2 >= _factorial(n)


def _is_giant_pair(K: Group, G: Group) -> bool:
    return _contains_alt(K)


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _join_closure(registry: SubgroupRegistry, G: Group) -> None:
    groups = list(registry.groups)
    pairs_done = set()
    changed = True
    while changed:
        changed = False
        groups = list(registry.groups)
        for i, A in enumerate(groups):
            for j in range(i + 1, len(groups)):
                B = groups[j]
                key = (id(A), id(B))
                if key in pairs_done:
                    continue
                pairs_done.add(key)
                if A.is_subgroup_of(B) or B.is_subgroup_of(A):
                    continue
                J = generate(G.degree, _dedupe(list(A.generators) + list(B.generators)))
                _, new = registry.add(J)
                if new:
                    changed = True


def overgroups(H: Group, G: Group, element_budget: int = ELEMENT_BUDGET) -> list:
    """Every K with H <= K <= G, canonically sorted."""
    if H.degree != G.degree:
        raise GroupError("degrees differ")
    if not H.is_subgroup_of(G):
        raise GroupError("bottom group is not contained in the top group")
    registry = SubgroupRegistry()
    search = _OvergroupSearch(H, element_budget)
    if search.h_transitive and G.order() // G.degree > VECTOR_THRESHOLD:
        search.run_vectorized(G, registry)
    else:
        search.run(G, registry)
    _join_closure(registry, G)
    return canonical_sort(registry.groups)


# -- intervals ----------------------------------------------------------------------

class Interval:
    def __init__(self, bottom: Group, top: Group, nodes: list):
        self.bottom, self.top, self.nodes = bottom, top, nodes
        n = len(nodes)
        self.leq = [[i == j or (nodes[i].order() < nodes[j].order() and nodes[i].order() and
                                 nodes[j].order() % nodes[i].order() == 0 and nodes[i].is_subgroup_of(nodes[j]))
                     for j in range(n)] for i in range(n)]
        self.poset = Poset(self.leq)
        self.hasse = self.poset.covers()
        self.shape = classify_poset(self.poset)

    def __len__(self):
        return len(self.nodes)

    def index_of(self, K: Group) -> int:
        for i, N in enumerate(self.nodes):
            if N.order() == K.order() and K.is_subgroup_of(N):
                return i
        raise KeyError("subgroup not in interval")

    def middle(self) -> list:
        b, t = self.poset.bottom(), self.poset.top()
        return [N for i, N in enumerate(self.nodes) if i not in (b, t)]

    def to_json(self) -> dict:
        return {
            "bottom": {"order": self.bottom.order()},
            "top": {"order": self.top.order()},
            "nodes": [{"index": i, "order": N.order(), "orbits": list(orbit_signature(N))}
                      for i, N in enumerate(self.nodes)],
            "hasse": [list(e) for e in self.hasse],
            "shape": self.shape.to_json(),
        }

    def to_dot(self) -> str:
        lines = ["digraph {"]
        for i, N in enumerate(self.nodes):
            lines.append(f'  n{i} [label="order={N.order()}"];')
        for i, j in self.hasse:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def interval(H: Group, G: Group, element_budget: int = ELEMENT_BUDGET) -> Interval:
    return Interval(H, G, overgroups(H, G, element_budget))


def classify(I: Interval) -> Shape:
    return I.shape


def is_second_maximal(H: Group, U: Group, element_budget: int = ELEMENT_BUDGET) -> tuple:
    """(flag, witnesses or reason): True when the interval has length 2."""
    if H.order() == U.order() and H.is_subgroup_of(U):
        return False, "equal"
    I = interval(H, U, element_budget)
    if I.shape.tag == "chain" and I.shape.value == 1:
        return False, "maximal"
    r = I.shape.mr
    if r is None:
        return False, f"shape {I.shape}"
    return True, I.middle()


# -- homogeneous marks ----------------------------------------------------------------

def conjugates(K: Group, ambient: Group, budget: int = 5000) -> list:
    """All ambient-conjugates of K (orbit under conjugation by the ambient generators)."""
    reg = SubgroupRegistry()
    reg.add(K)
    queue = [K]
    while queue:
        X = queue.pop()
        for a in ambient.generators:
            Y = generate(K.degree, [conjugate(x, a) for x in X.generators])
            Y, new = reg.add(Y)
            if new:
                if len(reg) > budget:
                    raise BudgetError(f"more than {budget} conjugates")
                queue.append(Y)
    return canonical_sort(reg.groups)


def _related(X: Group, L: Group) -> bool:
    if X.order() >= L.order():
        return X.order() % L.order() == 0 and L.is_subgroup_of(X)
    return L.order() % X.order() == 0 and X.is_subgroup_of(L)


def hm(K: Group, L: Group, ambient: Group, budget: int = 5000) -> int:
    """Number of ambient-conjugates of K containing L or contained in L."""
    for X in (K, L):
        if not X.is_subgroup_of(ambient):
            raise GroupError("argument is not a subgroup of the ambient group")
    return sum(1 for X in conjugates(K, ambient, budget) if _related(X, L))


def palffy_check(K: Group, L: Group, ambient: Group, budget: int = 5000) -> bool:
    """|G:N(L)| hm(K,L) == |G:N(K)| hm(L,K), with indices counted as conjugacy-class sizes."""
    cl_k = conjugates(K, ambient, budget)
    cl_l = conjugates(L, ambient, budget)
    hm_kl = sum(1 for X in cl_k if _related(X, L))
    hm_lk = sum(1 for X in cl_l if _related(X, K))
    return len(cl_l) * hm_kl == len(cl_k) * hm_lk


def palffy_count_overgroups(G: Group | int, H: Group | int, data: dict) -> int:
    """Ambient-conjugates of G containing H: |N(H):H| hm(H,G) / (|N(G):G| |G:H|)."""
    g_order = G if isinstance(G, int) else G.order()
    h_order = H if isinstance(H, int) else H.order()
    if g_order % h_order:
        raise GroupError("H is not a subgroup of G")
    num = data["norm_index_H"] * data["hm_H_G"]
    den = data["norm_index_G"] * (g_order // h_order)
    if num % den:
        raise GroupError(f"inconsistent ingredients: {num}/{den} is not an integer")
    return num // den


# -- element census (vectorized) --------------------------------------------------

def _chain_rows(chain, n: int, limit: int = 50_000_000):
    """All elements of a stabilizer chain as rows of an int16 array."""
    import numpy as np

    rows = np.arange(n, dtype=np.int16)[None, :]
    for trans in reversed(chain.transversals):
        T = np.array(list(trans.values()), dtype=np.int16)
        if rows.shape[0] * T.shape[0] > limit:
            raise BudgetError("element array exceeds memory budget")
        rows = np.concatenate([u[rows] for u in T])
    return rows


def prime_cycle_census(G: Group, batch_rows: int = 2_000_000) -> int:
    """Number of elements of G that are full cycles on all points (degree must be prime)."""
    import numpy as np

    n = G.degree
    chain = G.chain
    levels = [np.array(list(t.values()), dtype=np.int16) for t in chain.transversals]
    if not levels:
        return 0
    # rows of the stabilizer of the first base point: products over deeper levels
    stab = np.arange(n, dtype=np.int16)[None, :]
    for T in reversed(levels[1:]):
        stab = np.concatenate([u[stab] for u in T])
        if stab.shape[0] > batch_rows * 4:
            raise BudgetError("stabilizer census exceeds memory budget")
    count = 0
    for t in levels[0]:
        elems = t[stab]
        x = np.zeros(elems.shape[0], dtype=np.int16)
        alive = np.ones(elems.shape[0], dtype=bool)
        rows = np.arange(elems.shape[0])
        for step in range(1, n):
            x = elems[rows, x]
            alive &= x != 0
        x = elems[rows, x]
        count += int(np.count_nonzero(alive & (x == 0)))
    return count


def _primitive_root(p: int) -> int:
    return next(u for u in range(2, p) if len({pow(u, k, p) for k in range(1, p)}) == p - 1)


@dataclass(frozen=True)
class CycleNormalizerData:
    """Ingredients for counting conjugates of G over the normalizer H of a full cycle."""

    p: int
    group_order: int
    h_order: int
    norm_index_h: int
    hm_h_g: int
    norm_index_g: int
    per_class: int

    def to_json(self) -> dict:
        return dict(self.__dict__)


def cycle_normalizer_data(G: Group, norm_index_g: int = 1, seed: int = 0) -> CycleNormalizerData:
    """G of prime degree p containing a p-cycle; H = G ∩ N_Sym(<c>), ambient Alt(p).

    The Sylow number is computed twice: by the full-cycle census and as |G : N_G(<c>)|.
    ``norm_index_g`` (|N_Alt(G) : G|) is supplied by the caller.
    """
    import random

    p = G.degree
    if not _is_prime(p):
        raise GroupError("degree must be prime")
    rng = random.Random(seed)
    for _ in range(10_000):
        c = G.chain.random_element(rng)
        if cycle_lengths(c) == [p]:
            break
    else:
        raise GroupError("no full cycle found in G")
    # label points along the cycle, then x_i -> x_{u i} normalizes <c>
    track = [0]
    for _ in range(p - 1):
        track.append(c[track[-1]])
    u = _primitive_root(p)
    m = [0] * p
    for i, x in enumerate(track):
        m[x] = track[u * i % p]
    affine = generate(p, [c, tuple(m)])
    H = generate(p, _dedupe([g for g in affine.elements() if G.contains(g)]))
    even = [g for g in affine.elements() if parity(g) == 0]
    normalizing = sum(1 for g in even if all(H.contains(conjugate(h, g)) for h in H.generators))
    if normalizing % H.order():
        raise GroupError("normalizer count is not a multiple of |H|")
    census = prime_cycle_census(G)
    sylow = census // (p - 1)
    if census % (p - 1) or sylow * H.order() != G.order():
        raise GroupError(f"Sylow census {census} disagrees with |G:N_G(P)| = {G.order() // H.order()}")
    data = {"norm_index_H": normalizing // H.order(), "hm_H_G": sylow, "norm_index_G": norm_index_g}
    return CycleNormalizerData(
        p=p, group_order=G.order(), h_order=H.order(), norm_index_h=data["norm_index_H"],
        hm_h_g=sylow, norm_index_g=norm_index_g,
        per_class=palffy_count_overgroups(G, H, data),
    )


# -- lattice isomorphism -------------------------------------------------------------

def lattice_isomorphic(A, B, max_nodes: int = 64) -> bool:
    """Poset isomorphism of two intervals (or posets) by backtracking on rank profiles."""
    P = A.poset if isinstance(A, Interval) else A
    Q = B.poset if isinstance(B, Interval) else B
    if P.size > max_nodes or Q.size > max_nodes:
        raise BudgetError(f"posets above {max_nodes} nodes")
    if P.size != Q.size:
        return False
    n = P.size

    def profile(X: Poset):
        h = X.heights()
        up = [sum(X.leq[i]) for i in range(n)]
        down = [sum(X.leq[k][i] for k in range(n)) for i in range(n)]
        return [(h[i], up[i], down[i]) for i in range(n)]

    pp, qp = profile(P), profile(Q)
    if sorted(pp) != sorted(qp):
        return False
    order = sorted(range(n), key=lambda i: pp[i])
    used = [False] * n
    image = [None] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        i = order[k]
        for j in range(n):
            if used[j] or qp[j] != pp[i]:
                continue
            ok = True
            for kk in range(k):
                a = order[kk]
                if P.leq[a][i] != Q.leq[image[a]][j] or P.leq[i][a] != Q.leq[j][image[a]]:
                    ok = False
                    break
            if ok:
                used[j] = True
                image[i] = j
                if extend(k + 1):
                    return True
                used[j] = False
        return False

    return extend(0)


# -- shoe (diagnostic) ---------------------------------------------------------------

def shoe(G: Group, components: Iterable[Group], budget: int = 200_000) -> Group:
    """Subgroup of G normalizing every given component (elementwise, small groups only)."""
    if G.order() > budget:
        raise BudgetError("shoe computation exceeds the element budget")
    comps = list(components)
    keep = []
    for g in G.chain.elements():
        if all(all(C.contains(conjugate(c, g)) for c in C.generators) for C in comps):
            keep.append(g)
    return generate(G.degree, _dedupe(keep))
