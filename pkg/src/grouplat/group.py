"""Permutation groups backed by a deterministic stabilizer chain."""
from __future__ import annotations

import itertools
import json
import logging
import random
from math import factorial
from typing import Iterable, Iterator, Sequence

from .perm import (
    Permutation,
    PermutationError,
    compose,
    cycle_lengths,
    inverse,
    parity,
)

log = logging.getLogger(__name__)

ELEMENT_KEY_LIMIT = 10_000


class GroupError(ValueError):
    """Invalid group input or a request outside the supported budget."""


class BudgetError(GroupError):
    """The computation was refused because it exceeds a stated budget."""


# -- stabilizer chain ---------------------------------------------------------

class StabilizerChain:
    """Base, strong generators per level and explicit transversals.

    ``transversals[i][x]`` maps ``base[i]`` to ``x`` and lies in the stabilizer
    of ``base[:i]``.  Transversal entries are never replaced once created, which
    keeps verified Schreier generators valid while the chain grows.
    """

    def __init__(self, degree: int, gens: Sequence[tuple], base_prefix: Sequence[int] = ()):
        self.degree = degree
        ident = tuple(range(degree))
        self.identity = ident
        uniq = []
        seen = set()
        for g in gens:
            g = tuple(g)
            if g != ident and g not in seen:
                seen.add(g)
                uniq.append(g)
        self.base: list = []
        for b in base_prefix:
            if b in self.base:
                raise GroupError(f"repeated base point {b}")
            self.base.append(b)
        for g in uniq:
            if all(g[b] == b for b in self.base):
                self.base.append(_first_moved(g))
        self.gens: list = []
        self.transversals: list = []
        for i in range(len(self.base)):
            fixed = self.base[:i]
            self.gens.append([g for g in uniq if all(g[b] == b for b in fixed)])
            self.transversals.append({self.base[i]: ident})
            self._extend_orbit(i)
        self._schreier_sims()

    # orbit bookkeeping
    def _extend_orbit(self, i: int, new_gens: Sequence[tuple] | None = None) -> None:
        trans = self.transversals[i]
        gens = self.gens[i]
        if new_gens is None:
            frontier = list(trans)
        else:
            # apply the new generators to every known point, then close up
            frontier = []
            for x in list(trans):
                u = trans[x]
                for s in new_gens:
                    y = s[x]
                    if y not in trans:
                        trans[y] = compose(u, s)
                        frontier.append(y)
        while frontier:
            nxt = []
            for x in frontier:
                u = trans[x]
                for s in gens:
                    y = s[x]
                    if y not in trans:
                        trans[y] = compose(u, s)
                        nxt.append(y)
            frontier = nxt

    def strip(self, g: tuple, start: int = 0) -> tuple:
        """Sift ``g`` from level ``start``; returns (residue, level reached)."""
        base = self.base
        for j in range(start, len(base)):
            x = g[base[j]]
            u = self.transversals[j].get(x)
            if u is None:
                return g, j
            if x != base[j]:
                g = compose(g, inverse(u))
        return g, len(base)

    def _add_generator(self, h: tuple, upto: int, start: int) -> None:
        if upto == len(self.base):
            self.base.append(_first_moved(h))
            self.gens.append([])
            self.transversals.append({self.base[-1]: self.identity})
        for level in range(start, upto + 1):
            self.gens[level].append(h)
            self._extend_orbit(level, [h])

    def _schreier_sims(self) -> None:
        ident = self.identity
        checked: list = [set() for _ in self.base]
        i = len(self.base) - 1
        while i >= 0:
            grew = False
            trans = self.transversals[i]
            gens = self.gens[i]
            for x in list(trans):
                u = trans[x]
                for k, s in enumerate(gens):
                    if (x, k) in checked[i]:
                        continue
                    y = s[x]
                    h = compose(compose(u, s), inverse(trans[y])) if y != x or u != ident else s
                    if h != ident:
                        residue, j = self.strip(h, i + 1)
                        if residue != ident:
                            self._add_generator(residue, j, i + 1)
                            while len(checked) < len(self.base):
                                checked.append(set())
                            i = j
                            grew = True
                            break
                    checked[i].add((x, k))
                if grew:
                    break
            if not grew:
                i -= 1

    # queries
    def order(self) -> int:
        o = 1
        for t in self.transversals:
            o *= len(t)
        return o

    def contains(self, g: tuple) -> bool:
        residue, _ = self.strip(tuple(g))
        return residue == self.identity

    def tail(self, level: int) -> "StabilizerChain":
        """Chain of the stabilizer of ``base[:level]``."""
        c = StabilizerChain.__new__(StabilizerChain)
        c.degree = self.degree
        c.identity = self.identity
        c.base = self.base[level:]
        c.gens = self.gens[level:]
        c.transversals = self.transversals[level:]
        return c

    def random_element(self, rng: random.Random) -> tuple:
        g = self.identity
        for t in reversed(self.transversals):
            keys = list(t)
            g = compose(g, t[keys[rng.randrange(len(keys))]])
        return g

    def elements(self) -> Iterator[tuple]:
        levels = [list(t.values()) for t in self.transversals]
        k = len(levels)
        ident = self.identity

        def rec(level):
            if level == k:
                yield ident
                return
            reps = levels[level]
            for h in rec(level + 1):
                for u in reps:
                    yield compose(h, u)

        return rec(0)


def _lex_least_outside(chain: StabilizerChain, K: StabilizerChain) -> tuple:
    """Lex-least element of the chain's group not in K; the chain has base 0..n-1."""
    n = chain.degree
    # level i stabilizes 0..i-1; whole cosets can be skipped once that stabilizer lies in K
    inside = [all(K.contains(g) for g in chain.gens[i]) for i in range(n)] + [True]

    def search(level: int, prefix: tuple):
        if inside[level]:
            return None if K.contains(prefix) else _lex_least_in_coset(chain, level, prefix)
        trans = chain.transversals[level]
        for y in sorted(trans, key=prefix.__getitem__):
            found = search(level + 1, compose(trans[y], prefix))
            if found is not None:
                return found
        return None

    out = search(0, chain.identity)
    if out is None:
        raise GroupError("subgroup already equals the group")
    return out


def _lex_least_in_coset(chain: StabilizerChain, level: int, prefix: tuple) -> tuple:
    for i in range(level, chain.degree):
        trans = chain.transversals[i]
        y = min(trans, key=prefix.__getitem__)
        prefix = compose(trans[y], prefix)
    return prefix


def _first_moved(g: tuple) -> int:
    for i, x in enumerate(g):
        if i != x:
            return i
    raise GroupError("identity has no moved point")


# -- group -------------------------------------------------------------------

class Group:
    """A permutation group of a fixed degree given by generators."""

    def __init__(self, degree: int, generators: Iterable = (), name: str | None = None,
                 _chain: StabilizerChain | None = None):
        if degree < 1:
            raise GroupError("degree must be at least 1")
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if len(g) != degree:
                raise GroupError(f"generator of degree {len(g)} in a group of degree {degree}")
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name
        self._chain = _chain
        self._elements = None
        self._lex_gens = None

    # chain access
    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, self.generators)
        return self._chain

    def chain_with_base(self, prefix: Sequence[int]) -> StabilizerChain:
        prefix = list(prefix)
        if self._chain is not None and self._chain.base[:len(prefix)] == prefix:
            return self._chain
        return StabilizerChain(self.degree, self.generators, prefix)

    def order(self) -> int:
        return self.chain.order()

    def __len__(self):
        return self.order()

    def contains(self, g) -> bool:
        if len(g) != self.degree:
            raise GroupError("degree mismatch in membership test")
        return self.chain.contains(tuple(g))

    def __contains__(self, g) -> bool:
        return self.contains(g)

    def is_subgroup_of(self, other: "Group") -> bool:
        return all(other.contains(g) for g in self.generators)

    def __eq__(self, other):
        if not isinstance(other, Group):
            return NotImplemented
        return (self.degree == other.degree and self.order() == other.order()
                and self.is_subgroup_of(other))

    def __hash__(self):
        return hash((self.degree, self.order()))

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<Group{label} degree={self.degree} order={self.order()}>"

    def identity(self) -> Permutation:
        return Permutation._trusted(range(self.degree))

    def elements(self) -> Iterator[Permutation]:
        for g in self.chain.elements():
            yield Permutation._trusted(g)

    def element_set(self) -> frozenset:
        """All elements as plain tuples (small groups only)."""
        if self._elements is None:
            if self.order() > 5_000_000:
                raise BudgetError("element set requested for a group of order above 5e6")
            self._elements = frozenset(self.chain.elements())
        return self._elements

    def random_element(self, rng: random.Random) -> Permutation:
        return Permutation._trusted(self.chain.random_element(rng))

    def lex_generators(self) -> tuple:
        """Greedy generating set: each entry is the lex-least element outside the span of the previous ones.

        Depends only on the element set, so it serves as a canonical tie-breaker.
        """
        if self._lex_gens is None:
            n = self.degree
            chain = self.chain_with_base(range(n))
            gens: list = []
            K = StabilizerChain(n, [])
            while K.order() < self.order():
                gens.append(_lex_least_outside(chain, K))
                K = StabilizerChain(n, gens)
            self._lex_gens = tuple(gens)
        return self._lex_gens

    def is_trivial(self) -> bool:
        return self.order() == 1

    def moved_points(self) -> list:
        pts = set()
        for g in self.generators:
            pts.update(i for i, x in enumerate(g) if i != x)
        return sorted(pts)

    def is_even(self) -> bool:
        return all(parity(g) == 0 for g in self.generators)

    def to_json(self) -> dict:
        rec = {"degree": self.degree, "generators": [list(g) for g in self.generators]}
        if self.name:
            rec["name"] = self.name
        return rec


def generate(degree: int, gens: Iterable = (), name: str | None = None) -> Group:
    """Group generated by ``gens``; an empty list gives the trivial group."""
    G = Group(degree, gens, name)
    G.chain  # build eagerly so errors surface here
    return G


def group_from_json(record) -> Group:
    if isinstance(record, str):
        record = json.loads(record)
    try:
        degree = int(record["degree"])
        gens = [Permutation(g) for g in record.get("generators", [])]
    except (KeyError, TypeError, PermutationError) as exc:
        raise GroupError(f"bad group record: {exc}") from exc
    return generate(degree, gens, record.get("name"))


# -- basic families -----------------------------------------------------------

def sym(n: int) -> Group:
    if n < 1:
        raise GroupError("degree must be positive")
    gens = []
    if n >= 2:
        gens.append(tuple([1, 0] + list(range(2, n))))
    if n >= 3:
        gens.append(tuple(list(range(1, n)) + [0]))
    return generate(n, gens, f"S{n}")


def alt(n: int) -> Group:
    if n < 1:
        raise GroupError("degree must be positive")
    gens = []
    for k in range(2, n):
        g = list(range(n))
        g[0], g[1], g[k] = 1, k, 0  # 3-cycle (0 1 k)
        gens.append(tuple(g))
    return generate(n, gens, f"A{n}")


def cyclic(n: int) -> Group:
    return generate(n, [tuple(list(range(1, n)) + [0])] if n > 1 else [], f"C{n}")


def trivial(n: int) -> Group:
    return generate(n, [], "1")


# -- orbits and simple derived groups ----------------------------------------

def orbit(gens: Sequence[tuple], point: int) -> list:
    seen = {point}
    out = [point]
    for x in out:
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                out.append(y)
    return out


def orbits(G: Group) -> list:
    seen = set()
    out = []
    for p in range(G.degree):
        if p not in seen:
            o = sorted(orbit(G.generators, p))
            seen.update(o)
            out.append(o)
    return out


def is_transitive(G: Group) -> bool:
    return len(orbit(G.generators, 0)) == G.degree


def point_stabilizer(G: Group, point: int) -> Group:
    if not 0 <= point < G.degree:
        raise GroupError(f"point {point} outside degree {G.degree}")
    return pointwise_stabilizer(G, [point])


def pointwise_stabilizer(G: Group, points: Sequence[int]) -> Group:
    points = list(points)
    for p in points:
        if not 0 <= p < G.degree:
            raise GroupError(f"point {p} outside degree {G.degree}")
    chain = G.chain_with_base(points)
    tail = chain.tail(len(points))
    gens = tail.gens[0] if tail.base else []
    return Group(G.degree, gens, None, _chain=tail)


def even_part(G: Group) -> Group:
    """Intersection with the alternating group."""
    odd = [g for g in G.generators if parity(g)]
    if not odd:
        return G
    t = odd[0]
    t_inv = inverse(t)
    gens = []
    for s in G.generators:
        if parity(s):
            gens.append(compose(s, t_inv))  # coset 1 -> t
            gens.append(compose(t, s))  # coset t -> 1
        else:
            gens.append(s)
            gens.append(compose(compose(t, s), t_inv))
    name = f"{G.name}^e" if G.name else None
    return generate(G.degree, _dedupe(gens), name)


def _dedupe(gens):
    ident = None
    out, seen = [], set()
    for g in gens:
        g = tuple(g)
        if ident is None:
            ident = tuple(range(len(g)))
        if g != ident and g not in seen:
            seen.add(g)
            out.append(g)
    return out


def join(*groups: Group) -> Group:
    degree = groups[0].degree
    gens = []
    for H in groups:
        if H.degree != degree:
            raise GroupError("cannot join groups of different degrees")
        gens.extend(H.generators)
    return generate(degree, _dedupe(gens))


def conjugate_group(G: Group, c) -> Group:
    from .perm import conjugate as conj
    return generate(G.degree, [conj(g, c) for g in G.generators])


def normal_closure(G: Group, gens: Sequence[tuple]) -> Group:
    """Smallest normal subgroup of G containing ``gens``."""
    degree = G.degree
    from .perm import conjugate as conj
    N = generate(degree, _dedupe(gens))
    queue = list(N.generators)
    while queue:
        h = queue.pop()
        for g in G.generators:
            c = conj(h, g)
            if not N.contains(c):
                N = generate(degree, list(N.generators) + [c])
                queue.append(c)
    return N


def is_normal(N: Group, G: Group) -> bool:
    from .perm import conjugate as conj
    return all(N.contains(conj(h, g)) for h in N.generators for g in G.generators)


def restrict(G: Group, points: Sequence[int]) -> Group:
    """Action of G on an invariant set, relabelled 0..len(points)-1 in the given order."""
    index = {p: i for i, p in enumerate(points)}
    gens = []
    for g in G.generators:
        try:
            gens.append(tuple(index[g[p]] for p in points))
        except KeyError:
            raise GroupError("point set is not invariant") from None
    return generate(len(points), _dedupe(gens))


# -- subgroup identity -----------------------------------------------------

def orbit_signature(G: Group) -> tuple:
    return tuple(sorted(len(o) for o in orbits(G)))


def subgroup_key(G: Group):
    """Exact key (sorted elements) for small groups, coarse fingerprint otherwise."""
    if G.order() <= ELEMENT_KEY_LIMIT:
        return ("elements", tuple(sorted(G.element_set())))
    return ("fingerprint", G.order(), tuple(tuple(o) for o in orbits(G)))


class SubgroupRegistry:
    """Deduplicates subgroups: exact keys when small, membership checks otherwise."""

    def __init__(self):
        self._buckets: dict = {}
        self.groups: list = []

    def find(self, G: Group):
        for H in self._buckets.get(subgroup_key(G), []):
            if H.order() == G.order() and G.is_subgroup_of(H):
                return H
        return None

    def add(self, G: Group):
        key = subgroup_key(G)
        bucket = self._buckets.setdefault(key, [])
        for H in bucket:
            if H.order() == G.order() and G.is_subgroup_of(H):
                return H, False
        bucket.append(G)
        self.groups.append(G)
        return G, True

    def __len__(self):
        return len(self.groups)

    def __iter__(self):
        return iter(self.groups)


def canonical_sort(groups: Iterable[Group]) -> list:
    """Order by (order, orbit signature, lex-least generating set)."""
    return sorted(groups, key=lambda H: (H.order(), orbit_signature(H), H.lex_generators()))


# -- coset action -------------------------------------------------------------

def _coset_rep(chain: StabilizerChain, g: tuple) -> tuple:
    """Lexicographically least element of the right coset H g (base must be 0..n-1)."""
    for b, trans in zip(chain.base, chain.transversals):
        if len(trans) == 1:
            continue
        best = min(trans, key=g.__getitem__)
        if best != b:
            g = compose(trans[best], g)
    return g


def coset_action(G: Group, H: Group) -> tuple:
    """Action of G on the right cosets of H; returns (image group, faithful flag)."""
    if H.degree != G.degree or not H.is_subgroup_of(G):
        raise GroupError("second argument is not a subgroup")
    n = G.degree
    hchain = H.chain_with_base(range(n))
    ident = tuple(range(n))
    reps = [_coset_rep(hchain, ident)]
    index = {reps[0]: 0}
    i = 0
    while i < len(reps):
        r = reps[i]
        for g in G.generators:
            c = _coset_rep(hchain, compose(r, g))
            if c not in index:
                index[c] = len(reps)
                reps.append(c)
        i += 1
    expected = G.order() // H.order()
    if len(reps) != expected:
        raise GroupError(f"coset enumeration found {len(reps)} cosets, expected {expected}")
    images = []
    for g in G.generators:
        images.append(tuple(index[_coset_rep(hchain, compose(r, g))] for r in reps))
    image = generate(len(reps), _dedupe(images) if len(reps) > 1 else [])
    return image, image.order() == G.order()


# -- conjugation searches -----------------------------------------------------

def _cycle_structure(g) -> list:
    seen = [False] * len(g)
    cyc = []
    for i in range(len(g)):
        if not seen[i]:
            c = [i]
            seen[i] = True
            j = g[i]
            while j != i:
                c.append(j)
                seen[j] = True
                j = g[j]
            cyc.append(c)
    return cyc


def _centralizer_size(g) -> int:
    counts: dict = {}
    for length in cycle_lengths(g):
        counts[length] = counts.get(length, 0) + 1
    size = 1
    for length, m in counts.items():
        size *= factorial(m) * length ** m
    return size


def _conjugators(g, y) -> Iterator[tuple]:
    """Every x with x^-1 g x = y (g and y of the same cycle type)."""
    n = len(g)
    cg = sorted(_cycle_structure(g), key=len)
    cy = sorted(_cycle_structure(y), key=len)
    if [len(c) for c in cg] != [len(c) for c in cy]:
        return
    groups: dict = {}
    for c in cg:
        groups.setdefault(len(c), [[], []])[0].append(c)
    for c in cy:
        groups[len(c)][1].append(c)
    lengths = sorted(groups)

    def assign(li, x):
        if li == len(lengths):
            yield tuple(x)
            return
        length = lengths[li]
        src, dst = groups[length]
        for perm in itertools.permutations(range(len(dst))):
            for shifts in itertools.product(range(length), repeat=len(src)):
                for a, b, s in zip(src, perm, shifts):
                    target = dst[b]
                    for k in range(length):
                        x[a[k]] = target[(k + s) % length]
                yield from assign(li + 1, x)

    yield from assign(0, [0] * n)


def _elements_of_type(G: Group, lengths: list) -> Iterator[tuple]:
    for h in G.chain.elements():
        if sorted(cycle_lengths(h)) == lengths:
            yield h


def _pick_probe(G: Group) -> tuple:
    rng = random.Random(20240601)
    candidates = [tuple(g) for g in G.generators]
    for _ in range(40):
        candidates.append(G.chain.random_element(rng))
    return min(candidates, key=lambda g: (_centralizer_size(g), g))


def normalizer_in_sym(G: Group, budget: int = 12) -> Group:
    """Normalizer of G in the full symmetric group on its points."""
    n = G.degree
    if n > budget:
        raise BudgetError(f"degree {n} exceeds the normalizer budget {budget}")
    if G.order() * 2 >= factorial(n):
        return sym(n)
    if G.is_trivial():
        return sym(n)
    gens = list(G.generators)
    found = list(gens)
    if n < 9:
        N = generate(n, found)
        for x in itertools.permutations(range(n)):
            if N.contains(x):
                continue
            if all(G.contains(_conj(g, x)) for g in gens):
                found.append(x)
                N = generate(n, found)
        return N
    probe = _pick_probe(G)
    lengths = sorted(cycle_lengths(probe))
    N = generate(n, found)
    for y in _elements_of_type(G, lengths):
        for x in _conjugators(probe, y):
            if N.contains(x):
                continue
            if all(G.contains(_conj(g, x)) for g in gens):
                found.append(x)
                N = generate(n, found)
    return N


def _conj(g, x) -> tuple:
    out = [0] * len(g)
    for i, gi in enumerate(g):
        out[x[i]] = x[gi]
    return tuple(out)


def is_perm_isomorphic(G: Group, H: Group, budget: int = 12):
    """A permutation c with c^-1 G c = H, or None."""
    if G.degree != H.degree:
        raise GroupError("degrees differ")
    n = G.degree
    if n > budget:
        raise BudgetError(f"degree {n} exceeds the search budget {budget}")
    if G.order() != H.order():
        return None
    if orbit_signature(G) != orbit_signature(H):
        return None
    if G.is_trivial():
        return Permutation._trusted(range(n))
    gens = list(G.generators)
    if n < 9:
        for x in itertools.permutations(range(n)):
            if all(H.contains(_conj(g, x)) for g in gens):
                return Permutation._trusted(x)
        return None
    probe = _pick_probe(G)
    lengths = sorted(cycle_lengths(probe))
    for y in _elements_of_type(H, lengths):
        for x in _conjugators(probe, y):
            if all(H.contains(_conj(g, x)) for g in gens):
                return Permutation._trusted(x)
    return None


# -- exhaustive subgroup list (oracle scale) ----------------------------------

def _close(gens: Iterable[tuple], degree: int) -> frozenset:
    gens = [tuple(g) for g in gens]
    ident = tuple(range(degree))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


def _small_generators(elems: frozenset, degree: int) -> list:
    """A short generating list for an element set, chosen greedily in sorted order."""
    ident = tuple(range(degree))
    gens: list = []
    current = frozenset([ident])
    for x in sorted(elems, key=lambda g: (-_elem_order(g), g)):
        if x not in current:
            gens.append(x)
            current = _close(gens, degree)
            if len(current) == len(elems):
                break
    return gens


def _elem_order(g) -> int:
    from .perm import order
    return order(g)


def all_subgroups(G: Group, order_budget: int = 400) -> list:
    """Every subgroup of G, canonically sorted; exhaustive (cyclic subgroups then joins)."""
    if G.order() > order_budget:
        raise BudgetError(f"order {G.order()} exceeds the subgroup budget {order_budget}")
    n = G.degree
    elems = G.element_set()
    cyclics = {}
    for g in sorted(elems):
        c = _close([g], n)
        cyclics.setdefault(c, g)
    cyclic_sets = list(cyclics)
    found = {c: None for c in cyclic_sets}
    trivial_set = frozenset([tuple(range(n))])
    found[trivial_set] = None
    queue = list(found)
    while queue:
        S = queue.pop()
        for C in cyclic_sets:
            if C <= S:
                continue
            J = _close(list(_small_generators(S, n)) + [cyclics[C]], n)
            if J not in found:
                found[J] = None
                queue.append(J)
    out = []
    for S in found:
        gens = _small_generators(S, n)
        H = generate(n, gens)
        H._elements = S
        out.append(H)
    return canonical_sort(out)


def sylow_subgroup(G: Group, p: int, element_budget: int = 200_000) -> Group:
    """A Sylow p-subgroup, grown greedily by the least element keeping a p-group."""
    if G.order() > element_budget:
        raise BudgetError(f"order {G.order()} exceeds the element budget {element_budget}")
    target = 1
    rest = G.order()
    while rest % p == 0:
        rest //= p
        target *= p
    n = G.degree
    P = trivial(n)
    candidates = sorted(g for g in G.element_set() if _is_p_power(_elem_order(g), p))
    while P.order() < target:
        for g in candidates:
            if P.contains(g):
                continue
            Q = generate(n, list(P.generators) + [g])
            if _is_p_power(Q.order(), p):
                P = Q
                break
        else:
            raise AssertionError("no p-element extends a non-Sylow p-subgroup")
    return P


def _is_p_power(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1
