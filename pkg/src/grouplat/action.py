"""Orbits, blocks, imprimitivity systems and transitivity/primitivity degrees."""
from __future__ import annotations

from math import factorial
from typing import Iterable, Sequence

from .group import Group, GroupError, generate, orbit, orbits, _dedupe

__all__ = [
    "Equipartition", "orbits", "minimal_block", "imprimitivity_systems", "is_primitive",
    "transitivity_profile", "equipartition_stabilizer", "young_stabilizer", "block_system",
]


class Equipartition:
    """Partition of range(n) into cells of equal size, cells ordered by least element."""

    __slots__ = ("cells", "n")

    def __init__(self, cells: Iterable[Iterable[int]], n: int | None = None):
        cs = [tuple(sorted(c)) for c in cells]
        if not cs or any(not c for c in cs):
            raise GroupError("equipartition needs nonempty cells")
        cs.sort()
        pts = [x for c in cs for x in c]
        total = len(pts) if n is None else n
        if sorted(pts) != list(range(total)):
            raise GroupError("cells do not partition the point set")
        if len({len(c) for c in cs}) != 1:
            raise GroupError("cells have different sizes")
        self.cells = tuple(cs)
        self.n = total

    @classmethod
    def consecutive(cls, n: int, m: int) -> "Equipartition":
        if m < 1 or n % m:
            raise GroupError(f"cell size {m} does not divide {n}")
        return cls([range(i, i + m) for i in range(0, n, m)], n)

    @property
    def cell_size(self) -> int:
        return len(self.cells[0])

    @property
    def cell_count(self) -> int:
        return len(self.cells)

    def is_trivial(self) -> bool:
        return self.cell_size in (1, self.n)

    def cell_of(self) -> list:
        where = [0] * self.n
        for i, c in enumerate(self.cells):
            for x in c:
                where[x] = i
        return where

    def is_invariant(self, G: Group) -> bool:
        where = self.cell_of()
        for g in G.generators:
            for c in self.cells:
                if len({where[g[x]] for x in c}) != 1:
                    return False
        return True

    def to_json(self) -> list:
        return [list(c) for c in self.cells]

    def __eq__(self, other):
        return isinstance(other, Equipartition) and self.cells == other.cells

    def __lt__(self, other):
        return (self.cell_size, self.cells) < (other.cell_size, other.cells)

    def __hash__(self):
        return hash(self.cells)

    def __repr__(self):
        return f"Equipartition({self.to_json()})"


# -- union-find block search --------------------------------------------------

class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra < rb:
            self.parent[rb] = ra
        else:
            self.parent[ra] = rb
        return True


def _merge_closure(gens: Sequence[tuple], uf: _UnionFind, pairs: list) -> None:
    queue = list(pairs)
    while queue:
        x, y = queue.pop()
        for g in gens:
            u, v = uf.find(g[x]), uf.find(g[y])
            if u != v:
                uf.union(u, v)
                queue.append((u, v))


def _partition_of(uf: _UnionFind, points: Sequence[int]) -> list:
    cells: dict = {}
    for x in points:
        cells.setdefault(uf.find(x), []).append(x)
    return sorted(sorted(c) for c in cells.values())


def _require_transitive(gens, points) -> None:
    if len(orbit(gens, points[0])) != len(points):
        raise GroupError("group is not transitive")


def block_system(G: Group, alpha: int, beta: int) -> list:
    """Finest G-invariant partition with alpha and beta in one cell."""
    n = G.degree
    _require_transitive(G.generators, list(range(n)))
    uf = _UnionFind(n)
    uf.union(alpha, beta)
    _merge_closure(G.generators, uf, [(alpha, beta)])
    return _partition_of(uf, range(n))


def minimal_block(G: Group, alpha: int, beta: int) -> frozenset:
    if alpha == beta:
        raise GroupError("minimal block needs two distinct points")
    for cell in block_system(G, alpha, beta):
        if alpha in cell:
            return frozenset(cell)
    raise AssertionError("unreachable")


def _systems_on(gens: Sequence[tuple], points: Sequence[int]) -> list:
    """All nontrivial invariant partitions of a transitive action on ``points``."""
    points = sorted(points)
    if len(points) < 4:
        return []
    size = max(points) + 1
    base = points[0]
    found: dict = {}
    for beta in points[1:]:
        uf = _UnionFind(size)
        uf.union(base, beta)
        _merge_closure(gens, uf, [(base, beta)])
        part = tuple(tuple(c) for c in _partition_of(uf, points))
        if len(part) > 1:
            found[part] = None
    # joins of systems give every remaining system
    todo = list(found)
    while todo:
        a = todo.pop()
        for b in list(found):
            uf = _UnionFind(size)
            pairs = []
            for cells in (a, b):
                for c in cells:
                    for x in c[1:]:
                        if uf.union(c[0], x):
                            pairs.append((c[0], x))
            part = tuple(tuple(c) for c in _partition_of(uf, points))
            if len(part) > 1 and part not in found:
                found[part] = None
                todo.append(part)
    return list(found)


def imprimitivity_systems(G: Group) -> list:
    """All nontrivial G-invariant equipartitions, sorted by (cell size, cells)."""
    n = G.degree
    _require_transitive(G.generators, list(range(n)))
    systems = [Equipartition(p, n) for p in _systems_on(G.generators, range(n))]
    return sorted(systems)


def is_primitive(G: Group) -> bool:
    if len(orbit(G.generators, 0)) != G.degree:
        return False
    if G.degree < 4:
        return True
    n = G.degree
    for beta in range(1, n):
        if len(block_system(G, 0, beta)) > 1:
            return False
    return True


def _primitive_on(gens, points) -> bool:
    points = sorted(points)
    if len(orbit(gens, points[0])) != len(points):
        return False
    size = max(points) + 1
    for beta in points[1:]:
        uf = _UnionFind(size)
        uf.union(points[0], beta)
        _merge_closure(gens, uf, [(points[0], beta)])
        if len(_partition_of(uf, points)) > 1:
            return False
    return True


def transitivity_profile(G: Group) -> tuple:
    """(degree of transitivity, degree of primitivity), stabilizing least points in turn."""
    n = G.degree
    t = p = 0
    t_open = p_open = True
    level_gens = list(G.generators)
    depth = 0
    chain = None
    while (t_open or p_open) and depth < n:
        remaining = list(range(depth, n))
        if len(remaining) == 1:
            # one point left: trivially transitive and primitive
            if t_open:
                t += 1
            if p_open:
                p += 1
            break
        transitive = len(orbit(level_gens, depth)) == len(remaining)
        if t_open:
            if transitive:
                t += 1
            else:
                t_open = False
        if p_open:
            if transitive and _primitive_on(level_gens, remaining):
                p += 1
            else:
                p_open = False
        if not (t_open or p_open):
            break
        depth += 1
        if chain is None or len(chain.base) < depth or chain.base[:depth] != list(range(depth)):
            chain = G.chain_with_base(range(min(n, max(2 * depth, 6))))
        level_gens = chain.gens[depth] if depth < len(chain.base) else []
        if not level_gens:
            # trivial stabilizer: transitive only on a single remaining point
            rest = n - depth
            if rest == 1:
                continue
            break
    return t, p


# -- partition stabilizers ----------------------------------------------------

def _sym_on(points: Sequence[int], n: int) -> list:
    pts = list(points)
    gens = []
    if len(pts) >= 2:
        g = list(range(n))
        g[pts[0]], g[pts[1]] = pts[1], pts[0]
        gens.append(tuple(g))
    if len(pts) >= 3:
        g = list(range(n))
        for a, b in zip(pts, pts[1:] + pts[:1]):
            g[a] = b
        gens.append(tuple(g))
    return gens


def young_stabilizer(n: int, parts: Sequence[int]) -> Group:
    """Direct product of symmetric groups on consecutive ranges of the given sizes."""
    if any(k < 1 for k in parts) or sum(parts) != n:
        raise GroupError(f"parts {list(parts)} do not sum to {n}")
    gens = []
    start = 0
    for k in parts:
        gens.extend(_sym_on(range(start, start + k), n))
        start += k
    expected = 1
    for k in parts:
        expected *= factorial(k)
    G = generate(n, gens, f"young:{n},{'+'.join(map(str, parts))}")
    assert G.order() == expected
    return G


def equipartition_stabilizer(n: int, Z: Equipartition) -> Group:
    """Full stabilizer of Z in Sym(n); order (m!)^l * l!."""
    if Z.n != n:
        raise GroupError("equipartition lives on a different point set")
    m, l = Z.cell_size, Z.cell_count
    gens = list(_sym_on(Z.cells[0], n))
    # permute cells: swap the first two and cycle all of them
    if l >= 2:
        g = list(range(n))
        for a, b in zip(Z.cells[0], Z.cells[1]):
            g[a], g[b] = b, a
        gens.append(tuple(g))
    if l >= 3:
        g = list(range(n))
        for i in range(l):
            for a, b in zip(Z.cells[i], Z.cells[(i + 1) % l]):
                g[a] = b
        gens.append(tuple(g))
    G = generate(n, _dedupe(gens) if gens else [], f"eqpart:{n},{m}")
    if G.order() != factorial(m) ** l * factorial(l):
        raise GroupError("equipartition stabilizer order mismatch")
    return G
