"""Explicit permutation constructions of the group families used throughout the package."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import factorial, gcd
from typing import Sequence

from . import atlas_data
from .action import Equipartition, equipartition_stabilizer, young_stabilizer
from .gf import Field, FieldError, field_of_order, prime_power, suzuki_theta
from .group import (
    BudgetError,
    Group,
    GroupError,
    _dedupe,
    alt,
    cyclic,
    even_part,
    generate,
    is_transitive,
    normal_closure,
    orbit,
    pointwise_stabilizer,
    sym,
)
from .perm import compose, inverse, order as perm_order, parse_perm


@dataclass
class Construction:
    group: Group
    name: str
    labeling: str
    expected: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        self.group.name = self.name
        want = self.expected.get("order")
        if want is not None and self.group.order() != want:
            raise GroupError(f"{self.name}: order {self.group.order()} differs from expected {want}")

    @property
    def degree(self) -> int:
        return self.group.degree

    def order(self) -> int:
        return self.group.order()

    def to_json(self) -> dict:
        rec = self.group.to_json()
        rec.update(name=self.name, order=self.group.order(), labeling=self.labeling)
        if self.expected:
            rec["expected"] = self.expected
        return rec


# -- vectors over GF(q) ----------------------------------------------------------

def vec_index(v: Sequence[int], q: int) -> int:
    x = 0
    for c in reversed(v):
        x = x * q + c
    return x


def index_vec(x: int, q: int, n: int) -> list:
    out = []
    for _ in range(n):
        x, r = divmod(x, q)
        out.append(r)
    return out


def _apply(F: Field, M: list, v: list) -> list:
    """Matrix times column vector."""
    out = []
    for row in M:
        acc = 0
        for a, b in zip(row, v):
            if a and b:
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return out


def _identity_matrix(n: int) -> list:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _transvection(n: int, i: int, j: int, c: int) -> list:
    """Adds c times coordinate i to coordinate j."""
    M = _identity_matrix(n)
    M[j][i] = c
    return M


def _scale_first(n: int, u: int) -> list:
    M = _identity_matrix(n)
    M[0][0] = u
    return M


def _sl_generators(F: Field, n: int) -> list:
    """Transvections T_ij(u^k), k < f; they generate SL(n, q)."""
    mats = []
    for i in range(n):
        for j in range(n):
            if i != j:
                for k in range(F.f):
                    mats.append(_transvection(n, i, j, F.exp[k]))
    return mats


def gl_order(n: int, q: int) -> int:
    o = 1
    for i in range(n):
        o *= q ** n - q ** i
    return o


# -- affine groups ------------------------------------------------------------

def agl_generators(n: int, q: int) -> list:
    """Unit translations, SL transvections and the scaling e0 -> u e0, on GF(q)^n."""
    if n < 1:
        raise GroupError("dimension must be positive")
    F = field_of_order(q)
    vecs = [index_vec(x, q, n) for x in range(q ** n)]
    gens = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        gens.append(tuple(vec_index([F.add(a, b) for a, b in zip(v, e)], q) for v in vecs))
    for M in _sl_generators(F, n) + [_scale_first(n, F.u)]:
        gens.append(tuple(vec_index(_apply(F, M, v), q) for v in vecs))
    return _dedupe(gens)


def agl(n: int, q: int) -> Construction:
    F = field_of_order(q)
    N = q ** n
    G = generate(N, agl_generators(n, q))
    return Construction(G, f"AGL({n},{q})", "vectors of GF(q)^n as base-q integers, coordinate 0 least significant",
                        {"order": N * gl_order(n, q)}, {"field": F})


# -- projective groups --------------------------------------------------------

FLAVORS = ("PSL", "PGL", "PSigmaL", "PGammaL")


def normalize_flavor(flavor: str) -> str:
    key = flavor.strip().upper().replace("Σ", "SIGMA").replace("Γ", "GAMMA")
    key = {"PSIGMAL": "PSigmaL", "PGAMMAL": "PGammaL", "PSL": "PSL", "PGL": "PGL"}.get(key)
    if key is None:
        raise GroupError(f"unknown projective flavor {flavor!r}")
    return key


class ProjectiveSpace:
    """Points of PG_d(q): representatives with last nonzero coordinate 1, sorted by index."""

    def __init__(self, d: int, q: int):
        if d < 2:
            raise GroupError("projective dimension parameter d must be at least 2")
        self.d, self.q = d, q
        self.field = F = field_of_order(q)
        reps = []
        for x in range(1, q ** d):
            v = index_vec(x, q, d)
            last = max(i for i, c in enumerate(v) if c)
            if v[last] == 1:
                reps.append(x)
        self.points = reps
        self.index = {x: i for i, x in enumerate(reps)}
        self._F = F

    def __len__(self):
        return len(self.points)

    def normalize(self, v: list) -> int:
        F = self._F
        last = max(i for i, c in enumerate(v) if c)
        c = v[last]
        if c != 1:
            ci = F.inv(c)
            v = [F.mul(ci, a) for a in v]
        return self.index[vec_index(v, self.q)]

    def matrix_perm(self, M: list) -> tuple:
        F, q, d = self._F, self.q, self.d
        return tuple(self.normalize(_apply(F, M, index_vec(x, q, d))) for x in self.points)

    def field_perm(self, times: int = 1) -> tuple:
        F, q, d = self._F, self.q, self.d
        return tuple(self.normalize([F.frobenius(a, times) for a in index_vec(x, q, d)]) for x in self.points)


def projective_generators(d: int, q: int) -> dict:
    """Named generator lists: 'psl', 'g1u' (diagonal e0 -> u e0), 'frob' (coordinatewise Frobenius)."""
    P = ProjectiveSpace(d, q)
    F = P.field
    return {
        "space": P,
        "psl": _dedupe(P.matrix_perm(M) for M in _sl_generators(F, d)),
        "g1u": P.matrix_perm(_scale_first(d, F.u)),
        "frob": P.field_perm(1),
    }


def projective_order(d: int, q: int, flavor: str) -> int:
    p, f = prime_power(q)
    pgl = gl_order(d, q) // (q - 1)
    psl = pgl // gcd(d, q - 1)
    return {"PSL": psl, "PGL": pgl, "PSigmaL": psl * f, "PGammaL": pgl * f}[flavor]


def projective(d: int, q: int, flavor: str = "PSL") -> Construction:
    flavor = normalize_flavor(flavor)
    g = projective_generators(d, q)
    P = g["space"]
    gens = list(g["psl"])
    if flavor in ("PGL", "PGammaL"):
        gens.append(g["g1u"])
    if flavor in ("PSigmaL", "PGammaL"):
        gens.append(g["frob"])
    G = generate(len(P), _dedupe(gens))
    return Construction(G, f"{flavor}({d},{q})",
                        "projective points: vectors with last nonzero coordinate 1, sorted by base-q index",
                        {"order": projective_order(d, q, flavor)}, {"space": P, "generators": g})


# -- Suzuki groups -------------------------------------------------------------

def suzuki(q: int, action: str = "ovoid") -> Construction:
    try:
        p, f = prime_power(q)
    except FieldError:
        raise GroupError(f"{q} is not an odd power of 2") from None
    if p != 2 or f % 2 == 0 or q < 8:
        raise GroupError(f"Suzuki groups need q = 2^(2a+1) >= 8, got {q}")
    F = field_of_order(q)
    theta = suzuki_theta(F)
    theta_inv = {theta(a): a for a in F.elements()}
    mul, add = F.mul, F.add

    def qmat(a, b):
        at = theta(a)
        return [
            [1, 0, 0, 0],
            [a, 1, 0, 0],
            [add(mul(a, at), b), at, 1, 0],
            [add(add(mul(mul(a, a), at), mul(a, b)), theta(b)), b, a, 1],
        ]

    def diag(u):
        s2 = theta_inv[u]
        s1 = theta_inv[mul(u, theta(u))]
        return [[s1, 0, 0, 0], [0, s2, 0, 0], [0, 0, F.inv(s2), 0], [0, 0, 0, F.inv(s1)]]

    tau = [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]
    # ovoid points, normalized so the first nonzero coordinate is 1
    pts = []
    for a in F.elements():
        for b in F.elements():
            pts.append([row[0] for row in qmat(a, b)])
    pts.append([0, 0, 0, 1])

    def norm(v):
        i = next(k for k, c in enumerate(v) if c)
        ci = F.inv(v[i])
        return tuple(mul(ci, c) for c in v)

    index = {norm(v): i for i, v in enumerate(pts)}
    mats = [qmat(1, 0), qmat(0, 1), diag(F.u), tau]
    gens = [tuple(index[norm(_apply(F, M, v))] for v in pts) for M in mats]
    n = len(pts)
    expected = q * q * (q - 1) * (q * q + 1)
    G = generate(n, _dedupe(gens))
    if action == "ovoid":
        return Construction(G, f"Sz({q})", "Suzuki ovoid: points (a,b) as index a*q+b, then infinity last",
                            {"order": expected}, {"infinity": n - 1, "zero": 0})
    if action == "pairs":
        pairs = list(itertools.combinations(range(n), 2))
        pidx = {pr: i for i, pr in enumerate(pairs)}
        pgens = []
        for g in G.generators:
            pgens.append(tuple(pidx[tuple(sorted((g[a], g[b])))] for a, b in pairs))
        H = generate(len(pairs), pgens)
        return Construction(H, f"Sz({q}) on pairs", "2-subsets of the ovoid in lexicographic order",
                            {"order": expected})
    raise GroupError(f"unknown Suzuki action {action!r}")


# -- wreath products -------------------------------------------------------------

def _lift_coordinate(a: tuple, i: int, m: int, l: int) -> tuple:
    """a acting on digit i of base-m tuples."""
    step = m ** i
    out = []
    for x in range(m ** l):
        d = (x // step) % m
        out.append(x + (a[d] - d) * step)
    return tuple(out)


def _permute_coordinates(beta: tuple, m: int, l: int) -> tuple:
    """Digit i moves to position beta[i]."""
    out = []
    for x in range(m ** l):
        digits = [(x // m ** i) % m for i in range(l)]
        y = 0
        for i, dgt in enumerate(digits):
            y += dgt * m ** beta[i]
        out.append(y)
    return tuple(out)


def wreath_imprimitive_perm(m: int, l: int, base: Sequence[tuple] | None = None,
                            top: tuple | None = None) -> tuple:
    """Element (base, top) on points i*m + x: (x, i) -> (x a_i, i beta)."""
    base = base or [tuple(range(m))] * l
    top = top or tuple(range(l))
    return tuple(top[i] * m + base[i][x] for i in range(l) for x in range(m))


def wreath_product_perm(m: int, l: int, base: Sequence[tuple] | None = None,
                        top: tuple | None = None) -> tuple:
    """Element (base, top) in product action: apply a_i to digit i, then move digit i to top[i]."""
    g = tuple(range(m ** l))
    for i, a in enumerate(base or []):
        if any(a[x] != x for x in range(m)):
            g = compose(g, _lift_coordinate(a, i, m, l))
    if top is not None:
        g = compose(g, _permute_coordinates(top, m, l))
    return g


def wreath(A: Group, B: Group, mode: str = "imprimitive") -> Construction:
    m, l = A.degree, B.degree
    if m < 2 or l < 2:
        raise GroupError("wreath products need both degrees at least 2")
    gens = []
    if mode == "imprimitive":
        for i in range(l):
            for a in A.generators:
                base = [tuple(range(m))] * l
                base[i] = tuple(a)
                gens.append(wreath_imprimitive_perm(m, l, base))
        for b in B.generators:
            gens.append(wreath_imprimitive_perm(m, l, None, tuple(b)))
        degree = m * l
        labeling = "point i*m + x is (x, i): cell i holds copy i of the inner points"
        extra = {"cells": Equipartition.consecutive(degree, m)}
    elif mode == "product":
        for i in range(l):
            for a in A.generators:
                gens.append(_lift_coordinate(tuple(a), i, m, l))
        for b in B.generators:
            gens.append(_permute_coordinates(tuple(b), m, l))
        degree = m ** l
        labeling = "base-m tuples, coordinate 0 least significant"
        extra = {}
    else:
        raise GroupError(f"unknown wreath mode {mode!r}")
    G = generate(degree, _dedupe(gens))
    name = f"{A.name or 'A'} wr {B.name or 'B'} ({mode})"
    return Construction(G, name, labeling, {"order": A.order() ** l * B.order()}, extra)


def hyperplane_partitions(m: int, l: int) -> list:
    """The l codirections of m^l: cells are the fibres of one coordinate."""
    out = []
    for i in range(l):
        cells: dict = {}
        for x in range(m ** l):
            cells.setdefault((x // m ** i) % m, []).append(x)
        out.append(sorted(cells.values()))
    return out


# -- automorphisms and holomorphs --------------------------------------------------

class ElementTable:
    """Elements of a small group in sorted order with multiplication by index."""

    def __init__(self, G: Group, budget: int = 10_000):
        if G.order() > budget:
            raise BudgetError(f"group order {G.order()} exceeds element budget {budget}")
        self.elements = sorted(G.element_set())
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.identity = self.index[tuple(range(G.degree))]
        self.group = G

    def __len__(self):
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.index[compose(self.elements[i], self.elements[j])]

    def inv(self, i: int) -> int:
        return self.index[inverse(self.elements[i])]

    def order_of(self, i: int) -> int:
        return perm_order(self.elements[i])

    def right_mult_perm(self, j: int) -> tuple:
        g = self.elements[j]
        return tuple(self.index[compose(x, g)] for x in self.elements)


def _short_generating_set(T: ElementTable) -> list:
    """Indices of a short generating set, preferring elements of large order."""
    n = T.group.degree
    cands = sorted(range(len(T)), key=lambda i: (-T.order_of(i), T.elements[i]))
    gens: list = []
    H = generate(n, [])
    for i in cands:
        if not H.contains(T.elements[i]):
            gens.append(i)
            H = generate(n, [T.elements[k] for k in gens])
            if H.order() == len(T):
                break
    return gens


def automorphisms(T: ElementTable, budget: int = 200_000) -> list:
    """Every automorphism as a tuple of element indices, found by extending generator images."""
    gens = _short_generating_set(T)
    if not gens:
        return [tuple(range(len(T)))]
    orders = [T.order_of(i) for i in gens]
    by_order: dict = {}
    for i in range(len(T)):
        by_order.setdefault(T.order_of(i), []).append(i)
    choices = [by_order[o] for o in orders]
    total = 1
    for c in choices:
        total *= len(c)
    if total > budget:
        raise BudgetError(f"{total} generator-image candidates exceed the automorphism budget")
    # spanning tree words: element -> (parent, generator slot)
    tree = {T.identity: None}
    order_seen = [T.identity]
    for x in order_seen:
        for k, gi in enumerate(gens):
            y = T.mul(x, gi)
            if y not in tree:
                tree[y] = (x, k)
                order_seen.append(y)
    found = []
    for images in itertools.product(*choices):
        phi = {T.identity: T.identity}
        for y in order_seen[1:]:
            x, k = tree[y]
            phi[y] = T.mul(phi[x], images[k])
        if len(set(phi.values())) != len(T):
            continue
        ok = all(phi[T.mul(x, gi)] == T.mul(phi[x], images[k])
                 for x in order_seen for k, gi in enumerate(gens))
        if ok:
            found.append(tuple(phi[i] for i in range(len(T))))
    return sorted(found)


def holomorph(G: Group, budget: int = 60) -> Construction:
    if G.order() > budget:
        raise BudgetError(f"group order {G.order()} exceeds the holomorph budget {budget}")
    T = ElementTable(G)
    auts = automorphisms(T)
    N = len(T)
    gens = [T.right_mult_perm(T.index[tuple(g)]) for g in G.generators]
    H = generate(N, _dedupe(gens) if N > 1 else [])
    for a in auts:
        if not H.contains(a):
            gens.append(a)
            H = generate(N, _dedupe(gens))
    return Construction(H, f"Hol({G.name or 'G'})", "elements of G in sorted image order",
                        {"order": N * len(auts)}, {"aut_order": len(auts), "table": T})


# -- generalized holomorph of diagonal type ------------------------------------

def _is_simple_nonabelian(G: Group) -> bool:
    if G.order() == 1:
        return False
    gens = list(G.generators)
    if all(compose(a, b) == compose(b, a) for a in gens for b in gens):
        return False
    for g in G.chain.elements():
        if g != tuple(range(G.degree)):
            if normal_closure(G, [g]).order() != G.order():
                return False
    return True


class DiagonalConstruction(Construction):
    """GHol(T^l, diagonal) with the quotient onto S_l x Out T and lifts of its subgroups."""

    def _setup(self, table: ElementTable, l: int, auts: list, outer: list, base_gens: list):
        self.table, self.l, self.auts, self.outer = table, l, auts, outer
        self.base_gens = base_gens
        self._coord_cache: dict = {}

    def _normalize(self, t: list) -> int:
        T = self.table
        h = T.inv(t[0])
        x = 0
        for k in reversed(range(1, self.l)):
            x = x * len(T) + T.mul(h, t[k])
        return x

    def _tuples(self):
        T = self.table
        size = len(T)
        for x in range(size ** (self.l - 1)):
            rest = []
            for _ in range(self.l - 1):
                x, r = divmod(x, size)
                rest.append(r)
            yield [T.identity] + rest

    def coordinate_perm(self, sigma: Sequence[int]) -> tuple:
        out = []
        for t in self._tuples():
            s = [0] * self.l
            for i, v in enumerate(t):
                s[sigma[i]] = v
            out.append(self._normalize(s))
        return tuple(out)

    def automorphism_perm(self, aut: Sequence[int]) -> tuple:
        return tuple(self._normalize([aut[v] for v in t]) for t in self._tuples())

    def lift(self, P: Sequence) -> Group:
        """Preimage of the subgroup of S_l x Out T generated by (sigma, outer index) pairs."""
        gens = list(self.base_gens)
        for sigma, out_idx in P:
            g = self.coordinate_perm(tuple(sigma))
            if out_idx:
                g = compose(g, self.automorphism_perm(self.outer[out_idx]))
            gens.append(g)
        return generate(self.degree, _dedupe(gens))

    def project(self, g: Sequence[int]) -> tuple:
        """Image of an element of the construction in S_l x Out T as (sigma, outer index)."""
        T = self.table
        g = tuple(g)
        gi = inverse(g)
        probe = {self._coord_right(i, t): (i, t) for i in range(self.l) for t in range(len(T))}
        gens_idx = self._probe_elements()
        sigma = []
        for i in range(self.l):
            hit = probe.get(compose(compose(gi, self._coord_right(i, gens_idx[0])), g))
            if hit is None:
                raise GroupError("element does not normalize the socle")
            sigma.append(hit[0])
        target = {}
        for t in gens_idx:
            hit = probe.get(compose(compose(gi, self._coord_right(0, t)), g))
            if hit is None:
                raise GroupError("element does not normalize the socle")
            target[t] = hit[1]
        for idx, rep in enumerate(self.outer):
            for c in range(len(T)):
                ci = T.inv(c)
                if all(T.mul(T.mul(ci, rep[t]), c) == target[t] for t in gens_idx):
                    return tuple(sigma), idx
        raise GroupError("element does not normalize the socle")

    def _probe_elements(self) -> list:
        return _short_generating_set(self.table)

    def _coord_right(self, i: int, t: int) -> tuple:
        key = (i, t)
        if key not in self._coord_cache:
            vec = [self.table.identity] * self.l
            vec[i] = t
            self._coord_cache[key] = self._right_mult(vec)
        return self._coord_cache[key]

    def _right_mult(self, vec: Sequence[int]) -> tuple:
        T = self.table
        return tuple(self._normalize([T.mul(a, b) for a, b in zip(t, vec)]) for t in self._tuples())


def diagonal_ghol(Tgrp: Group, l: int, point_budget: int = 10_000) -> DiagonalConstruction:
    if l < 2:
        raise GroupError("diagonal type needs l >= 2")
    size = Tgrp.order()
    if size ** (l - 1) > point_budget:
        raise BudgetError(f"{size}^{l - 1} points exceed the budget {point_budget}")
    if not _is_simple_nonabelian(Tgrp):
        raise GroupError("diagonal construction needs a non-abelian simple group")
    table = ElementTable(Tgrp)
    auts = automorphisms(table)
    inner = set()
    for c in range(size):
        ci = table.inv(c)
        inner.add(tuple(table.mul(table.mul(ci, x), c) for x in range(size)))
    outer = []
    seen = set()
    for a in auts:
        if a in seen:
            continue
        outer.append(a)
        for b in inner:
            seen.add(tuple(b[a[x]] for x in range(size)))
    # outer[0] should be the trivial class
    outer.sort(key=lambda a: (a not in inner, a))
    out_order = len(auts) // size
    shell = DiagonalConstruction.__new__(DiagonalConstruction)
    shell._setup(table, l, auts, outer, [])
    degree = size ** (l - 1)
    base_gens = []
    for i in range(l):
        for g in Tgrp.generators:
            vec = [table.identity] * l
            vec[i] = table.index[tuple(g)]
            base_gens.append(shell._right_mult(vec))
    shell.base_gens = _dedupe(base_gens)
    gens = list(shell.base_gens)
    gens.append(shell.coordinate_perm(tuple([1, 0] + list(range(2, l)))))
    if l > 2:
        gens.append(shell.coordinate_perm(tuple(list(range(1, l)) + [0])))
    for a in outer[1:]:
        gens.append(shell.automorphism_perm(a))
    G = generate(degree, _dedupe(gens))
    Construction.__init__(shell, G, f"GHol({Tgrp.name or 'T'}^{l}, diagonal)",
                          "cosets of the diagonal as tuples (1, x1, ..., x_{l-1}) in base-|T| digits",
                          {"order": size ** l * factorial(l) * out_order},
                          {"out_order": out_order})
    return shell


# -- blow-ups ------------------------------------------------------------------------

def socle_of_primitive(A: Group, budget: int = 200_000) -> Group:
    """Smallest normal closure of a prime-order element, validated transitive."""
    if A.order() > budget:
        raise BudgetError("socle search budget exceeded")
    seen_types = set()
    best = None
    for g in sorted(A.element_set()):
        o = perm_order(g)
        if o < 2 or any(o % d == 0 for d in range(2, o)):
            continue
        key = tuple(sorted(_cycle_type(g)))
        if key in seen_types:
            continue
        seen_types.add(key)
        N = normal_closure(A, [g])
        if best is None or N.order() < best.order():
            best = N
    if best is None or not is_transitive(best):
        raise GroupError("socle identification failed")
    return best


def _cycle_type(g) -> list:
    from .perm import cycle_lengths
    return cycle_lengths(g)


def blow_up(A: Group, l: int, P: Sequence) -> Construction:
    """A lifted by a large subgroup P of (A/M) wr S_l, M the socle, in product action on m^l.

    Each generator of P is ``(reps, sigma)`` where ``reps`` lists l elements of A
    standing for their cosets modulo M and ``sigma`` permutes the l coordinates.
    """
    m = A.degree
    M = socle_of_primitive(A)
    gens = []
    for i in range(l):
        for s in M.generators:
            gens.append(_lift_coordinate(tuple(s), i, m, l))
    top_gens = []
    imp_gens = []
    for reps, sigma in P:
        if len(reps) != l or len(sigma) != l:
            raise GroupError("each generator needs l coordinates and a permutation of l")
        for a in reps:
            if not A.contains(a):
                raise GroupError("coset representative outside A")
        gens.append(wreath_product_perm(m, l, [tuple(a) for a in reps], tuple(sigma)))
        imp_gens.append(wreath_imprimitive_perm(m, l, [tuple(a) for a in reps], tuple(sigma)))
        top_gens.append(tuple(sigma))
    if not top_gens or len(orbit(top_gens, 0)) != l:
        raise GroupError("P is not large: its top action is not transitive")
    # component check on the imprimitive realization: stabilizer of cell 0 restricted to it
    for i in range(l):
        for s in M.generators:
            base = [tuple(range(m))] * l
            base[i] = tuple(s)
            imp_gens.append(wreath_imprimitive_perm(m, l, base))
    if not _component_is_full(imp_gens, m, l, A):
        raise GroupError("P is not large: coordinate projection is not all of A")
    G = generate(m ** l, _dedupe(gens))
    return Construction(G, f"{A.name or 'A'} blown up by P (l={l})", "base-m tuples, coordinate 0 least significant",
                        {}, {"socle": M})


def _component_is_full(imp_gens, m: int, l: int, A: Group) -> bool:
    # append l block labels so the top action becomes a point action
    ext = []
    for g in imp_gens:
        blocks = tuple(g[i * m] // m for i in range(l))
        ext.append(tuple(g) + tuple(m * l + b for b in blocks))
    W = generate(m * l + l, _dedupe(ext))
    stab = pointwise_stabilizer(W, [m * l])
    comp = generate(m, _dedupe(tuple(g[x] for x in range(m)) for g in stab.generators) or [])
    return comp.order() == A.order() and comp.is_subgroup_of(A)


# -- catalog groups -------------------------------------------------------------

def atlas(name: str) -> Construction:
    entry = atlas_data.CATALOG.get(name)
    if entry is None:
        raise GroupError(f"unknown catalog group {name!r}; known: {sorted(atlas_data.CATALOG)}")
    degree, gens, expected = entry["degree"], entry["generators"], entry["order"]
    G = generate(degree, [tuple(g) for g in gens])
    if G.order() != expected:
        raise GroupError(f"catalog entry {name} is corrupt: order {G.order()} != {expected}")
    return Construction(G, name, "catalog points", {"order": expected})


# -- associativity of product-action wreaths ---------------------------------------

def assoc_rewreath(a: int, b: int, c: int, point_budget: int = 5000) -> tuple:
    """[[S_a wr S_b] wr S_c] and [S_a wr [S_b wr S_c]] in product action plus the regrouping bijection.

    The bijection psi sends f in a^(bc) to the tuple whose outer coordinate j has
    inner digit i equal to f at (i, j)zeta, with zeta(i, j) = i*c + j.
    """
    if min(a, b, c) < 2:
        raise GroupError("parameters must exceed 1")
    d = b * c
    if a ** d > point_budget:
        raise BudgetError(f"{a}^{d} points exceed the budget {point_budget}")
    inner = wreath(sym(a), sym(b), "product")
    left = wreath(inner.group, sym(c), "product")
    zeta = {(i, j): i * c + j for i in range(b) for j in range(c)}
    imp = wreath(sym(b), sym(c), "imprimitive").group
    # the imprimitive point (i, j) sits at j*b + i; relabel it to zeta(i, j)
    relabel = [0] * d
    for (i, j), k in zeta.items():
        relabel[j * b + i] = k
    top = generate(d, [tuple(relabel[g[inverse(relabel)[k]]] for k in range(d)) for g in imp.generators])
    right = wreath(sym(a), top, "product")
    ab = a ** b
    psi = []
    for x in range(a ** d):
        f = [(x // a ** k) % a for k in range(d)]
        y = 0
        for j in range(c):
            inner_idx = sum(f[zeta[(i, j)]] * a ** i for i in range(b))
            y += inner_idx * ab ** j
        psi.append(y)
    return left, right, tuple(psi)


def conjugate_by_bijection(G: Group, psi: Sequence[int]) -> Group:
    """psi s psi^-1 for each generator s, psi mapping the new points onto G's points."""
    psi = tuple(psi)
    psi_inv = inverse(psi)
    return generate(len(psi), [tuple(psi_inv[s[psi[x]]] for x in range(len(psi))) for s in G.generators])


# -- textual group specs -------------------------------------------------------------

def parse_spec(spec: str) -> Construction:
    """Build a construction from the grammar kind:args (see the README)."""
    spec = spec.strip()
    if ":" not in spec:
        raise GroupError(f"group spec {spec!r} lacks a kind prefix")
    kind, _, arg = spec.partition(":")
    kind = kind.lower()
    try:
        if kind == "sym":
            n = int(arg)
            return Construction(sym(n), f"S{n}", "points 0..n-1", {"order": factorial(n)})
        if kind == "alt":
            n = int(arg)
            return Construction(alt(n), f"A{n}", "points 0..n-1", {"order": max(1, factorial(n) // 2)})
        if kind == "cyc":
            n = int(arg)
            return Construction(cyclic(n), f"C{n}", "points 0..n-1", {"order": n})
        if kind == "agl":
            n, q = (int(x) for x in arg.split(","))
            return agl(n, q)
        if kind == "proj":
            d, q, flavor = arg.split(",")
            return projective(int(d), int(q), flavor)
        if kind == "sz":
            parts = arg.split(",")
            return suzuki(int(parts[0]), parts[1] if len(parts) > 1 else "ovoid")
        if kind == "young":
            n, parts = arg.split(",")
            sizes = [int(x) for x in parts.split("+")]
            G = young_stabilizer(int(n), sizes)
            return Construction(G, f"young:{arg}", "consecutive ranges", {})
        if kind in ("eqpart", "eqpart-even"):
            n, m = (int(x) for x in arg.split(","))
            G = equipartition_stabilizer(n, Equipartition.consecutive(n, m))
            if kind == "eqpart-even":
                G = even_part(G)
            return Construction(G, f"{kind}:{arg}", "cells of consecutive points", {})
        if kind == "even":
            inner = parse_spec(arg)
            return Construction(even_part(inner.group), f"({inner.name})^e", inner.labeling, {})
        if kind == "wr":
            body, mode = arg.rsplit("/", 1)
            inner_spec, outer_spec = _split_pair(body)
            return wreath(parse_spec(inner_spec).group, parse_spec(outer_spec).group, mode)
        if kind == "hol":
            return holomorph(parse_spec(arg).group)
        if kind == "ghol":
            tspec, l = arg.rsplit(",", 1)
            return diagonal_ghol(parse_spec(tspec).group, int(l))
        if kind == "atlas":
            return atlas(arg)
        if kind == "gens":
            deg, _, body = arg.partition(":")
            n = int(deg)
            gens = [tuple(parse_perm(t, n)) for t in body.split(";") if t.strip()]
            return Construction(generate(n, gens), f"gens:{arg}", "points 0..n-1", {})
    except (ValueError, FieldError) as exc:
        raise GroupError(f"bad group spec {spec!r}: {exc}") from exc
    raise GroupError(f"unknown group kind {kind!r}")


def _split_pair(body: str) -> tuple:
    parts = body.split("/")
    if parts[0].lower().startswith("atlas:") and len(parts) > 2:
        return "/".join(parts[:2]), "/".join(parts[2:])
    return parts[0], "/".join(parts[1:])
