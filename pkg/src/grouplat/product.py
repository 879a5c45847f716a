"""Subgroups of a direct product L x R, realized on the disjoint union of the two point sets.

Left points come first: a pair (l, r) acts as l on 0..n-1 and as r shifted by n on the rest.
Everything here works on explicit element sets, so it is meant for small factors.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .group import (
    Group,
    GroupError,
    _close,
    _small_generators,
    all_subgroups,
    canonical_sort,
    generate,
)
from .perm import compose, inverse

ELEMENT_LIMIT = 200_000
FULL_TABLE_INDEX = 120


class ProductError(GroupError):
    """Invalid Goursat data or a subgroup that does not respect the product split."""


# -- embedding ------------------------------------------------------------------

def embed(left: tuple, right: tuple) -> tuple:
    n = len(left)
    return tuple(left) + tuple(n + x for x in right)


def split(g: tuple, n: int) -> tuple:
    left = tuple(g[:n])
    right = tuple(x - n for x in g[n:])
    if any(x >= n for x in left) or any(x < 0 for x in right):
        raise ProductError("element mixes the left and right point sets")
    return left, right


def direct_product(L: Group, R: Group) -> Group:
    idl, idr = tuple(range(L.degree)), tuple(range(R.degree))
    gens = [embed(g, idr) for g in L.generators] + [embed(idl, g) for g in R.generators]
    return generate(L.degree + R.degree, gens, f"{L.name or 'L'} x {R.name or 'R'}")


def _group_of(elems, degree: int) -> Group:
    G = generate(degree, _small_generators(frozenset(elems), degree))
    G._elements = frozenset(elems)
    return G


def _elements(G: Group) -> frozenset:
    if G.order() > ELEMENT_LIMIT:
        raise ProductError(f"order {G.order()} is above the element limit {ELEMENT_LIMIT}")
    return G.element_set()


def _coset_key(x: tuple, kernel: frozenset) -> tuple:
    return min(compose(k, x) for k in kernel)


def _is_normal_in(N: frozenset, G: frozenset, gens) -> bool:
    return N <= G and all(compose(compose(inverse(g), x), g) in N for g in gens for x in N)


# -- Goursat data ---------------------------------------------------------------

@dataclass(frozen=True)
class GoursatDatum:
    """Isomorphism between the section left/left_kernel of L and right/right_kernel of R.

    ``iso`` maps left coset keys (least element of each coset) to right coset keys.
    """

    left: Group
    left_kernel: Group
    right: Group
    right_kernel: Group
    iso: dict = field(compare=False)

    @property
    def index(self) -> int:
        return self.left.order() // self.left_kernel.order()

    def to_json(self) -> dict:
        return {
            "left": {"order": self.left.order(), "generators": [list(g) for g in self.left.generators]},
            "left_kernel": {"order": self.left_kernel.order()},
            "right": {"order": self.right.order(), "generators": [list(g) for g in self.right.generators]},
            "right_kernel": {"order": self.right_kernel.order()},
            "iso": [[list(a), list(b)] for a, b in sorted(self.iso.items())],
        }


def check_datum(datum: GoursatDatum) -> None:
    C, A = _elements(datum.left), _elements(datum.left_kernel)
    D, B = _elements(datum.right), _elements(datum.right_kernel)
    if not _is_normal_in(A, C, datum.left.generators):
        raise ProductError("left kernel is not normal in the left group")
    if not _is_normal_in(B, D, datum.right.generators):
        raise ProductError("right kernel is not normal in the right group")
    if len(C) * len(B) != len(D) * len(A):
        raise ProductError("the two quotients have different orders")
    left_keys = {_coset_key(c, A) for c in C}
    right_keys = {_coset_key(d, B) for d in D}
    iso = datum.iso
    if set(iso) != left_keys or set(iso.values()) != right_keys:
        raise ProductError("iso is not a bijection of cosets")
    index = len(left_keys)
    if index <= FULL_TABLE_INDEX:
        pairs = [(x, y) for x in left_keys for y in left_keys]
    else:
        gens = [_coset_key(g, A) for g in datum.left.generators]
        pairs = [(x, y) for x in gens for y in gens]
    for x, y in pairs:
        if iso[_coset_key(compose(x, y), A)] != _coset_key(compose(iso[x], iso[y]), B):
            raise ProductError("iso does not respect products")


def goursat_build(L: Group, R: Group, datum: GoursatDatum) -> Group:
    """{(c, d) : c maps to the coset of d}, on degree(L) + degree(R) points."""
    if not (datum.left.is_subgroup_of(L) and datum.right.is_subgroup_of(R)):
        raise ProductError("datum groups are not inside the factors")
    check_datum(datum)
    A = _elements(datum.left_kernel)
    idl = tuple(range(L.degree))
    gens = [embed(c, datum.iso[_coset_key(tuple(c), A)]) for c in datum.left.generators]
    gens += [embed(idl, b) for b in datum.right_kernel.generators]
    G = generate(L.degree + R.degree, gens)
    if G.order() != datum.left.order() * datum.right_kernel.order():
        raise ProductError("built group has the wrong order")
    return G


def _respects_split(H: Group, n: int) -> bool:
    return all(all(x < n for x in g[:n]) for g in H.generators)


def goursat_decompose(H: Group, left_degree: int) -> GoursatDatum:
    n, m = left_degree, H.degree - left_degree
    if m < 1 or not _respects_split(H, n):
        raise ProductError("group is not a subgroup of the product")
    idl, idr = tuple(range(n)), tuple(range(m))
    pairs = [split(g, n) for g in _elements(H)]
    C = frozenset(l for l, _ in pairs)
    D = frozenset(r for _, r in pairs)
    A = frozenset(l for l, r in pairs if r == idr)
    B = frozenset(r for l, r in pairs if l == idl)
    iso = {}
    for l, r in pairs:
        iso.setdefault(_coset_key(l, A), _coset_key(r, B))
    return GoursatDatum(_group_of(C, n), _group_of(A, n), _group_of(D, m), _group_of(B, m), iso)


# -- sections and skeletons ------------------------------------------------------

class _Parts:
    """Element sets of the four Goursat pieces of a subgroup of L x R."""

    def __init__(self, H: Group, n: int):
        if not _respects_split(H, n):
            raise ProductError("group is not a subgroup of the product")
        self.group = H
        self.n = n
        self.m = H.degree - n
        self.elements = _elements(H)
        pairs = [split(g, n) for g in self.elements]
        idl, idr = tuple(range(n)), tuple(range(self.m))
        self.left = frozenset(l for l, _ in pairs)
        self.right = frozenset(r for _, r in pairs)
        self.left_kernel = frozenset(l for l, r in pairs if r == idr)
        self.right_kernel = frozenset(r for l, r in pairs if l == idl)


def _product_set(X: frozenset, Y: frozenset) -> frozenset:
    return frozenset(compose(x, y) for x in X for y in Y)


def _skeleton(bottom_kernel, bottom, top_kernel, top) -> list:
    """The four sections (kernel, support) compared as subcongruences."""
    saturated = _product_set(bottom, top_kernel)
    return [(bottom_kernel, bottom), (bottom, bottom), (top_kernel, saturated), (top, top)]


def _section_leq(a, b) -> bool:
    return a[0] <= b[0] and a[1] <= b[1]


def _section_lt(a, b) -> bool:
    return a != b and _section_leq(a, b)


@dataclass(frozen=True)
class SkeletonOrders:
    left: int
    right: int
    left_skeleton: tuple  # orders of (kernel, support) for the four left sections

    def to_json(self) -> dict:
        return {"l": self.left, "r": self.right,
                "left_skeleton": [list(x) for x in self.left_skeleton]}


def _parts_pair(inner, outer, left_degree):
    a = inner if isinstance(inner, _Parts) else _Parts(inner, left_degree)
    b = outer if isinstance(outer, _Parts) else _Parts(outer, left_degree)
    if not a.elements <= b.elements:
        raise ProductError("inner group is not contained in the outer group")
    return a, b


def skeleton_orders(inner: Group, outer: Group, left_degree: int) -> SkeletonOrders:
    a, b = _parts_pair(inner, outer, left_degree)
    ls = _skeleton(a.left_kernel, a.left, b.left_kernel, b.left)
    rs = _skeleton(a.right_kernel, a.right, b.right_kernel, b.right)
    return SkeletonOrders(len(set(ls)), len(set(rs)),
                          tuple((len(k), len(s)) for k, s in ls))


def interval_type(inner: Group, outer: Group, left_degree: int) -> str:
    """Elementary type of [inner, outer] from its skeletons, or 'composed' / 'trivial'."""
    a, b = _parts_pair(inner, outer, left_degree)
    if a.elements == b.elements:
        return "trivial"
    ls = _skeleton(a.left_kernel, a.left, b.left_kernel, b.left)
    rs = _skeleton(a.right_kernel, a.right, b.right_kernel, b.right)
    l, r = len(set(ls)), len(set(rs))
    fixed = {(2, 1): "2L", (1, 2): "2R", (4, 2): "4L", (2, 4): "4R"}
    if (l, r) in fixed:
        return fixed[(l, r)]
    if l == r and l in (2, 3):
        bottom, square, saturated, top = ls
        if _section_lt(bottom, saturated) and _section_leq(saturated, square) and square == top:
            return "3A"
        if bottom == saturated and _section_leq(saturated, square) and _section_lt(square, top):
            return "3B"
    return "composed"


# -- maximality -------------------------------------------------------------------

def _is_maximal_in(sub: frozenset, whole: frozenset, degree: int) -> bool:
    if not sub < whole:
        return False
    base = _small_generators(sub, degree)
    return all(len(_close(base + [g], degree)) == len(whole) for g in whole - sub)


def _invariant_simple(bottom: frozenset, top: frozenset, acting: frozenset, degree: int) -> bool:
    """No subgroup strictly between bottom and top is normalized by ``acting``."""
    if not bottom < top:
        return False
    base = _small_generators(bottom, degree)
    for x in top - bottom:
        images = {compose(compose(inverse(a), x), a) for a in acting}
        if len(_close(base + sorted(images), degree)) != len(top):
            return False
    return True


def goursat_is_maximal(inner: Group, outer: Group, left_degree: int) -> tuple:
    """(True, case) when inner is maximal in outer by one of the four product criteria."""
    a, b = _parts_pair(inner, outer, left_degree)
    n, m = a.n, a.m
    if a.elements == b.elements:
        return False, None
    left_cut = frozenset(g for g in b.elements if tuple(g[:n]) in a.left)
    right_cut = frozenset(g for g in b.elements if split(g, n)[1] in a.right)
    if _is_maximal_in(a.left, b.left, n) and a.elements == left_cut:
        return True, "a" if b.left_kernel <= a.left else "b"
    if (not b.right_kernel <= a.right and _is_maximal_in(a.right, b.right, m)
            and a.elements == right_cut):
        return True, "c"
    if a.left == b.left and _invariant_simple(a.left_kernel, b.left_kernel, a.left, n):
        idr = tuple(range(m))
        lifted = _close(_small_generators(a.elements, n + m)
                        + [embed(k, idr) for k in b.left_kernel], n + m)
        if lifted == b.elements:
            return True, "d"
    return False, None


def _quotient(G: frozenset, N: frozenset):
    keys = sorted({_coset_key(g, N) for g in G})
    pos = {k: i for i, k in enumerate(keys)}
    table = [[pos[_coset_key(compose(x, y), N)] for y in keys] for x in keys]
    return keys, table


def _table_isomorphisms(t1: list, t2: list) -> list:
    """All isomorphisms between two multiplication tables (identity at index 0)."""
    size = len(t1)
    if size != len(t2):
        return []

    def orders(t):
        out = []
        for x in range(size):
            k, y = 1, x
            while y != 0:
                y = t[y][x]
                k += 1
            out.append(k)
        return out

    o1, o2 = orders(t1), orders(t2)
    gens: list = []
    span = {0}
    for x in sorted(range(size), key=lambda i: -o1[i]):
        if x in span:
            continue
        gens.append(x)
        span = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for y in frontier:
                for g in gens:
                    z = t1[y][g]
                    if z not in span:
                        span.add(z)
                        nxt.append(z)
            frontier = nxt
        if len(span) == size:
            break

    def extend(images):
        phi = {0: 0}
        frontier = [0]
        while frontier:
            nxt = []
            for y in frontier:
                for g, img in zip(gens, images):
                    z, w = t1[y][g], t2[phi[y]][img]
                    if z in phi:
                        if phi[z] != w:
                            return None
                    else:
                        phi[z] = w
                        nxt.append(z)
            frontier = nxt
        if len(set(phi.values())) != size:
            return None
        for x in range(size):
            for y in range(size):
                if phi[t1[x][y]] != t2[phi[x]][phi[y]]:
                    return None
        return phi

    out = []

    def search(k, images):
        if k == len(gens):
            phi = extend(images)
            if phi is not None:
                out.append(phi)
            return
        for y in range(size):
            if o2[y] == o1[gens[k]]:
                search(k + 1, images + [y])

    search(0, [])
    return out


def _normal_subgroups(G: Group) -> list:
    return [N for N in all_subgroups(G, order_budget=ELEMENT_LIMIT)
            if _is_normal_in(N.element_set(), G.element_set(), G.generators)]


def _maximal_subgroups(G: Group) -> list:
    subs = all_subgroups(G, order_budget=ELEMENT_LIMIT)
    top = G.element_set()
    out = []
    for S in subs:
        es = S.element_set()
        if es == top:
            continue
        if not any(es < T.element_set() < top for T in subs):
            out.append(S)
    return out


def graph_subgroups(L: Group, R: Group, left_kernel: Group, right_kernel: Group) -> list:
    """Every full-projection subgroup of L x R with the given kernels, one per isomorphism."""
    A, B = left_kernel.element_set(), right_kernel.element_set()
    lk, lt = _quotient(L.element_set(), A)
    rk, rt = _quotient(R.element_set(), B)
    out = []
    for phi in _table_isomorphisms(lt, rt):
        iso = {lk[i]: rk[j] for i, j in phi.items()}
        datum = GoursatDatum(L, left_kernel, R, right_kernel, iso)
        out.append(goursat_build(L, R, datum))
    return out


def product_maximals(L: Group, R: Group) -> list:
    """Maximal subgroups of L x R: T x R, L x T, and graphs over simple common quotients."""
    idl, idr = tuple(range(L.degree)), tuple(range(R.degree))
    deg = L.degree + R.degree
    out = []
    for T in _maximal_subgroups(L):
        out.append(generate(deg, [embed(t, idr) for t in T.generators]
                            + [embed(idl, r) for r in R.generators]))
    for T in _maximal_subgroups(R):
        out.append(generate(deg, [embed(l, idr) for l in L.generators]
                            + [embed(idl, t) for t in T.generators]))
    left_normals = _normal_subgroups(L)
    right_normals = _normal_subgroups(R)
    for A in left_normals:
        if A.order() == L.order():
            continue
        # simple quotient: no normal subgroup strictly between A and L
        ae = A.element_set()
        if any(ae < N.element_set() < L.element_set() for N in left_normals):
            continue
        for B in right_normals:
            if B.order() * L.order() != R.order() * A.order():
                continue
            out.extend(graph_subgroups(L, R, A, B))
    return canonical_sort(out)


# -- factorization into elementary steps --------------------------------------------

ALLOWED_STEPS = (
    ("trivial", "3A"),
    ("trivial", "2L", "4L"),
    ("trivial", "2R", "4R"),
    ("trivial", "3B"),
)


def elementary_factorization(inner: Group, outer: Group, left_degree: int) -> tuple:
    """Chain inner <= H1 <= H2 <= H3 <= outer and the interval type of each step."""
    a, b = _parts_pair(inner, outer, left_degree)
    n, m = a.n, a.m
    deg = n + m
    idl, idr = tuple(range(n)), tuple(range(m))
    base = _small_generators(a.elements, deg)
    meet = a.left & b.left_kernel
    h1 = base + [embed(k, idr) for k in _small_generators(meet, n)]
    h2 = base + [embed(k, idr) for k in _small_generators(b.left_kernel, n)]
    h3 = h2 + [embed(idl, k) for k in _small_generators(b.right_kernel, m)]
    chain = [inner] + [_group_of(_close(gens, deg), deg) for gens in (h1, h2, h3)] + [outer]
    tags = [interval_type(chain[i], chain[i + 1], n) for i in range(4)]
    return chain, tags


def factorization_is_valid(tags: list) -> bool:
    return all(t in allowed for t, allowed in zip(tags, ALLOWED_STEPS))


# -- shortcuts and novelty -------------------------------------------------------------

@dataclass(frozen=True)
class ShortcutReport:
    has_shortcut: bool
    shortcut_tags: tuple
    is_novelty: bool
    image_sizes: dict
    shape: object

    def to_json(self) -> dict:
        return {"has_shortcut": self.has_shortcut, "shortcut_tags": list(self.shortcut_tags),
                "is_novelty": self.is_novelty, "image_sizes": self.image_sizes,
                "shape": self.shape.to_json()}


def shortcut_novelty(inner: Group, outer: Group, left_degree: int) -> ShortcutReport:
    from .lattice import interval

    I = interval(inner, outer)
    parts = [_Parts(N, left_degree) for N in I.nodes]
    b, t = I.poset.bottom(), I.poset.top()
    covers = set(I.hasse)
    tags = []
    for k in range(len(I.nodes)):
        if (b, k) in covers and (k, t) in covers:
            tags.append(f"{interval_type(parts[b], parts[k], left_degree)}-"
                        f"{interval_type(parts[k], parts[t], left_degree)}")
    # the bottom-invariant section of a member is determined by its kernel
    sizes = {
        "left": len({p.left for p in parts}),
        "left_kernel": len({p.left_kernel for p in parts}),
        "right": len({p.right for p in parts}),
        "right_kernel": len({p.right_kernel for p in parts}),
    }
    return ShortcutReport(bool(tags), tuple(sorted(set(tags))),
                          all(v > 1 for v in sizes.values()), sizes, I.shape)


def affine_shortcut_example(q: int) -> tuple:
    """C = AGL(1, q) as both factors; returns (C x C, diagonal of F^x, (F x 1) diagonal of C)."""
    from .factory import agl

    C = agl(1, q).group
    elems = C.element_set()
    translations = frozenset(g for g in elems if all(g[i] != i for i in range(q)) or g == tuple(range(q)))
    multipliers = frozenset(g for g in elems if g[0] == 0)
    ident = tuple(range(q))
    inner = generate(2 * q, [embed(g, g) for g in _small_generators(multipliers, q)])
    outer = generate(2 * q, [embed(g, g) for g in C.generators]
                     + [embed(t, ident) for t in _small_generators(translations, q)])
    return direct_product(C, C), inner, outer
