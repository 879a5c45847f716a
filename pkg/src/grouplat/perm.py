"""Permutations of {0, ..., n-1} stored as image tuples.

A permutation ``p`` sends point ``i`` to ``p[i]``.  Products are read left to
right: ``p * q`` applies ``p`` first and then ``q``.
"""
from __future__ import annotations

import re
from math import gcd
from typing import Iterable, Mapping


class PermutationError(ValueError):
    """Malformed permutation input."""


class ConsistencyError(ArithmeticError):
    """An internal arithmetic identity failed; the inputs were inconsistent."""


class Permutation(tuple):
    """Immutable bijection of ``range(degree)``."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        self = tuple.__new__(cls, images)
        n = len(self)
        if n == 0:
            raise PermutationError("degree must be positive")
        seen = [False] * n
        for x in self:
            if not isinstance(x, int) or x < 0 or x >= n or seen[x]:
                raise PermutationError(f"not a bijection of range({n}): {tuple(self)}")
            seen[x] = True
        return self

    @classmethod
    def _trusted(cls, images) -> "Permutation":
        return tuple.__new__(cls, images)

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple:
        return tuple(self)

    def __mul__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        if len(other) != len(self):
            raise PermutationError("cannot compose permutations of different degrees")
        return Permutation._trusted(map(other.__getitem__, self))

    __rmul__ = None  # tuple repetition must not sneak in

    def __pow__(self, k: int) -> "Permutation":
        return Permutation._trusted(power(self, k))

    def inverse(self) -> "Permutation":
        return Permutation._trusted(inverse(self))

    def __invert__(self):
        return self.inverse()

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self))

    def cycles(self, singletons: bool = False) -> list:
        return cycles(self, singletons)

    def order(self) -> int:
        return order(self)

    def parity(self) -> int:
        return parity(self)

    def support(self) -> list:
        return [i for i, x in enumerate(self) if i != x]

    def conjugate(self, by) -> "Permutation":
        """``by^-1 * self * by``; sends ``by[i]`` to ``by[self[i]]``."""
        return Permutation._trusted(conjugate(self, by))

    def __repr__(self):
        return f"Permutation({format_cycles(self)}, degree={len(self)})"

    def __str__(self):
        return format_cycles(self)


# -- raw tuple helpers (hot paths use these directly) ------------------------

def identity(n: int) -> Permutation:
    return Permutation._trusted(range(n))


def compose(p, q) -> tuple:
    """``p`` then ``q``."""
    return tuple(map(q.__getitem__, p))


def inverse(p) -> tuple:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def conjugate(p, c) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[c[i]] = c[x]
    return tuple(out)


def power(p, k: int) -> tuple:
    n = len(p)
    if k < 0:
        p, k = inverse(p), -k
    result = tuple(range(n))
    base = tuple(p)
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def cycles(p, singletons: bool = False) -> list:
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        if singletons or len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def cycle_lengths(p) -> list:
    seen = bytearray(len(p))
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = 1
            j = p[j]
            length += 1
        out.append(length)
    return out


def order(p) -> int:
    o = 1
    for length in cycle_lengths(p):
        o = o * length // gcd(o, length)
    return o


def parity(p) -> int:
    """0 for even, 1 for odd: the sum of (cycle length - 1) mod 2."""
    lengths = cycle_lengths(p)
    return (len(p) - len(lengths)) & 1


def cycle_census(p) -> dict:
    """Map cycle length e to the number of points lying on cycles of length e."""
    census: dict = {}
    for length in cycle_lengths(p):
        census[length] = census.get(length, 0) + length
    return dict(sorted(census.items()))


def fixed_points(p) -> int:
    return sum(1 for i, x in enumerate(p) if i == x)


# -- parity through fixed-point counts ---------------------------------------

def _divisors(n: int) -> list:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius needs a positive integer")
    result, m, d = 1, n, 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            result = -result
        d += 1
    if m > 1:
        result = -result
    return result


def parity_from_fixpoints(fix: Mapping[int, int], f: int) -> int:
    """Parity of a permutation of order ``f`` from the counts ``fix[k] = Fix(s^k)``.

    Recovers the number of cycles of each even length ``e`` by Moebius
    inversion over the odd divisors of ``e`` and adds them up mod 2.
    """
    if f < 1:
        raise PermutationError("order must be positive")
    divs = _divisors(f)
    missing = [k for k in divs if k not in fix]
    if missing:
        raise PermutationError(f"fixed-point counts missing for divisors {missing}")
    total = 0
    for e in divs:
        if e % 2:
            continue
        acc = 0
        for d in _divisors(e):
            if d % 2 == 0:
                continue
            mu = mobius(d)
            if mu:
                acc += mu * (fix[e // d] - fix[e // (2 * d)])
        if acc % e:
            raise ConsistencyError(f"cycle count for length {e} is not an integer ({acc}/{e})")
        total += acc // e
    return total % 2


def fixpoint_profile(p) -> tuple:
    """``(fix, f)`` with ``fix[k]`` the fixed points of ``p**k`` for each divisor k of the order."""
    f = order(p)
    return {k: fixed_points(power(p, k)) for k in _divisors(f)}, f


# -- text forms --------------------------------------------------------------

_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, degree: int | None = None) -> Permutation:
    """Parse ``(0 1)(2 3 4)`` or ``[1,0,3,4,2]``."""
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise PermutationError(f"unterminated image list: {text!r}")
        body = s[1:-1].strip()
        images = [int(x) for x in re.split(r"[,\s]+", body) if x] if body else []
        if degree is not None and degree != len(images):
            raise PermutationError(f"image list has {len(images)} entries, expected {degree}")
        return Permutation(images)
    if s in ("", "()"):
        if degree is None:
            raise PermutationError("identity in cycle notation needs an explicit degree")
        return identity(degree)
    if _CYCLE.sub("", s).strip():
        raise PermutationError(f"cannot parse cycle notation {text!r}")
    cycs = []
    for body in _CYCLE.findall(s):
        pts = [int(x) for x in re.split(r"[,\s]+", body.strip()) if x]
        cycs.append(pts)
    top = max((max(c) for c in cycs if c), default=-1) + 1
    n = degree if degree is not None else top
    if top > n:
        raise PermutationError(f"point {top - 1} outside degree {n}")
    images = list(range(n))
    touched = set()
    for c in cycs:
        if len(set(c)) != len(c) or touched & set(c):
            raise PermutationError(f"cycles overlap in {text!r}")
        touched |= set(c)
        for a, b in zip(c, c[1:] + c[:1]):
            images[a] = b
    return Permutation(images)


def from_cycles(degree: int, *cycs) -> Permutation:
    images = list(range(degree))
    for c in cycs:
        for a, b in zip(c, tuple(c[1:]) + tuple(c[:1])):
            images[a] = b
    return Permutation(images)


def format_cycles(p) -> str:
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)


def format_images(p) -> str:
    return "[" + ",".join(map(str, p)) + "]"
