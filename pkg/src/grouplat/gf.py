"""Finite fields GF(p^f) with elements indexed by base-p coefficient digits."""
from __future__ import annotations

from functools import lru_cache

from .perm import Permutation


class FieldError(ValueError):
    """Invalid field parameters."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple:
    """Split ``q = p**f``; raises FieldError when q is not a prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    f, m = 0, q
    while m % p == 0:
        m //= p
        f += 1
    if m != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, f


def _digits(x: int, p: int, f: int) -> list:
    out = []
    for _ in range(f):
        x, r = divmod(x, p)
        out.append(r)
    return out


def _undigits(ds, p: int) -> int:
    x = 0
    for d in reversed(ds):
        x = x * p + d
    return x


def _polymulmod(a: list, b: list, mod: list, p: int) -> list:
    """Product of two coefficient lists modulo a monic polynomial."""
    f = len(mod) - 1
    prod = [0] * (2 * f - 1 if f else 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = (prod[i + j] + ai * bj) % p
    for k in range(len(prod) - 1, f - 1, -1):
        c = prod[k]
        if c:
            for j in range(f + 1):
                prod[k - f + j] = (prod[k - f + j] - c * mod[j]) % p
    return (prod + [0] * f)[:f]


def _is_irreducible(mod: list, p: int) -> bool:
    f = len(mod) - 1
    if f == 1:
        return True
    # no monic factor of degree <= f/2: divide by every candidate
    for deg in range(1, f // 2 + 1):
        for c in range(p ** deg):
            div = _digits(c, p, deg) + [1]
            if _divides(div, mod, p):
                return False
    return True


def _divides(div: list, poly: list, p: int) -> bool:
    rem = list(poly)
    dd = len(div) - 1
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c:
            for j in range(dd + 1):
                rem[k - dd + j] = (rem[k - dd + j] - c * div[j]) % p
    return not any(rem[:dd])


class Field:
    """GF(p^f); element ``x`` has base-p digits equal to its coefficients (constant first)."""

    def __init__(self, p: int, f: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if f < 1:
            raise FieldError("extension degree must be positive")
        self.p, self.f = p, f
        self.q = p ** f
        if f == 1:
            self.modulus = (0, 1)
        else:
            for c in range(self.q):
                mod = _digits(c, p, f) + [1]
                if mod[0] and _is_irreducible(mod, p):
                    self.modulus = tuple(mod)
                    break
        self._build_tables()

    def _raw_mul(self, a: int, b: int) -> int:
        if self.f == 1:
            return a * b % self.p
        p, f = self.p, self.f
        return _undigits(_polymulmod(_digits(a, p, f), _digits(b, p, f), list(self.modulus), p), p)

    def _build_tables(self):
        q = self.q
        if q == 2:
            self.primitive = 1
            self.exp = [1]
        else:
            for cand in range(2, q) if self.f == 1 else range(self.p, q):
                powers = [1]
                x = cand
                while x != 1:
                    powers.append(x)
                    x = self._raw_mul(x, cand)
                if len(powers) == q - 1:
                    self.primitive = cand
                    self.exp = powers
                    break
        self.log = [None] * q
        for k, x in enumerate(self.exp):
            self.log[x] = k

    # arithmetic
    @property
    def u(self) -> int:
        return self.primitive

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.f == 1:
            return (a + b) % self.p
        p = self.p
        out, scale = 0, 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out, scale = 0, 1
        while a:
            a, r = divmod(a, p)
            out += ((-r) % p) * scale
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("zero has no inverse")
            return 1 if k == 0 else 0
        return self.exp[(self.log[a] * k) % (self.q - 1)]

    def mult_order(self, a: int) -> int:
        from math import gcd
        return (self.q - 1) // gcd(self.log[a], self.q - 1)

    def frobenius(self, a: int, times: int = 1) -> int:
        return self.pow(a, self.p ** (times % self.f))

    def __repr__(self):
        return f"GF({self.p}^{self.f})"


@lru_cache(maxsize=None)
def make_field(p: int, f: int = 1) -> Field:
    return Field(p, f)


def field_of_order(q: int) -> Field:
    return make_field(*prime_power(q))


def frobenius_perm(F: Field, times: int = 1) -> Permutation:
    """The automorphism a -> a^(p^times) as a permutation of element indices."""
    return Permutation._trusted(F.frobenius(a, times) for a in F.elements())


def suzuki_theta(F: Field):
    """The automorphism a -> a^r with r^2 = 2q, for q an odd power of 2."""
    if F.p != 2 or F.f % 2 == 0 or F.f < 3:
        raise FieldError("the square-root-of-Frobenius automorphism needs q = 2^(2a+1) >= 8")
    r = 2 ** ((F.f + 1) // 2)
    return lambda a: F.pow(a, r)
