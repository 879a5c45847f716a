"""Closed-form parity predictions; pure arithmetic, no group objects."""
from __future__ import annotations

from dataclasses import dataclass

from .gf import is_prime, prime_power


class LawError(ValueError):
    """Parameters outside a law's domain."""


@dataclass(frozen=True)
class ParityPrediction:
    value: int
    law: str
    parameters: tuple

    def __int__(self):
        return self.value


def binomial_parity(n: int, k: int) -> int:
    """C(n, k) mod 2 via 2-adic valuations of factorials (no large integers)."""
    if k < 0 or k > n:
        return 0
    carries = p_part_factorial(2, n) - p_part_factorial(2, k) - p_part_factorial(2, n - k)
    return int(carries == 0)


def diagonal_parity_law(n: int, l: int, par_s: int) -> int:
    """Parity of s acting diagonally on X^l, |X| = n."""
    if l < 2:
        raise LawError("the diagonal law needs l >= 2")
    return (l * n * par_s) & 1


def powerset_parity_law(n: int, l: int, par_s: int) -> int:
    """Parity of s acting on the l-subsets of an n-set."""
    if not 0 < l < n:
        raise LawError("need 0 < l < n")
    return binomial_parity(n - 2, l - 1) & par_s


def frobenius_even(p: int, f: int) -> bool:
    if not is_prime(p):
        raise LawError(f"{p} is not prime")
    if p ** f == 4:
        return False
    return not (f % 2 == 0 and p % 4 == 3)


def affine_even(n: int, q: int) -> bool:
    prime_power(q)
    return (q % 2 == 0) != ((n, q) in ((1, 2), (2, 2)))


def pgl_generator_parity(d: int, q: int) -> int:
    """Parity of the diagonal map e0 -> u e0 on the projective points."""
    if q % 2 == 0:
        return 0
    return (1 + d) & 1


def pgl_even(d: int, q: int) -> bool:
    x = (d + 1) * q
    return x % 2 == 0 and x > 6


def projective_parity(d: int, q: int, which: str, par_alpha: int = 1) -> int:
    """``which='pgl'``: 0 iff PGL_d(q) is even. ``which='field'``: parity of the induced field automorphism."""
    if d < 2:
        raise LawError("need d >= 2")
    prime_power(q)
    if which == "pgl":
        return 0 if pgl_even(d, q) else 1
    if which == "field":
        return ((1 + q * ((d + 1) * (d - 2) // 2)) * par_alpha) & 1
    raise LawError(f"unknown projective parity case {which!r}")


def wreath_parity_law(m: int, l: int, kind: str, par: int, mode: str) -> int:
    """Parity of a top element (kind='top') or a single-coordinate base element (kind='base')."""
    if m < 2 or l < 2:
        raise LawError("need m, l >= 2")
    if mode == "imprimitive":
        if kind == "top":
            return (m * par) & 1
        if kind == "base":
            return par & 1
    elif mode == "product":
        if kind == "top":
            return ((m ** (l - 1) * (m - 1) // 2) * par) & 1
        if kind == "base":
            return (m ** (l - 1) * par) & 1
    raise LawError(f"unknown element kind {kind!r} or mode {mode!r}")


def p_part_factorial(p: int, n: int) -> int:
    """Exponent of p in n!, as (n - digit sum of n in base p) / (p - 1)."""
    if not is_prime(p):
        raise LawError(f"{p} is not prime")
    if n < 0:
        raise LawError("n must be non-negative")
    s, m = 0, n
    while m:
        m, r = divmod(m, p)
        s += r
    return (n - s) // (p - 1)


def symplectic_scalar_identity(m: int, q: int) -> bool:
    """((q^m - 1)/(q - 1))^2 is congruent to m mod 2 for odd q."""
    if q % 2 == 0:
        raise LawError("identity is stated for odd q")
    return (((q ** m - 1) // (q - 1)) ** 2 - m) % 2 == 0


# -- even part of projective semilinear groups -----------------------------------

def table_even_part_generators(p: int, f: int, d: int) -> list:
    """Generator names of the listed even part of PGammaL_d(p^f).

    Names: 'psl', 'g1u', 'frob', 'frob2' (Frobenius squared), 'g1u*frob'.
    For p = 2 both rows read PGL.
    """
    if p == 2:
        return ["psl", "g1u"]
    if p % 4 == 1 or f % 2 == 1:
        return ["psl", "frob"] if d % 2 == 0 else ["psl", "g1u"]
    r = d % 4
    if r == 0:
        return ["psl", "frob"]
    if r == 1:
        return ["psl", "g1u"]
    if r == 2:
        return ["psl", "frob2", "g1u*frob"]
    return ["psl", "g1u", "frob2"]


LAWS = {
    "diagonal": diagonal_parity_law,
    "powerset": powerset_parity_law,
    "frobenius": frobenius_even,
    "affine": affine_even,
    "projective": projective_parity,
    "wreath": wreath_parity_law,
}
