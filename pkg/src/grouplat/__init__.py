"""Permutation groups, subgroup intervals and parity laws at desk scale."""
from .perm import Permutation, parse_perm, parity, cycle_census, parity_from_fixpoints
from .group import Group, generate, sym, alt, cyclic, trivial

__all__ = [
    "Permutation", "parse_perm", "parity", "cycle_census", "parity_from_fixpoints",
    "Group", "generate", "sym", "alt", "cyclic", "trivial",
]
__version__ = "0.1.0"
