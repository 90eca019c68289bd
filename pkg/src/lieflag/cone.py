"""Invariants of the affine cone over a polarized flag variety.

The fundamental group of the punctured total space of a line bundle L on
a simply connected base is cyclic of order equal to the divisibility of
c1(L); on G/P that class is just the character's coefficient vector on
the marked nodes, so the order is a gcd.  The cone's coordinate ring is
graded by the section spaces of the powers of L, which gives its Hilbert
function directly.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable

from .errors import ZeroClass
from .parabolic import ParabolicMarking
from .representations import bwb_section_dim
from .roots import Weight


def cone_cover_order(c1: Iterable[int]) -> int:
    """Order of the cyclic fundamental group of L* from c1's divisibility."""
    coeffs = tuple(int(x) for x in c1)
    if not coeffs or not any(coeffs):
        raise ZeroClass("c1 must have a nonzero entry")
    return gcd(*(abs(c) for c in coeffs))


def cone_hilbert_function(
    mk: ParabolicMarking, w: Weight, k_max: int
) -> list[int]:
    """Hilbert function of the cone ring, entries k = 0..k_max."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    return [1] + [bwb_section_dim(mk, w, k) for k in range(1, k_max + 1)]
