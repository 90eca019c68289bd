"""Exact root-system combinatorics for the simple Lie types.

Everything lives in the simple-root basis: a positive root is the tuple
of its (nonnegative) integer coefficients, the Cartan matrix fixes all
pairings, and no floating point or Euclidean coordinates appear anywhere.
Node numbering is Bourbaki for every series (see the table in README.md).

Convention: ``cartan[i][j]`` is the pairing of the i-th simple root with
the j-th simple coroot, so the pairing of a root ``a`` (coefficient
vector) with the j-th simple coroot is ``sum(a[i] * cartan[i][j])``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidRank

RootVector = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

# Desk-scale cap for the classical series A-D; reassign to raise it.
MAX_CLASSICAL_RANK = 12


@dataclass(frozen=True, order=True)
class DynkinType:
    """A simple Lie type: series letter A-G plus rank."""

    series: str
    rank: int

    def __post_init__(self) -> None:
        if self.series not in _MIN_RANK:
            raise InvalidRank(f"unknown series {self.series!r}")
        if self.series in _FIXED_RANKS:
            if self.rank not in _FIXED_RANKS[self.series]:
                raise InvalidRank(
                    f"{self.series}{self.rank} is not a simple type"
                )
        else:
            if self.rank < _MIN_RANK[self.series]:
                raise InvalidRank(
                    f"series {self.series} needs rank >= {_MIN_RANK[self.series]}"
                )
            if self.rank > MAX_CLASSICAL_RANK:
                raise InvalidRank(
                    f"rank {self.rank} above the configured cap "
                    f"{MAX_CLASSICAL_RANK} for series {self.series}"
                )
        if self.series == "D" and self.rank == 3:
            warnings.warn(
                "D3 has the same diagram as A3 (relabelled nodes); "
                "results agree with A3 up to the node permutation",
                UserWarning,
                stacklevel=3,
            )

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


def dynkin_type(text: str) -> DynkinType:
    """Parse a type written as series letter plus rank, e.g. 'A3', 'G2'."""
    text = text.strip()
    if len(text) < 2 or not text[0].isalpha() or not text[1:].isdigit():
        raise InvalidRank(f"cannot parse Dynkin type {text!r}")
    return DynkinType(text[0].upper(), int(text[1:]))


@dataclass(frozen=True)
class Weight:
    """Integer coordinates on the fundamental weights of a fixed type."""

    dynkin: DynkinType
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.dynkin.rank:
            raise InvalidRank(
                f"weight needs {self.dynkin.rank} coordinates, "
                f"got {len(self.coords)}"
            )
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def scaled(self, k: int) -> "Weight":
        return Weight(self.dynkin, tuple(k * c for c in self.coords))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def weight(dtype: DynkinType, coords: Iterable[int]) -> Weight:
    return Weight(dtype, tuple(coords))


def fundamental_weight(dtype: DynkinType, node: int) -> Weight:
    """Fundamental weight at a 1-based node."""
    if not 1 <= node <= dtype.rank:
        raise InvalidRank(f"node {node} out of range for {dtype}")
    return Weight(dtype, tuple(1 if i == node - 1 else 0 for i in range(dtype.rank)))


def cartan_matrix(dtype: DynkinType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix in Bourbaki numbering, rows pair against coroots."""
    n = dtype.rank
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def chain(last: int) -> None:
        for i in range(last):
            m[i][i + 1] = -1
            m[i + 1][i] = -1

    s = dtype.series
    if s == "A":
        chain(n - 1)
    elif s == "B":
        chain(n - 1)
        m[n - 2][n - 1] = -2  # last simple root is short
        m[n - 1][n - 2] = -1
    elif s == "C":
        chain(n - 1)
        m[n - 2][n - 1] = -1  # last simple root is long
        m[n - 1][n - 2] = -2
    elif s == "D":
        chain(n - 2)
        m[n - 3][n - 1] = -1
        m[n - 1][n - 3] = -1
    elif s == "E":
        # chain 1-3-4-...-n with node 2 attached to node 4
        for i, j in zip((0,) + tuple(range(2, n - 1)), range(2, n)):
            m[i][j] = -1
            m[j][i] = -1
        m[1][3] = -1
        m[3][1] = -1
    elif s == "F":
        chain(3)
        m[1][2] = -2
        m[2][1] = -1
    elif s == "G":
        m[0][1] = -1
        m[1][0] = -3
    return tuple(tuple(row) for row in m)


def simple_root_length_sq(dtype: DynkinType) -> tuple[int, ...]:
    """Relative squared lengths of the simple roots (ratios matter only)."""
    n = dtype.rank
    s = dtype.series
    if s in ("A", "D", "E"):
        return (2,) * n
    if s == "B":
        return (2,) * (n - 1) + (1,)
    if s == "C":
        return (1,) * (n - 1) + (2,)
    if s == "F":
        return (2, 2, 1, 1)
    return (1, 3)  # G2


def _pairing(alpha: Sequence[int], cartan: Sequence[Sequence[int]], j: int) -> int:
    return sum(alpha[i] * cartan[i][j] for i in range(len(alpha)))


def _enumerate_positive_roots(
    cartan: Sequence[Sequence[int]], node_order: Sequence[int] | None = None
) -> tuple[RootVector, ...]:
    """Close the simple roots under root strings, level by level.

    A candidate ``alpha + a_j`` is a root iff the alpha_j-string through
    alpha continues upward, i.e. ``p - <alpha, a_j^v> > 0`` where p counts
    how far the string extends downward inside the set built so far.
    Processing by height makes the downward part always already known.
    """
    rank = len(cartan)
    order = list(node_order) if node_order is not None else list(range(rank))
    simple = [tuple(1 if i == k else 0 for i in range(rank)) for k in range(rank)]
    known: set[RootVector] = set(simple)
    level = list(simple)
    while level:
        nxt: list[RootVector] = []
        for alpha in level:
            for j in order:
                p = 0
                lower = list(alpha)
                while True:
                    lower[j] -= 1
                    if tuple(lower) in known:
                        p += 1
                    else:
                        break
                if p - _pairing(alpha, cartan, j) > 0:
                    cand = tuple(
                        c + 1 if i == j else c for i, c in enumerate(alpha)
                    )
                    if cand not in known:
                        known.add(cand)
                        nxt.append(cand)
        level = nxt
    return tuple(sorted(known, key=lambda r: (sum(r), r)))


@lru_cache(maxsize=None)
def positive_roots(dtype: DynkinType) -> tuple[RootVector, ...]:
    """All positive roots as coefficient vectors, sorted by height."""
    return _enumerate_positive_roots(cartan_matrix(dtype))


def _coroot_vector(
    alpha: Sequence[int],
    cartan: Sequence[Sequence[int]],
    len2: Sequence[int],
) -> RootVector:
    """Coefficients of alpha's coroot over the simple coroots."""
    rank = len(alpha)
    len2_alpha = Fraction(0)
    for j in range(rank):
        len2_alpha += Fraction(_pairing(alpha, cartan, j) * alpha[j] * len2[j], 2)
    out = []
    for j in range(rank):
        c = Fraction(alpha[j] * len2[j]) / len2_alpha
        if c.denominator != 1:
            raise AssertionError(f"non-integral coroot coefficient for {alpha}")
        out.append(int(c))
    return tuple(out)


@dataclass(frozen=True)
class RootSystem:
    """Positive roots, Cartan matrix and coroots of one simple type.

    ``coroots[k]`` holds the simple-coroot coefficients of the coroot of
    ``positive_roots[k]``; ``rho`` is the all-ones weight.
    """

    dynkin: DynkinType
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[RootVector, ...]
    coroots: tuple[RootVector, ...]
    rho: Weight


@lru_cache(maxsize=None)
def root_system(dtype: DynkinType) -> RootSystem:
    cartan = cartan_matrix(dtype)
    roots = positive_roots(dtype)
    len2 = simple_root_length_sq(dtype)
    coroots = tuple(_coroot_vector(a, cartan, len2) for a in roots)
    return RootSystem(
        dynkin=dtype,
        cartan=cartan,
        positive_roots=roots,
        coroots=coroots,
        rho=Weight(dtype, (1,) * dtype.rank),
    )


def group_dimension(dtype: DynkinType) -> int:
    """Dimension of the simple group: rank plus twice the positive roots."""
    return dtype.rank + 2 * len(positive_roots(dtype))


def dynkin_adjacency(dtype: DynkinType) -> dict[int, set[int]]:
    """Diagram adjacency on 1-based nodes, read off the Cartan matrix."""
    cartan = cartan_matrix(dtype)
    n = dtype.rank
    adj: dict[int, set[int]] = {i: set() for i in range(1, n + 1)}
    for i in range(n):
        for j in range(n):
            if i != j and cartan[i][j] != 0:
                adj[i + 1].add(j + 1)
    return adj
