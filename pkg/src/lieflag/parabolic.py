"""Parabolic subgroups of a simple type and the geometry of G/P.

A parabolic is encoded by its set of marked (crossed) Dynkin nodes, the
nodes removed from the Levi factor.  The dimension of G/P is the number
of positive roots whose support meets the marking; this count is the
definition used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import ArityMismatch, EmptyMarking, NodeOutOfRange, NotMaximalParabolic
from .roots import (
    DynkinType,
    Weight,
    positive_roots,
    root_system,
)


@dataclass(frozen=True)
class ParabolicMarking:
    """Marked-node subset defining a proper parabolic subgroup."""

    dynkin: DynkinType
    marked: frozenset[int]

    def __post_init__(self) -> None:
        if not self.marked:
            raise EmptyMarking("a parabolic marking needs at least one node")
        bad = [i for i in self.marked if not 1 <= i <= self.dynkin.rank]
        if bad:
            raise NodeOutOfRange(
                f"node {min(bad)} out of range 1..{self.dynkin.rank} for {self.dynkin}"
            )

    @property
    def is_maximal(self) -> bool:
        return len(self.marked) == 1

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(sorted(self.marked))


def marking(dtype: DynkinType, nodes: Iterable[int]) -> ParabolicMarking:
    return ParabolicMarking(dtype, frozenset(int(i) for i in nodes))


def codim_parabolic(mk: ParabolicMarking) -> int:
    """dim G/P: positive roots supported on at least one marked node."""
    idx = [i - 1 for i in mk.marked]
    count = sum(
        1 for alpha in positive_roots(mk.dynkin) if any(alpha[i] for i in idx)
    )
    assert count >= len(mk.marked)
    return count


class RMin(NamedTuple):
    value: int
    nodes: tuple[int, ...]


def r_min(dtype: DynkinType) -> RMin:
    """Minimal codimension of a proper parabolic, with every attaining node.

    The minimum over all nonempty markings is attained at a single node;
    this is asserted exhaustively in the test suite rather than assumed.
    """
    codims = {
        i: codim_parabolic(marking(dtype, (i,))) for i in range(1, dtype.rank + 1)
    }
    best = min(codims.values())
    return RMin(best, tuple(i for i, c in sorted(codims.items()) if c == best))


PROJECTIVE_SPACE = "projective_space"
QUADRIC = "quadric"
GRASSMANNIAN_2_4 = "grassmannian_2_4"
FULL_FLAG_SL3 = "full_flag_sl3"


@dataclass(frozen=True)
class VarietyClass:
    """Named isomorphism class of a flag variety, with its dimension."""

    kind: str
    dim: int

    def label(self) -> str:
        if self.kind == PROJECTIVE_SPACE:
            return f"P^{self.dim}"
        if self.kind == QUADRIC:
            return f"Q^{self.dim}"
        if self.kind == GRASSMANNIAN_2_4:
            return "Gr(2,4)"
        return "FlagSL3"


def identify_marking(mk: ParabolicMarking) -> VarietyClass | None:
    """Look up a marking in the fixed identification table, else None.

    The table covers exactly the named identifications used by the
    classification records: projective spaces and quadrics at their
    standard end nodes, Gr(2,4), the two D4 spinor markings and the full
    flag threefold of A2.  Everything else is left unidentified.
    """
    t, nodes = mk.dynkin, mk.nodes
    s, n = t.series, t.rank
    if s == "A" and nodes in ((1,), (n,)):
        return VarietyClass(PROJECTIVE_SPACE, n)
    if s == "A" and n == 3 and nodes == (2,):
        return VarietyClass(GRASSMANNIAN_2_4, 4)
    if s == "A" and n == 2 and nodes == (1, 2):
        return VarietyClass(FULL_FLAG_SL3, 3)
    if s == "B" and nodes == (1,):
        return VarietyClass(QUADRIC, 2 * n - 1)
    if s == "D" and nodes == (1,):
        return VarietyClass(QUADRIC, 2 * n - 2)
    if s == "D" and n == 4 and nodes in ((3,), (4,)):
        return VarietyClass(QUADRIC, 6)
    if s == "C" and nodes == (1,):
        return VarietyClass(PROJECTIVE_SPACE, 2 * n - 1)
    if s == "C" and n == 2 and nodes == (2,):
        return VarietyClass(QUADRIC, 3)
    if s == "G" and nodes == (1,):
        return VarietyClass(QUADRIC, 5)
    return None


@dataclass(frozen=True)
class HomogeneousVariety:
    marking: ParabolicMarking
    dim: int
    picard_rank: int
    identification: VarietyClass | None

    def label(self) -> str:
        if self.identification is not None:
            return self.identification.label()
        nodes = ",".join(str(i) for i in self.marking.nodes)
        return f"{self.marking.dynkin}/P({nodes})"


def homogeneous_variety(mk: ParabolicMarking) -> HomogeneousVariety:
    ident = identify_marking(mk)
    dim = codim_parabolic(mk)
    if ident is not None:
        assert ident.dim == dim
    return HomogeneousVariety(
        marking=mk, dim=dim, picard_rank=len(mk.marked), identification=ident
    )


def minimal_homogeneous_varieties(dtype: DynkinType) -> tuple[HomogeneousVariety, ...]:
    """One variety per single node attaining the minimal codimension."""
    best = r_min(dtype)
    return tuple(homogeneous_variety(marking(dtype, (i,))) for i in best.nodes)


def fano_index(mk: ParabolicMarking) -> int:
    """Index of G/P for a single marked node.

    Equals the pairing of the marked simple coroot with the sum of all
    positive roots supported on the marked node (the nilradical roots).
    """
    if not mk.is_maximal:
        raise NotMaximalParabolic(
            f"fano_index needs exactly one marked node, got {sorted(mk.marked)}"
        )
    (node,) = mk.marked
    j = node - 1
    rs = root_system(mk.dynkin)
    sigma = [0] * mk.dynkin.rank
    for alpha in rs.positive_roots:
        if alpha[j]:
            for i, c in enumerate(alpha):
                sigma[i] += c
    index = sum(sigma[i] * rs.cartan[i][j] for i in range(mk.dynkin.rank))
    assert index >= 2
    return index


def admissible_conormal_range(mk: ParabolicMarking) -> tuple[int, int]:
    """Twists O(k) a point-contracted divisor G/P can carry: 1..index-1."""
    return (1, fano_index(mk) - 1)


def character_weight(mk: ParabolicMarking, coefficients: Sequence[int]) -> Weight:
    """Embed a character of P as a weight supported on the marked nodes.

    Coefficients are taken in increasing node order.  The result may be
    non-dominant; callers check ``is_dominant`` where it matters.
    """
    nodes = mk.nodes
    if len(coefficients) != len(nodes):
        raise ArityMismatch(
            f"{len(nodes)} marked nodes but {len(coefficients)} coefficients"
        )
    coords = [0] * mk.dynkin.rank
    for node, c in zip(nodes, coefficients):
        coords[node - 1] = int(c)
    return Weight(mk.dynkin, tuple(coords))
