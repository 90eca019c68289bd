"""Queryable classification of low-dimensional simple-group actions.

The verdict ladder is driven by the minimal flag-variety dimension r of
the acting group: below r only the trivial action exists, at r the
variety is one of the minimal flag varieties, at r+1 the answer is the
record list shipped in the classification database, and at r+2 the
database covers exactly the quasihomogeneous fourfolds of SL(3).
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Mapping, Sequence

from .errors import (
    DatabaseFormatError,
    InvalidDimension,
    InvalidGroup,
    ParameterViolation,
    UnknownVariety,
)
from .parabolic import (
    codim_parabolic,
    marking,
    minimal_homogeneous_varieties,
    r_min,
)
from .records import RecordSchema, eval_expr, parse_records
from .roots import DynkinType

DB_ENV_VAR = "LIEFLAG_DB"


@dataclass(frozen=True)
class GroupSpec:
    """A classical simple group named the way the record lists name it."""

    family: str
    parameter: int = 0

    def __post_init__(self) -> None:
        f, p = self.family, self.parameter
        if f == "SL":
            if p < 2:
                raise InvalidGroup(f"SL needs parameter >= 2, got {p}")
        elif f == "Sp":
            if p < 4 or p % 2:
                raise InvalidGroup(f"Sp needs an even parameter >= 4, got {p}")
        elif f == "Spin":
            if p < 5:
                raise InvalidGroup(f"Spin needs parameter >= 5, got {p}")
        elif f != "G2":
            raise InvalidGroup(f"unknown family {f!r}")

    def resolve(self) -> tuple[str, "GroupSpec"]:
        """Case label plus the group after the low-rank spin aliases."""
        if self.family == "Spin" and self.parameter == 5:
            return "Sp", GroupSpec("Sp", 4)
        if self.family == "Spin" and self.parameter == 6:
            return "SL", GroupSpec("SL", 4)
        if self.family == "G2":
            return "G2", self
        return self.family, self

    def dynkin(self) -> DynkinType:
        case, g = self.resolve()
        if case == "SL":
            return DynkinType("A", g.parameter - 1)
        if case == "Sp":
            return DynkinType("C", g.parameter // 2)
        if case == "G2":
            return DynkinType("G", 2)
        m = g.parameter
        return DynkinType("B", m // 2) if m % 2 else DynkinType("D", m // 2)

    def label(self) -> str:
        if self.family == "G2":
            return "G2"
        return f"{self.family}({self.parameter})"


def group_spec(family: str, parameter: int = 0) -> GroupSpec:
    return GroupSpec(family, parameter)


@lru_cache(maxsize=None)
def _load_db(path: str | None) -> tuple[RecordSchema, ...]:
    if path is None:
        text = (
            resources.files("lieflag").joinpath("data/classification.db").read_text()
        )
    else:
        try:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise DatabaseFormatError(f"cannot read database {path!r}: {exc}") from None
    return parse_records(text)


def load_database(path: str | None = None) -> tuple[RecordSchema, ...]:
    """Shipped records, or the file named by the argument / environment."""
    if path is None:
        path = os.environ.get(DB_ENV_VAR) or None
    return _load_db(path)


_IDENT_RE = re.compile(r"^([PQ])\^\{?([0-9n+\- ]+)\}?$")


def _ident_dim(ident: str, n: int) -> int | None:
    if ident == "FlagSL3":
        return 3
    if ident == "Gr(2,4)":
        return 4
    match = _IDENT_RE.match(ident)
    if match is None:
        return None
    return int(eval_expr(match.group(2), {"n": n}))


def _ident_label(ident: str, n: int) -> str:
    match = _IDENT_RE.match(ident)
    if match is None:
        return ident
    return f"{match.group(1)}^{_ident_dim(ident, n)}"


def _ident_marking(ident: str, n: int, acting: DynkinType):
    """Marking whose flag variety matches an orbit identification."""
    k = _ident_dim(ident, n)
    s, r = acting.series, acting.rank
    if ident == "FlagSL3":
        return marking(acting, (1, 2)) if (s, r) == ("A", 2) else None
    if ident == "Gr(2,4)":
        return marking(acting, (2,)) if (s, r) == ("A", 3) else None
    kind = ident[0]
    if kind == "P":
        if s == "A" and k == r:
            return marking(acting, (1,))
        if s == "C" and k == 2 * r - 1:
            return marking(acting, (1,))
        return None
    if s == "B" and k == 2 * r - 1:
        return marking(acting, (1,))
    if s == "D" and k == 2 * r - 2:
        return marking(acting, (1,))
    if (s, r) == ("C", 2) and k == 3:
        return marking(acting, (2,))
    if (s, r) == ("A", 3) and k == 4:
        return marking(acting, (2,))
    return None


@dataclass(frozen=True)
class Orbit:
    kind: str
    dim: int
    identification: str = ""
    note: str = ""


@dataclass(frozen=True)
class VarietyDescriptor:
    """One record of the classification, instantiated at a dimension n."""

    name: str
    case: str
    source: str
    item: int
    n: int
    dim: int
    picard: int
    orbits: tuple[Orbit, ...]
    param_names: tuple[str, ...] = ()
    param_constraint: str = ""
    actions: int = 1
    note: str = ""
    allows_fixed_point: bool = False


def _instantiate(rec: RecordSchema, n: int) -> VarietyDescriptor:
    env = {"n": n}
    orbits = tuple(
        Orbit(
            kind=o.kind,
            dim=int(eval_expr(o.dim, env)),
            identification=_ident_label(o.ident, n) if o.ident else "",
            note=o.note,
        )
        for o in rec.orbits
    )
    return VarietyDescriptor(
        name=rec.name,
        case=rec.case,
        source=rec.source,
        item=rec.item,
        n=n,
        dim=int(eval_expr(rec.dim, env)),
        picard=rec.picard,
        orbits=orbits,
        param_names=rec.param_names,
        param_constraint=rec.param_constraint,
        actions=rec.actions,
        note=rec.note,
        allows_fixed_point=rec.allows_fixed_point,
    )


@dataclass(frozen=True)
class ClassificationResult:
    verdict: str  # only_trivial_action | homogeneous | full_list | out_of_covered_range
    group: GroupSpec
    n: int
    entries: tuple[VarietyDescriptor, ...] = ()
    reason: str = ""


def _homogeneous_entries(group: GroupSpec, n: int) -> tuple[VarietyDescriptor, ...]:
    entries = []
    for hv in minimal_homogeneous_varieties(group.dynkin()):
        (node,) = hv.marking.nodes
        entries.append(
            VarietyDescriptor(
                name=hv.label(),
                case=group.resolve()[0],
                source="Prop3.1",
                item=0,
                n=n,
                dim=hv.dim,
                picard=hv.picard_rank,
                orbits=(Orbit("open", hv.dim, hv.label()),),
                note=f"homogeneous, marked node {node}",
            )
        )
    return tuple(sorted(entries, key=lambda d: (d.name, d.note)))


def classify(
    group: GroupSpec,
    n: int,
    quasihomogeneous_only: bool = False,
    db_path: str | None = None,
) -> ClassificationResult:
    """Full variety list for a group acting in dimension n, where covered."""
    if n <= 0:
        raise InvalidDimension(f"dimension must be positive, got {n}")
    case, effective = group.resolve()
    r = r_min(group.dynkin()).value
    if n < r:
        return ClassificationResult("only_trivial_action", group, n)
    if n == r:
        return ClassificationResult(
            "homogeneous", group, n, _homogeneous_entries(group, n)
        )
    records = load_database(db_path)
    if n == r + 1 and case != "G2":
        entries = tuple(
            _instantiate(rec, n)
            for rec in records
            if rec.case == case and rec.applies(n)
        )
        entries = tuple(sorted(entries, key=lambda d: (d.item, d.name)))
        return ClassificationResult("full_list", group, n, entries)
    if case == "SL" and effective.parameter == 3 and n == 4:
        if quasihomogeneous_only:
            entries = tuple(
                _instantiate(rec, n)
                for rec in records
                if rec.case == "SL3Q" and rec.applies(n)
            )
            entries = tuple(sorted(entries, key=lambda d: (d.item, d.name)))
            return ClassificationResult("full_list", group, n, entries)
        return ClassificationResult(
            "out_of_covered_range",
            group,
            n,
            reason="dimension r+2 is covered only under a dense-orbit "
            "hypothesis; rerun with quasihomogeneous_only",
        )
    if case == "G2" and n > r:
        return ClassificationResult(
            "out_of_covered_range",
            group,
            n,
            reason="exceptional groups are covered only through the "
            "minimal flag-variety dimension",
        )
    return ClassificationResult(
        "out_of_covered_range",
        group,
        n,
        reason=f"no record list for {group.label()} in dimension {n}",
    )


def _acting_type(case: str, n: int) -> DynkinType:
    if case == "SL":
        return DynkinType("A", n - 1)
    if case == "Sp":
        return DynkinType("C", n // 2)
    if case == "SL3Q":
        return DynkinType("A", 2)
    m = n + 1
    return DynkinType("B", m // 2) if m % 2 else DynkinType("D", m // 2)


def orbit_structure(
    name: str,
    params: Mapping[str, int],
    case: str | None = None,
    db_path: str | None = None,
) -> tuple[Orbit, ...]:
    """Orbit list of a named record at given parameter values.

    ``params`` must bind ``n`` plus every declared parameter of the
    record; ``case`` disambiguates names that occur in several series.
    """
    records = load_database(db_path)
    matches = [r for r in records if r.name == name]
    if case is not None:
        matches = [r for r in matches if r.case == case]
    if not matches:
        raise UnknownVariety(f"no record named {name!r}" + (f" in case {case}" if case else ""))
    if len(matches) > 1:
        cases = ", ".join(sorted({r.case for r in matches}))
        raise UnknownVariety(f"{name!r} is ambiguous between cases {cases}; pass case")
    rec = matches[0]
    if "n" not in params:
        raise ParameterViolation("params must bind n")
    n = int(params["n"])
    if not rec.applies(n):
        raise ParameterViolation(
            f"{name!r} requires {rec.requires!r}, violated at n={n}"
        )
    missing = [p for p in rec.param_names if p not in params]
    if missing:
        raise ParameterViolation(f"{name!r} needs parameter {missing[0]!r}")
    if not rec.check_params(params):
        raise ParameterViolation(
            f"parameters violate {rec.param_constraint!r} for {name!r}"
        )
    return _instantiate(rec, n).orbits


def relations(
    name: str, db_path: str | None = None
) -> tuple[tuple[str, str], ...]:
    """Recorded blow-up / blow-down edges touching a record or instance."""
    records = load_database(db_path)
    edges = []
    known: set[str] = set()
    for rec in records:
        known.add(rec.name)
        for rel in rec.relations:
            src = rel.label or rec.name
            known.add(src)
            known.add(rel.to)
            if src == name:
                edges.append((rel.op, rel.to))
    if name not in known:
        raise UnknownVariety(f"no record or instance named {name!r}")
    return tuple(edges)


@dataclass(frozen=True)
class Violation:
    rule: str
    record: str
    case: str
    message: str


_PROBE_NS = {"SL": (2, 3, 4, 5, 6, 7, 8), "Sp": (4, 6, 8), "Spin": (6, 7, 8), "SL3Q": (4,)}
_PROBE_PARAMS = {
    (): ({},),
    ("m",): ({"m": 1}, {"m": 2}),
    ("a",): ({"a": -1}, {"a": 0}, {"a": 1}),
    ("p", "q"): ({"p": 0, "q": 1}, {"p": 1, "q": 0}, {"p": 1, "q": 1}),
}


def validate_database(db_path: str | None = None) -> list[Violation]:
    records = load_database(db_path)
    return validate_records(records)


def validate_records(records: Sequence[RecordSchema]) -> list[Violation]:
    """Run the structural rules over every record at probe dimensions.

    R1  no orbit of dimension strictly between 0 and r of the acting group
    R2  fixed points only in records flagged as the linear-extension case
    R3  orbit identifications must match a flag variety of that dimension
    R4  quasihomogeneous fourfold records have exactly one open orbit
    R5  Spin-series records of Picard rank one are only P^n and Q^n
    plus shape checks: open orbits fill the space, closed ones do not.
    """
    seen: dict[tuple, Violation] = {}

    def add(rule: str, rec: RecordSchema, message: str) -> None:
        v = Violation(rule, rec.name, rec.case, message)
        seen.setdefault((rule, rec.name, rec.case, message), v)

    for rec in records:
        for n in _PROBE_NS.get(rec.case, ()):
            if not rec.applies(n):
                continue
            acting = _acting_type(rec.case, n)
            r = r_min(acting).value
            dim = int(eval_expr(rec.dim, {"n": n}))
            open_count = 0
            for orb in rec.orbits:
                odim = int(eval_expr(orb.dim, {"n": n}))
                if orb.kind == "open":
                    open_count += 1
                    if odim != dim:
                        add("shape", rec, f"open orbit of dim {odim} != {dim}")
                elif orb.kind == "fixed":
                    if odim != 0:
                        add("shape", rec, "fixed orbit with positive dimension")
                    if not rec.allows_fixed_point:
                        add("R2", rec, "fixed point in an unflagged record")
                else:
                    if odim >= dim:
                        add("shape", rec, f"closed orbit of dim {odim} not below {dim}")
                if 0 < odim < r:
                    add(
                        "R1",
                        rec,
                        f"orbit of dim {odim} below r={r} of {acting} at n={n}",
                    )
                if orb.kind in ("closed", "intermediate") and orb.ident:
                    mk = _ident_marking(orb.ident, n, acting)
                    if mk is None:
                        add(
                            "R3",
                            rec,
                            f"identification {_ident_label(orb.ident, n)} has no "
                            f"flag variety under {acting} at n={n}",
                        )
                    elif codim_parabolic(mk) != odim:
                        add(
                            "R3",
                            rec,
                            f"identification {_ident_label(orb.ident, n)} has dim "
                            f"{codim_parabolic(mk)} but orbit recorded at {odim}",
                        )
            if open_count > 1:
                add("shape", rec, "more than one open orbit")
            if rec.case == "SL3Q" and open_count != 1:
                add("R4", rec, f"{open_count} open orbits in a quasihomogeneous record")
            if rec.case == "Spin" and rec.picard == 1 and rec.name not in ("P^n", "Q^n"):
                add("R5", rec, f"Picard-rank-one Spin entry {rec.name!r}")
    return list(seen.values())
