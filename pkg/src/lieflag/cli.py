"""Command-line front end.

Every subcommand prints either a stable line-oriented text form or, with
--json, a single JSON document carrying the same numeric content.  Exit
codes: 0 success, 1 domain errors (named on stderr), 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import classifier, cone, parabolic, representations
from .errors import DomainError
from .roots import DynkinType, Weight, dynkin_type, group_dimension, positive_roots


class UsageError(Exception):
    def __init__(self, flag: str, message: str) -> None:
        super().__init__(message)
        self.flag = flag


def _parse_type(text: str) -> DynkinType:
    try:
        return dynkin_type(text)
    except DomainError as exc:
        raise UsageError("TYPE", str(exc)) from None


def _parse_ints(text: str, flag: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(flag, f"expected comma-separated integers, got {text!r}") from None


def _parse_nodes(text: str, dtype: DynkinType, flag: str) -> tuple[int, ...]:
    nodes = _parse_ints(text, flag)
    for i in nodes:
        if not 1 <= i <= dtype.rank:
            raise UsageError(flag, f"node {i} out of range 1..{dtype.rank} for {dtype}")
    return nodes


def _parse_weight(text: str, dtype: DynkinType, flag: str) -> Weight:
    coords = _parse_ints(text, flag)
    if len(coords) != dtype.rank:
        raise UsageError(flag, f"{dtype} needs {dtype.rank} coordinates, got {len(coords)}")
    return Weight(dtype, coords)


def _fmt_list(values) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


def _fmt_vec(values) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def _fmt_orbit(orbit: classifier.Orbit) -> str:
    parts = [orbit.kind, str(orbit.dim)]
    if orbit.identification:
        parts.append(orbit.identification)
    return ":".join(parts)


def _orbit_dict(orbit: classifier.Orbit) -> dict:
    return {
        "kind": orbit.kind,
        "dim": orbit.dim,
        "identification": orbit.identification,
        "note": orbit.note,
    }


def _descriptor_line(d: classifier.VarietyDescriptor) -> str:
    params = ",".join(d.param_names) if d.param_names else "-"
    orbits = "[" + "|".join(_fmt_orbit(o) for o in d.orbits) + "]"
    line = (
        f"name={d.name} source={d.source} item={d.item} n={d.n} dim={d.dim} "
        f"picard={d.picard} params={params} actions={d.actions} orbits={orbits}"
    )
    if d.param_constraint:
        line += f' constraint="{d.param_constraint}"'
    if d.note:
        line += f' note="{d.note}"'
    return line


def _descriptor_dict(d: classifier.VarietyDescriptor) -> dict:
    return {
        "name": d.name,
        "case": d.case,
        "source": d.source,
        "item": d.item,
        "n": d.n,
        "dim": d.dim,
        "picard": d.picard,
        "param_names": list(d.param_names),
        "param_constraint": d.param_constraint,
        "actions": d.actions,
        "orbits": [_orbit_dict(o) for o in d.orbits],
        "note": d.note,
    }


def _cmd_roots(args) -> tuple[dict, list[str]]:
    dtype = _parse_type(args.type)
    roots = positive_roots(dtype)
    text = [f"type={dtype} count={len(roots)}"]
    text += [f"root={_fmt_vec(r)}" for r in roots]
    return {"type": str(dtype), "count": len(roots), "roots": [list(r) for r in roots]}, text


def _cmd_dim_group(args) -> tuple[dict, list[str]]:
    dtype = _parse_type(args.type)
    dim = group_dimension(dtype)
    return {"type": str(dtype), "dim": dim}, [f"type={dtype} dim={dim}"]


def _cmd_parabolic(args) -> tuple[dict, list[str]]:
    dtype = _parse_type(args.type)
    nodes = _parse_nodes(args.nodes, dtype, "--nodes")
    mk = parabolic.marking(dtype, nodes)
    hv = parabolic.homogeneous_variety(mk)
    ident = hv.identification.label() if hv.identification else None
    text = (
        f"type={dtype} nodes={_fmt_list(mk.nodes)} dim={hv.dim} "
        f"picard={hv.picard_rank} identification={ident or '-'}"
    )
    return {
        "type": str(dtype),
        "nodes": list(mk.nodes),
        "dim": hv.dim,
        "picard": hv.picard_rank,
        "identification": ident,
    }, [text]


def _cmd_rmin(args) -> tuple[dict, list[str]]:
    dtype = _parse_type(args.type)
    best = parabolic.r_min(dtype)
    text = f"type={dtype} r={best.value} nodes={_fmt_list(best.nodes)}"
    return {"type": str(dtype), "r": best.value, "nodes": list(best.nodes)}, [text]


def _cmd_minimal_homogeneous(args) -> tuple[dict, list[str]]:
    dtype = _parse_type(args.type)
    best = parabolic.r_min(dtype)
    varieties = parabolic.minimal_homogeneous_varieties(dtype)
    text = [f"type={dtype} r={best.value} count={len(varieties)}"]
    entries = []
    for hv in varieties:
        (node,) = hv.marking.nodes
        ident = hv.identification.label() if hv.identification else None
        text.append(
            f"node={node} dim={hv.dim} picard={hv.picard_rank} "
            f"identification={ident or '-'}"
        )
        entries.append(
            {"node": node, "dim": hv.dim, "picard": hv.picard_rank, "identification": ident}
        )
    return {
        "type": str(dtype),
        "r": best.value,
        "count": len(varieties),
        "varieties": entries,
    }, text


def _cmd_fano_index(args) -> tuple[dict, list[str]]:
    dtype = _parse_type(args.type)
    (node,) = _parse_nodes(str(args.node), dtype, "--node")
    mk = parabolic.marking(dtype, (node,))
    index = parabolic.fano_index(mk)
    lo, hi = parabolic.admissible_conormal_range(mk)
    text = f"type={dtype} node={node} index={index} conormal_range=[{lo},{hi}]"
    return {
        "type": str(dtype),
        "node": node,
        "index": index,
        "conormal_range": [lo, hi],
    }, [text]


def _cmd_weyl_dim(args) -> tuple[dict, list[str]]:
    dtype = _parse_type(args.type)
    w = _parse_weight(args.weight, dtype, "--weight")
    dim = representations.weyl_dim(w)
    text = f"type={dtype} weight={_fmt_vec(w.coords)} dim={dim}"
    return {"type": str(dtype), "weight": list(w.coords), "dim": dim}, [text]


def _cmd_min_irrep(args) -> tuple[dict, list[str]]:
    dtype = _parse_type(args.type)
    best = representations.min_nontrivial_irrep(dtype)
    text = (
        f"type={dtype} dim={best.dim} nodes={_fmt_list(best.nodes)} "
        f"weight={_fmt_vec(best.weight.coords)}"
    )
    return {
        "type": str(dtype),
        "dim": best.dim,
        "nodes": list(best.nodes),
        "weight": list(best.weight.coords),
    }, [text]


def _cmd_bwb(args) -> tuple[dict, list[str]]:
    dtype = _parse_type(args.type)
    nodes = _parse_nodes(args.nodes, dtype, "--nodes")
    w = _parse_weight(args.weight, dtype, "--weight")
    if args.power < 1:
        raise UsageError("--power", "power must be >= 1")
    mk = parabolic.marking(dtype, nodes)
    dim = representations.bwb_section_dim(mk, w, args.power)
    text = (
        f"type={dtype} nodes={_fmt_list(mk.nodes)} weight={_fmt_vec(w.coords)} "
        f"power={args.power} dim={dim}"
    )
    return {
        "type": str(dtype),
        "nodes": list(mk.nodes),
        "weight": list(w.coords),
        "power": args.power,
        "dim": dim,
    }, [text]


def _cmd_cone_cover(args) -> tuple[dict, list[str]]:
    c1 = _parse_ints(args.c1, "--c1")
    order = cone.cone_cover_order(c1)
    text = f"c1={_fmt_vec(c1)} order={order}"
    return {"c1": list(c1), "order": order}, [text]


def _cmd_hilbert(args) -> tuple[dict, list[str]]:
    dtype = _parse_type(args.type)
    nodes = _parse_nodes(args.nodes, dtype, "--nodes")
    w = _parse_weight(args.weight, dtype, "--weight")
    if args.kmax < 1:
        raise UsageError("--kmax", "kmax must be >= 1")
    mk = parabolic.marking(dtype, nodes)
    values = cone.cone_hilbert_function(mk, w, args.kmax)
    text = (
        f"type={dtype} nodes={_fmt_list(mk.nodes)} weight={_fmt_vec(w.coords)} "
        f"kmax={args.kmax} values={_fmt_list(values)}"
    )
    return {
        "type": str(dtype),
        "nodes": list(mk.nodes),
        "weight": list(w.coords),
        "kmax": args.kmax,
        "values": values,
    }, [text]


def _cmd_classify(args) -> tuple[dict, list[str]]:
    group = classifier.GroupSpec(args.group, args.param)
    result = classifier.classify(
        group, args.dim, quasihomogeneous_only=args.quasihomogeneous, db_path=args.db
    )
    head = f"group={group.label()} n={result.n} verdict={result.verdict}"
    if result.verdict in ("full_list", "homogeneous"):
        head += f" count={len(result.entries)}"
    text = [head]
    if result.reason:
        text.append(f'reason="{result.reason}"')
    text += [_descriptor_line(d) for d in result.entries]
    return {
        "group": group.label(),
        "n": result.n,
        "verdict": result.verdict,
        "reason": result.reason,
        "count": len(result.entries),
        "entries": [_descriptor_dict(d) for d in result.entries],
    }, text


def _cmd_orbits(args) -> tuple[dict, list[str]]:
    params: dict[str, int] = {}
    if args.params:
        for item in args.params.split(","):
            if "=" not in item:
                raise UsageError("--params", f"expected k=v, got {item!r}")
            key, value = item.split("=", 1)
            try:
                params[key.strip()] = int(value)
            except ValueError:
                raise UsageError("--params", f"non-integer value in {item!r}") from None
    orbits = classifier.orbit_structure(
        args.variety, params, case=args.case, db_path=args.db
    )
    text = [f"variety={args.variety} count={len(orbits)}"]
    for o in orbits:
        line = f"orbit kind={o.kind} dim={o.dim}"
        if o.identification:
            line += f" identification={o.identification}"
        if o.note:
            line += f' note="{o.note}"'
        text.append(line)
    return {
        "variety": args.variety,
        "params": params,
        "count": len(orbits),
        "orbits": [_orbit_dict(o) for o in orbits],
    }, text


def _cmd_relations(args) -> tuple[dict, list[str]]:
    edges = classifier.relations(args.variety, db_path=args.db)
    text = [f"variety={args.variety} count={len(edges)}"]
    text += [f'relation op="{op}" to={to}' for op, to in edges]
    return {
        "variety": args.variety,
        "count": len(edges),
        "relations": [{"op": op, "to": to} for op, to in edges],
    }, text


def _cmd_validate_db(args) -> tuple[dict, list[str]]:
    violations = classifier.validate_database(db_path=args.db)
    text = [f"violations={len(violations)}"]
    for v in violations:
        text.append(f'violation rule={v.rule} record={v.record} case={v.case} message="{v.message}"')
    payload = {
        "count": len(violations),
        "violations": [
            {"rule": v.rule, "record": v.record, "case": v.case, "message": v.message}
            for v in violations
        ]
    }
    return payload, text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json",
        action="store_true",
        default=argparse.SUPPRESS,
        help="emit one JSON document",
    )
    common.add_argument(
        "--db", default=argparse.SUPPRESS, help="classification database path"
    )

    # SUPPRESS keeps the subparser from re-stamping a default over a value
    # already parsed from before the subcommand; run() fills the fallback.
    parser = argparse.ArgumentParser(prog="lieflag", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, handler, **kwargs):
        p = sub.add_parser(name, parents=[common], **kwargs)
        p.set_defaults(handler=handler)
        return p

    p = cmd("roots", _cmd_roots, help="positive roots of a type")
    p.add_argument("type")
    p = cmd("dim-group", _cmd_dim_group, help="dimension of the simple group")
    p.add_argument("type")
    p = cmd("parabolic", _cmd_parabolic, help="dimension of G/P for marked nodes")
    p.add_argument("type")
    p.add_argument("--nodes", required=True)
    p = cmd("rmin", _cmd_rmin, help="minimal flag-variety dimension")
    p.add_argument("type")
    p = cmd("minimal-homogeneous", _cmd_minimal_homogeneous, help="minimal flag varieties")
    p.add_argument("type")
    p = cmd("fano-index", _cmd_fano_index, help="index of G/P at one node")
    p.add_argument("type")
    p.add_argument("--node", required=True, type=int)
    p = cmd("weyl-dim", _cmd_weyl_dim, help="irreducible dimension of a weight")
    p.add_argument("type")
    p.add_argument("--weight", required=True)
    p = cmd("min-irrep", _cmd_min_irrep, help="smallest nontrivial irreducible")
    p.add_argument("type")
    p = cmd("bwb", _cmd_bwb, help="section dimension of a bundle power on G/P")
    p.add_argument("type")
    p.add_argument("--nodes", required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--power", required=True, type=int)
    p = cmd("cone-cover", _cmd_cone_cover, help="cyclic cover order of the punctured bundle")
    p.add_argument("--c1", required=True)
    p = cmd("hilbert", _cmd_hilbert, help="Hilbert function of the cone ring")
    p.add_argument("type")
    p.add_argument("--nodes", required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--kmax", required=True, type=int)
    p = cmd("classify", _cmd_classify, help="variety list for a group and dimension")
    p.add_argument("--group", required=True, choices=("SL", "Sp", "Spin", "G2"))
    p.add_argument("--param", type=int, default=0)
    p.add_argument("--dim", required=True, type=int)
    p.add_argument("--quasihomogeneous", action="store_true")
    p = cmd("orbits", _cmd_orbits, help="orbit list of a named record")
    p.add_argument("--variety", required=True)
    p.add_argument("--case", choices=("SL", "Sp", "Spin", "SL3Q"), default=None)
    p.add_argument("--params", default="")
    p = cmd("relations", _cmd_relations, help="blow-up and blow-down edges")
    p.add_argument("--variety", required=True)
    cmd("validate-db", _cmd_validate_db, help="structural rules over the database")

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.json = getattr(args, "json", False)
    args.db = getattr(args, "db", None)
    try:
        payload, text = args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc.flag}: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text:
            print(line)
    if args.command == "validate-db" and payload["violations"]:
        return 1
    return 0


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
