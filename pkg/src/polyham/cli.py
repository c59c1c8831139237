"""Command line front end.

Exit codes: 0 success or affirmative answer, 1 negative finding (not a
surface, not polyhedral, not Hamiltonian, nothing found, ...), 2 bad usage or
unreadable input.  ``--json`` output always carries ``"schema": 1``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from . import __version__
from .audit import run_audit
from .dual import (
    CycleSpec,
    EdgeSubgraph,
    InvalidCycleError,
    build_dual,
    read_label_table,
    write_label_table,
)
from .generate import generate_equivelar_torus
from .proper import ProperType, classify_proper_type
from .search import Algorithm, SearchRequest, SearchTooLarge, TargetClass, find_hamiltonian
from .surface import (
    check_polyhedral,
    equivelar_type,
    euler_characteristic,
    is_orientable,
    load_map,
    validate_surface,
)
from .topology import classify_cycle, region_summary

OK, NEGATIVE, USAGE = 0, 1, 2
WARNING = "non-polyhedral input — theorems not guaranteed"


class UsageError(Exception):
    pass


def split_tokens(text: str, sep: str) -> List[str]:
    """Split on ``sep`` outside backtick-quoted stretches; strip the quotes."""
    out, buf, quoted = [], [], False
    for ch in text:
        if ch == "`":
            quoted = not quoted
        elif ch == sep and not quoted:
            out.append("".join(buf).strip())
            buf = []
            continue
        buf.append(ch)
    if quoted:
        raise UsageError(f"unbalanced backtick in {text!r}")
    out.append("".join(buf).strip())
    return [t.replace("`", "") if t.startswith("`") and t.endswith("`") else t for t in out]


def parse_cycle_arg(text: str) -> List[str]:
    tokens = split_tokens(text, ",")
    if any(not t for t in tokens):
        raise UsageError(f"empty vertex in cycle {text!r}")
    return tokens


def parse_edges_arg(text: str) -> List[tuple]:
    edges = []
    for item in split_tokens(text, ","):
        ends = split_tokens(item, "-")
        if len(ends) != 2 or not all(ends):
            raise UsageError(f"edge {item!r} is not of the form a-b")
        edges.append(tuple(ends))
    return edges


def _emit(args, payload: dict, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps({"schema": 1, **payload}, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _load(path, strict=True):
    m = load_map(path, strict=strict)
    polyhedral = check_polyhedral(m).is_polyhedral if validate_surface(m).ok else False
    if not polyhedral:
        print(f"warning: {WARNING}", file=sys.stderr)
    return m, polyhedral


def cmd_validate(args) -> int:
    m = load_map(args.map, strict=False)
    report = validate_surface(m)
    poly = check_polyhedral(m)
    lines = [f"surface: {'yes' if report.ok else 'no'}"]
    lines += [f"  {f}" for f in report.failures()]
    lines.append(f"polyhedral: {'yes' if poly.is_polyhedral else 'no'}")
    lines += [f"  faces {' '.join(m.faces[i])} and {' '.join(m.faces[j])} meet badly" for i, j in poly.violations]
    if not poly.is_polyhedral:
        lines.append(f"warning: {WARNING}")
    _emit(args, {
        "surface": report.to_json(),
        "polyhedral": poly.is_polyhedral,
        "violations": [[" ".join(m.faces[i]), " ".join(m.faces[j])] for i, j in poly.violations],
    }, lines)
    return OK if report.ok and poly.is_polyhedral else NEGATIVE


def cmd_info(args) -> int:
    m, polyhedral = _load(args.map)
    fv = m.f_vector
    et = equivelar_type(m)
    chi = euler_characteristic(m)
    orientable = is_orientable(m)
    _emit(args, {
        "f_vector": list(fv),
        "euler": chi,
        "type": None if et is None else [et.p, et.q],
        "polyhedral": polyhedral,
        "orientable": orientable,
    }, [
        f"f-vector: ({fv.f0}, {fv.f1}, {fv.f2})",
        f"euler characteristic: {chi}",
        f"type: {et if et is not None else 'not equivelar'}",
        f"polyhedral: {'yes' if polyhedral else 'no'}",
        f"orientable: {'yes' if orientable else 'no'}",
    ])
    return OK


def cmd_dual(args) -> int:
    m, _ = _load(args.map)
    labels = read_label_table(Path(args.labels).read_text(encoding="utf-8")) if args.labels else None
    dual, corr = build_dual(m, labels)
    text = dual.to_text()
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.table:
        Path(args.table).write_text(write_label_table(corr), encoding="utf-8")
    return OK


def cmd_classify(args) -> int:
    m, _ = _load(args.map)
    cycle = CycleSpec(tuple(parse_cycle_arg(args.cycle)))
    try:
        cycle.check(m)
    except InvalidCycleError as exc:
        _emit(args, {"valid": False, "error": str(exc)}, [f"not a cycle of this map: {exc}"])
        return NEGATIVE
    cls = classify_cycle(m, cycle)
    regions = region_summary(m, cycle)
    missing = sorted(set(m.vertices) - set(cycle.vertices))
    lines = [f"class: {cls}"]
    lines += [f"region: {r['size']} faces, euler characteristic {r['euler']}" for r in regions]
    if missing:
        lines.append(f"not Hamiltonian: cycle omits vertices {{{','.join(missing)}}}")
    _emit(args, {
        "valid": True,
        "cycle": list(cycle.vertices),
        "class": str(cls),
        "regions": regions,
        "hamiltonian": not missing,
        "missing": missing,
    }, lines)
    return NEGATIVE if missing else OK


def cmd_proper(args) -> int:
    m, _ = _load(args.map)
    try:
        g = EdgeSubgraph(m, frozenset(parse_edges_arg(args.edges)))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    verdict = classify_proper_type(g, args.n)
    report = verdict.to_json()
    adm = report["admissibility"]
    lines = [
        f"verdict: {verdict.verdict}",
        f"edges: {adm['edge_count']} (n = {adm['n']}, {'ok' if adm['edge_count_ok'] else 'mismatch'})",
        f"two edges per face: {'yes' if adm['two_per_face'] else 'no'}",
    ]
    lines += [f"  face {f} holds {c}" for f, c in adm["faces_not_two"].items()]
    lines.append(f"single face chain: {'yes' if adm['chain_ok'] else 'no'}")
    lines.append(f"complement components: {verdict.complement_component_count}")
    for comp in report["components"]:
        tree = comp["proper_tree"]
        flag = "" if tree is None else f", proper tree: {'yes' if tree['verdict'] else 'no'}"
        lines.append(f"  {len(comp['vertices'])} vertices{flag}")
        if tree is not None:
            lines.append(f"    tree: {tree['is_tree']}, degree sum {tree['degree_sum']} "
                         f"(target {tree['degree_sum_target']}), face arcs {tree['face_path_subtree_ok']}, "
                         f"face path bound {tree['face_path_length_ok']}")
    _emit(args, report, lines)
    good = verdict.verdict in (ProperType.TYPE_I, ProperType.TYPE_II, ProperType.TYPE_III)
    return OK if good else NEGATIVE


def cmd_hamiltonian(args) -> int:
    m, _ = _load(args.map)
    try:
        req = SearchRequest(target_class=args.target, first=args.first, limit=args.limit, algorithm=args.algo)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        results = find_hamiltonian(m, req, force=args.force)
    except SearchTooLarge as exc:
        raise UsageError(f"{exc} (use --force)") from None
    lines = [f"{r.cycle_class}\t{r.proper_verdict.verdict}\t{','.join(r.cycle.vertices)}" for r in results]
    if not results:
        lines = ["not found"]
    _emit(args, {"results": [r.to_json() for r in results], "count": len(results)}, lines)
    return OK if results else NEGATIVE


def cmd_generate(args) -> int:
    try:
        p_q = tuple(int(x) for x in args.type.split(","))
        m = generate_equivelar_torus(p_q, args.rows, args.cols, args.shift)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    header = f"# {{{args.type}}} torus, rows {args.rows}, cols {args.cols}, shift {args.shift}\n"
    if args.output:
        Path(args.output).write_text(header + m.to_text(), encoding="utf-8")
    else:
        sys.stdout.write(header + m.to_text())
    return OK


def cmd_audit(args) -> int:
    report = run_audit(args.fixtures)
    lines = [f"{c.status:<12} {c.name}" + (f": {c.detail}" if c.detail else "") for c in report.claims]
    lines.append(" ".join(f"{k}={v}" for k, v in report.to_json()["counts"].items()))
    _emit(args, {k: v for k, v in report.to_json().items() if k != "schema"}, lines)
    return OK if report.ok else NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyham", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text, mapfile=True, json_flag=True):
        p = sub.add_parser(name, help=help_text)
        if mapfile:
            p.add_argument("map", help="map file")
        if json_flag:
            p.add_argument("--json", action="store_true", help="machine readable output")
        p.set_defaults(func=func)
        return p

    command("validate", cmd_validate, "check the closed-surface and polyhedral conditions")
    command("info", cmd_info, "f-vector, Euler characteristic, type, orientability")

    p = command("dual", cmd_dual, "write the dual map", json_flag=False)
    p.add_argument("-o", "--output", help="write the dual map here instead of stdout")
    p.add_argument("--table", help="write the face to dual vertex table (TSV) here")
    p.add_argument("--labels", help="TSV table naming the dual vertices")

    p = command("classify", cmd_classify, "classify a cycle by cutting along it")
    p.add_argument("--cycle", required=True, help="comma separated vertices; quote odd tokens with backticks")

    p = command("proper", cmd_proper, "proper-graph verdict for an edge set of a dual map")
    p.add_argument("--edges", required=True, help='comma separated edges, e.g. "v1-v2,v3-v8"')
    p.add_argument("--n", type=int, required=True, help="number of faces of the dual map (vertices of the primal)")

    p = command("hamiltonian", cmd_hamiltonian, "find Hamiltonian cycles")
    p.add_argument("--class", dest="target", default="any", choices=[t.value for t in TargetClass])
    p.add_argument("--algo", default="enumerate", choices=[a.value for a in Algorithm])
    which = p.add_mutually_exclusive_group()
    which.add_argument("--first", action="store_true", help="stop at the first hit")
    which.add_argument("--all", action="store_true", help="report every hit (default)")
    p.add_argument("--limit", type=int, help="stop after this many hits")
    p.add_argument("--force", action="store_true", help="search maps above the size guard")

    gen = sub.add_parser("generate", help="generate maps")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    p = gen_sub.add_parser("torus", help="equivelar torus from a grid quotient")
    p.add_argument("--type", default="3,6", choices=["3,6", "4,4", "6,3"])
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("-o", "--output", help="write here instead of stdout")
    p.set_defaults(func=cmd_generate)

    p = command("audit", cmd_audit, "replay the shipped worked examples", mapfile=False)
    p.add_argument("--fixtures", type=Path, help="directory holding the fixture files")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError, KeyError) as exc:
        # MapError and InvalidCycleError are ValueErrors
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
