"""Replay the worked examples shipped as fixtures and report what holds.

Each claim ends up ``pass``, ``fail`` (our code disagrees with a claim that
should hold) or ``discrepancy`` (the published example is internally
inconsistent; the detail names the failed condition).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, List, Optional, Tuple

from .dual import (
    CycleSpec,
    EdgeSubgraph,
    build_dual,
    correspondences_to,
    dual_cycle_of_graph,
    dual_graph_of_cycle,
    read_label_table,
)
from .proper import ProperType, classify_proper_type
from .surface import SurfaceMap, check_polyhedral, equivelar_type, euler_characteristic, is_isomorphic, parse_map
from .topology import CycleClass, classify_cycle

PASS, FAIL, DISCREPANCY = "pass", "fail", "discrepancy"

E1 = [(f"v{i}", f"v{5 + i}") for i in (1, 3, 5, 7, 9)] + [(f"v{i}", f"v{9 + i}") for i in (2, 4)]
E2 = [("v1", "v2"), ("v3", "v8"), ("v4", "v5"), ("v10", "v11"), ("v11", "v12"), ("v12", "v13"), ("v13", "v14")]
V2 = {f"v{i}" for i in (1, 2, 3, 4, 5, 8, 10, 11, 12, 13, 14)}
C1 = tuple(f"u{i}" for i in range(11, 18))
C2 = ("u11", "u14", "u15", "u13", "u17", "u12", "u16")

E3 = [tuple(x.split("-")) for x in (
    "a1-c6 a9-b1 b1-c1 b2-b3 b3-b4 c4-c5 e9-f1 e8-d8 "
    "d7-d8 c7-c8 e4-e5 e5-e6 d1-e7 d2-d3 d2-e2 e1-e2").split()]
V3_PRINTED = ("a1 c6 a9 b1 c1 b2 b3 b4 c4 c5 e9 f1 e8 d8 d7 c7 c8 "
              "e4 e5 e6 d1 e7 d2 d3 d2 e2 e1").split()
C3 = tuple("1 6 a b 7 c 5 k j f l i d e h g".split())


@dataclass
class Claim:
    name: str
    status: str
    detail: str = ""

    def to_json(self) -> dict:
        return {"claim": self.name, "status": self.status, "detail": self.detail}


@dataclass
class AuditReport:
    claims: List[Claim] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "", bad: str = FAIL) -> None:
        self.claims.append(Claim(name, PASS if ok else bad, detail))

    def attempt(self, name: str, thunk: Callable[[], Tuple[bool, str]], bad: str = FAIL) -> None:
        """Like :meth:`add`, but an exception while checking counts as ``fail``."""
        try:
            ok, detail = thunk()
        except (ValueError, KeyError) as exc:
            self.claims.append(Claim(name, FAIL, f"{type(exc).__name__}: {exc}"))
            return
        self.add(name, ok, detail, bad)

    def count(self, status: str) -> int:
        return sum(c.status == status for c in self.claims)

    @property
    def ok(self) -> bool:
        return self.count(FAIL) == 0

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "ok": self.ok,
            "counts": {s: self.count(s) for s in (PASS, FAIL, DISCREPANCY)},
            "claims": [c.to_json() for c in self.claims],
        }


def fixture_text(name: str, directory: Optional[Path] = None) -> str:
    if directory is not None:
        return (Path(directory) / name).read_text(encoding="utf-8")
    return resources.files("polyham").joinpath("fixtures", name).read_text(encoding="utf-8")


def load_fixture(name: str, directory: Optional[Path] = None) -> SurfaceMap:
    return parse_map(fixture_text(name, directory))


def _torus_pair(report: AuditReport, directory) -> None:
    m1 = load_fixture("m1.map", directory)
    k1 = load_fixture("k1.map", directory)
    report.add("m1: f-vector (7, 21, 14)", tuple(m1.f_vector) == (7, 21, 14), str(tuple(m1.f_vector)))
    report.add("m1: type {3,6}", equivelar_type(m1) == (3, 6), str(equivelar_type(m1)))
    report.add("k1: type {6,3}", equivelar_type(k1) == (6, 3), str(equivelar_type(k1)))
    for name, m in (("m1", m1), ("k1", k1)):
        report.add(f"{name}: polyhedral", check_polyhedral(m).is_polyhedral)
    report.add("m1 and k1 are dual", is_isomorphic(build_dual(m1)[0], k1))

    dual, corr = build_dual(m1, read_label_table(fixture_text("m1_k1.tsv", directory)))
    report.add("label table turns dual(m1) into k1 exactly", dual == k1)
    n = len(m1.vertices)
    g1 = EdgeSubgraph(k1, frozenset(E1))
    g2 = EdgeSubgraph(k1, frozenset(E2))
    report.add("V1 is every vertex of k1", g1.vertices == set(k1.vertices))
    report.add("V2 as printed is the vertex set of E2", g2.vertices == V2)
    v1 = classify_proper_type(g1, n).verdict
    v2 = classify_proper_type(g2, n).verdict
    report.add("G1 is type-I", v1 is ProperType.TYPE_I, str(v1))
    report.add("G2 is type-II", v2 is ProperType.TYPE_II, str(v2))
    c1 = CycleSpec(C1).canonical()
    c2 = CycleSpec(C2).canonical()

    def dual_cycle_is(g, c):
        got = dual_cycle_of_graph(g, corr)
        return got == c, ",".join(got)

    report.attempt("dual cycle of G1 is C1", lambda: dual_cycle_is(g1, c1))
    report.attempt("dual cycle of G2 is C2", lambda: dual_cycle_is(g2, c2))
    k1c = classify_cycle(m1, c1)
    k2c = classify_cycle(m1, c2)
    report.add("C1 is non-contractible (non-separating)", k1c is CycleClass.NON_SEPARATING, str(k1c))
    report.add("C2 is contractible", k2c is CycleClass.CONTRACTIBLE, str(k2c))


def _double_torus(report: AuditReport, directory) -> None:
    k = load_fixture("k2.map", directory)
    m = load_fixture("k2_dual.map", directory)
    n = len(k.vertices)
    report.add("k2: f-vector (21, 69, 46)", tuple(k.f_vector) == (21, 69, 46), str(tuple(k.f_vector)))
    report.add("k2: Euler characteristic -2", euler_characteristic(k) == -2, str(euler_characteristic(k)))
    report.add("k2: polyhedral", check_polyhedral(k).is_polyhedral)
    corrs = list(correspondences_to(k, m))
    report.add("printed dual is the dual of k2", bool(corrs), f"{len(corrs)} label-compatible correspondences")

    g3 = EdgeSubgraph(m, frozenset(E3))
    derived = sorted(g3.vertices)
    dupes = sorted({v for v in V3_PRINTED if V3_PRINTED.count(v) > 1})
    report.add(
        "V3 as printed is the vertex set of E3",
        set(V3_PRINTED) == set(derived) and not dupes,
        f"{len(V3_PRINTED)} entries listed, {len(set(V3_PRINTED))} distinct, repeated: {dupes}; "
        f"E3 spans {len(derived)} vertices",
        bad=DISCREPANCY,
    )
    verdict = classify_proper_type(g3, n)
    adm = verdict.admissibility
    problems = []
    if not adm.edge_count_ok:
        problems.append(f"|E3| = {adm.edge_count} but n = {n}")
    if not adm.two_per_face:
        bad = sum(c != 2 for c in adm.face_counts.values())
        problems.append(f"{bad} faces do not hold exactly two edges")
    report.add("G3 is type-III", verdict.verdict is ProperType.TYPE_III,
               f"verdict {verdict.verdict}: " + "; ".join(problems), bad=DISCREPANCY)

    c3 = CycleSpec(C3)
    missing = sorted(set(k.vertices) - set(c3.vertices))
    report.add("C3 is Hamiltonian", not missing,
               f"{len(c3)} listed vertices vs n = {n}; omits {{{','.join(missing)}}}", bad=DISCREPANCY)
    c3.check(k)
    cls = classify_cycle(k, c3)
    report.add("C3 is noncontractible separating", cls is CycleClass.NC_SEPARATING,
               f"cutting along C3 gives class {cls}", bad=DISCREPANCY)
    matches = sum(dual_graph_of_cycle(c3, c).edges == g3.edges for c in corrs)
    report.add("E3 is the dual edge set of C3", matches > 0,
               f"holds under {matches} of {len(corrs)} correspondences")

    witness = json.loads(fixture_text("k2_nc_separating.json", directory))
    wc = CycleSpec(witness["cycle"]).check(k)
    wcls = classify_cycle(k, wc)
    _, corr = build_dual(k)
    wtype = classify_proper_type(dual_graph_of_cycle(wc, corr), n).verdict
    report.add(
        "replacement witness: noncontractible separating Hamiltonian cycle on k2",
        wc.is_hamiltonian(k) and wcls is CycleClass.NC_SEPARATING and wtype is ProperType.TYPE_III,
        f"{','.join(wc)}: {wcls}, {wtype}",
    )


def run_audit(directory: Optional[Path] = None) -> AuditReport:
    report = AuditReport()
    _torus_pair(report, directory)
    _double_torus(report, directory)
    return report
