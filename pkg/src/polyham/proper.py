"""Admissible and proper graphs in a dual map, and proper trees.

Every check here works on an :class:`EdgeSubgraph` of the dual map ``M`` of
some primal map ``K``; ``n`` is always the number of vertices of ``K``, which
equals the number of faces of ``M``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .dual import EdgeSubgraph, face_chains, face_counts
from .surface import Edge, SurfaceMap, Vertex, edge_key


class ProperType(str, enum.Enum):
    TYPE_I = "type-I"
    TYPE_II = "type-II"
    TYPE_III = "type-III"
    NOT_ADMISSIBLE = "not-admissible"
    ANOMALOUS = "anomalous"

    def __str__(self):
        return self.value


@dataclass
class AdmissibilityReport:
    edge_count: int
    n: int
    face_counts: Dict[int, int]
    face_chain: Optional[List[int]]
    chain_count: Optional[int]

    @property
    def edge_count_ok(self) -> bool:
        return self.edge_count == self.n

    @property
    def two_per_face(self) -> bool:
        return all(c == 2 for c in self.face_counts.values())

    @property
    def chain_ok(self) -> bool:
        return self.face_chain is not None

    @property
    def admissible(self) -> bool:
        return self.edge_count_ok and self.two_per_face and self.chain_ok

    def to_json(self, host: SurfaceMap) -> dict:
        bad = {" ".join(host.faces[i]): c for i, c in sorted(self.face_counts.items()) if c != 2}
        return {
            "admissible": self.admissible,
            "edge_count": self.edge_count,
            "n": self.n,
            "edge_count_ok": self.edge_count_ok,
            "two_per_face": self.two_per_face,
            "faces_not_two": bad,
            "chain_count": self.chain_count,
            "chain_ok": self.chain_ok,
            "face_chain": None if self.face_chain is None else [" ".join(host.faces[i]) for i in self.face_chain],
        }


@dataclass
class ProperTreeReport:
    is_tree: bool
    vertex_count: int
    degree_sum: int
    degree_sum_target: int
    face_path_subtree_ok: bool
    face_path_length_ok: bool

    @property
    def degree_sum_ok(self) -> bool:
        return self.degree_sum == self.degree_sum_target

    @property
    def verdict(self) -> bool:
        return self.is_tree and self.degree_sum_ok and self.face_path_subtree_ok and self.face_path_length_ok

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "is_tree": self.is_tree,
            "vertex_count": self.vertex_count,
            "degree_sum": self.degree_sum,
            "degree_sum_target": self.degree_sum_target,
            "face_path_subtree_ok": self.face_path_subtree_ok,
            "face_path_length_ok": self.face_path_length_ok,
        }


@dataclass
class ProperTypeVerdict:
    admissibility: AdmissibilityReport
    components: List[EdgeSubgraph]
    tree_flags: List[Optional[ProperTreeReport]] = field(default_factory=list)
    verdict: ProperType = ProperType.NOT_ADMISSIBLE

    @property
    def complement_component_count(self) -> int:
        return len(self.components)

    def to_json(self) -> dict:
        host = self.components[0].host
        return {
            "verdict": str(self.verdict),
            "admissibility": self.admissibility.to_json(host),
            "complement_component_count": self.complement_component_count,
            "components": [
                {
                    "vertices": sorted(c.vertices),
                    "edges": [list(e) for e in c.sorted_edges()],
                    "proper_tree": None if t is None else t.to_json(),
                }
                for c, t in zip(self.components, self.tree_flags)
            ],
        }


def check_admissible(g: EdgeSubgraph, n: int) -> AdmissibilityReport:
    counts = face_counts(g)
    chains = face_chains(g)
    chain = None
    if chains is not None and len(chains) == 1 and len(chains[0]) == n:
        chain = chains[0]
    return AdmissibilityReport(
        edge_count=len(g.edges),
        n=n,
        face_counts=dict(enumerate(counts)),
        face_chain=chain,
        chain_count=None if chains is None else len(chains),
    )


def complement_components(g: EdgeSubgraph) -> List[EdgeSubgraph]:
    """Components of (all host vertices, host edges minus ``g``), singletons included."""
    m = g.host
    parent = {v: v for v in m.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    rest = [e for e in m.edges if e not in g.edges]
    for a, b in rest:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: Dict[Vertex, List[Vertex]] = {}
    for v in m.vertices:
        groups.setdefault(find(v), []).append(v)
    edges_of: Dict[Vertex, List[Edge]] = {r: [] for r in groups}
    for e in rest:
        edges_of[find(e[0])].append(e)
    comps = []
    for root in sorted(groups, key=lambda r: min(groups[r])):
        es = frozenset(edges_of[root])
        iso = frozenset(groups[root]) if not es else frozenset()
        comps.append(EdgeSubgraph(m, es, iso))
    return comps


def _is_tree(t: EdgeSubgraph) -> bool:
    verts = t.vertices
    if not verts or len(t.edges) != len(verts) - 1:
        return False
    adj = {v: [] for v in verts}
    for a, b in t.edges:
        adj[a].append(b)
        adj[b].append(a)
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(verts)


def _face_conditions(t: EdgeSubgraph) -> tuple:
    m = t.host
    verts = t.vertices
    subtree_ok = True
    length_ok = True
    for face in m.faces:
        q = len(face)
        in_tree = [edge_key(face[i], face[(i + 1) % q]) in t.edges for i in range(q)]
        # longest run of consecutive tree edges along the boundary
        if all(in_tree):
            length_ok = False
        else:
            start = in_tree.index(False)
            run = best = 0
            for k in range(1, q + 1):
                if in_tree[(start + k) % q]:
                    run += 1
                    best = max(best, run)
                else:
                    run = 0
            if best > q - 2:
                length_ok = False
        pos = [i for i, v in enumerate(face) if v in verts]
        for x in range(len(pos)):
            for y in range(x + 1, len(pos)):
                i, j = pos[x], pos[y]
                arc1 = all(in_tree[k % q] for k in range(i, j))
                arc2 = all(in_tree[k % q] for k in range(j, i + q))
                if not (arc1 or arc2):
                    subtree_ok = False
    return subtree_ok, length_ok


def check_proper_tree(t: EdgeSubgraph, n: int) -> ProperTreeReport:
    m = t.host
    verts = t.vertices
    k = len(verts)
    is_tree = _is_tree(t)
    degree_sum = sum(m.degree(v) for v in verts)
    target = n + 2 * (k - 1)
    if is_tree:
        # equivalent form: exactly n edge ends leave the tree
        outside = sum(1 for v in verts for w in m.neighbors[v] if edge_key(v, w) not in t.edges)
        assert (degree_sum == target) == (outside == n)
    subtree_ok, length_ok = _face_conditions(t)
    return ProperTreeReport(is_tree, k, degree_sum, target, subtree_ok, length_ok)


def classify_proper_type(g: EdgeSubgraph, n: int) -> ProperTypeVerdict:
    adm = check_admissible(g, n)
    comps = complement_components(g)
    flags: List[Optional[ProperTreeReport]] = [None] * len(comps)
    if len(comps) == 2:
        flags = [check_proper_tree(c, n) for c in comps]
    if not adm.admissible:
        verdict = ProperType.NOT_ADMISSIBLE
    elif len(comps) == 1:
        verdict = ProperType.TYPE_I
    elif len(comps) == 2:
        # two proper trees only happens on the sphere; still type II
        verdict = ProperType.TYPE_II if any(f.verdict for f in flags) else ProperType.TYPE_III
    else:
        verdict = ProperType.ANOMALOUS
    return ProperTypeVerdict(adm, comps, flags, verdict)


def tree_to_type2_graph(t: EdgeSubgraph, n: int) -> EdgeSubgraph:
    """Edges that touch the tree without belonging to it."""
    if not check_proper_tree(t, n).verdict:
        raise ValueError("not a proper tree")
    m = t.host
    verts = t.vertices
    edges = frozenset(e for e in m.edges if (e[0] in verts or e[1] in verts) and e not in t.edges)
    return EdgeSubgraph(m, edges)
