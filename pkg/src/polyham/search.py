"""Hamiltonian cycle search.

Three independent routes are provided:

* :func:`enumerate_hamiltonian_cycles` - plain backtracking in the edge
  graph; used as ground truth.
* :func:`subset_search` - chooses edges of the dual map so that every dual
  face holds exactly two of them and the faces link into one chain, then
  classifies the result through the proper-graph type of the choice.
* :func:`disk_grow_search` - grows a disk of faces, closes it into a
  non-contractible cycle and stretches that cycle over further faces.

:func:`construct_proper_tree` builds a proper tree touching every face of the
dual of a triangulation, which yields a contractible Hamiltonian cycle.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

import networkx as nx

from .dual import (
    CycleSpec,
    DualCorrespondence,
    EdgeSubgraph,
    build_dual,
    dual_cycle_of_graph,
    dual_graph_of_cycle,
    face_chains,
)
from .proper import ProperType, ProperTypeVerdict, check_proper_tree, classify_proper_type, tree_to_type2_graph
from .surface import Edge, SurfaceMap, Vertex, cycle_edges, edge_key, equivelar_type, require_surface
from .topology import CycleClass, classify_cycle, region_summary

MAX_EDGES = 60

DICTIONARY = {
    ProperType.TYPE_I: CycleClass.NON_SEPARATING,
    ProperType.TYPE_II: CycleClass.CONTRACTIBLE,
    ProperType.TYPE_III: CycleClass.NC_SEPARATING,
}


class SearchTooLarge(ValueError):
    pass


class TargetClass(str, enum.Enum):
    ANY = "any"
    CONTRACTIBLE = "contractible"
    NON_SEPARATING = "non-separating"
    NC_SEPARATING = "nc-separating"

    def accepts(self, cls: CycleClass) -> bool:
        if self is TargetClass.ANY:
            return True
        return cls is _TARGET_CLASS[self]


_TARGET_CLASS = {
    TargetClass.CONTRACTIBLE: CycleClass.CONTRACTIBLE,
    TargetClass.NON_SEPARATING: CycleClass.NON_SEPARATING,
    TargetClass.NC_SEPARATING: CycleClass.NC_SEPARATING,
}


class Algorithm(str, enum.Enum):
    ENUMERATE = "enumerate"
    DUAL_SUBSET = "dual-subset"
    DISK_GROW = "disk-grow"


@dataclass(frozen=True)
class SearchRequest:
    target_class: TargetClass = TargetClass.ANY
    first: bool = False
    limit: Optional[int] = None
    algorithm: Algorithm = Algorithm.ENUMERATE

    def __post_init__(self):
        object.__setattr__(self, "target_class", TargetClass(self.target_class))
        object.__setattr__(self, "algorithm", Algorithm(self.algorithm))
        if self.algorithm is Algorithm.DISK_GROW and self.target_class is TargetClass.CONTRACTIBLE:
            raise ValueError("disk-grow only looks for non-contractible cycles")
        if self.limit is not None and self.limit < 1:
            raise ValueError("limit must be positive")

    @property
    def max_results(self) -> Optional[int]:
        return 1 if self.first else self.limit


@dataclass
class HamiltonianResult:
    cycle: CycleSpec
    cycle_class: CycleClass
    dual_graph: EdgeSubgraph
    proper_verdict: ProperTypeVerdict
    regions: List[dict] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return DICTIONARY.get(self.proper_verdict.verdict) is self.cycle_class

    def to_json(self) -> dict:
        return {
            "cycle": list(self.cycle.vertices),
            "class": str(self.cycle_class),
            "dual_edges": [list(e) for e in self.dual_graph.sorted_edges()],
            "proper_type": str(self.proper_verdict.verdict),
            "regions": [dict(r) for r in self.regions],
        }


def analyze_cycle(corr: DualCorrespondence, cycle: CycleSpec) -> HamiltonianResult:
    """Classify a cycle both directly and through its dual graph."""
    k = corr.primal
    cycle = cycle.canonical()
    g = dual_graph_of_cycle(cycle, corr)
    return HamiltonianResult(
        cycle=cycle,
        cycle_class=classify_cycle(k, cycle),
        dual_graph=g,
        proper_verdict=classify_proper_type(g, len(k.vertices)),
        regions=region_summary(k, cycle),
    )


def _guard(m: SurfaceMap, force: bool) -> None:
    if len(m.edges) > MAX_EDGES and not force:
        raise SearchTooLarge(f"map has {len(m.edges)} edges (> {MAX_EDGES}); pass force=True to search anyway")


# plain backtracking


def _extend(adj, path, on_path, n) -> Iterator[Tuple[Vertex, ...]]:
    start = path[0]
    v = path[-1]
    if len(path) == n:
        # anchor at the smallest vertex and keep one of the two directions
        if start in adj[v] and path[1] < path[-1]:
            yield tuple(path)
        return
    for w in adj[v]:
        if w in on_path:
            continue
        path.append(w)
        on_path.add(w)
        yield from _extend(adj, path, on_path, n)
        on_path.discard(w)
        path.pop()


def _branch(m: SurfaceMap, second: Vertex) -> List[Tuple[Vertex, ...]]:
    adj = {v: sorted(m.neighbors[v]) for v in m.vertices}
    start = m.vertices[0]
    return list(_extend(adj, [start, second], {start, second}, len(m.vertices)))


def enumerate_hamiltonian_cycles(m: SurfaceMap, force: bool = False, workers: int = 1) -> Iterator[CycleSpec]:
    """Every Hamiltonian cycle of the edge graph once, in ascending canonical order."""
    require_surface(m)
    _guard(m, force)
    start = m.vertices[0]
    seconds = sorted(m.neighbors[start])
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_branch, [m] * len(seconds), seconds))
        for batch in batches:
            for path in batch:
                yield CycleSpec(path)
        return
    adj = {v: sorted(m.neighbors[v]) for v in m.vertices}
    for s in seconds:
        for path in _extend(adj, [start, s], {start, s}, len(m.vertices)):
            yield CycleSpec(path)


def enumerate_classified(m: SurfaceMap, req: SearchRequest = SearchRequest(), force: bool = False) -> Iterator[HamiltonianResult]:
    _, corr = build_dual(m)
    found = 0
    for cycle in enumerate_hamiltonian_cycles(m, force=force):
        result = analyze_cycle(corr, cycle)
        if not req.target_class.accepts(result.cycle_class):
            continue
        yield result
        found += 1
        if req.max_results is not None and found >= req.max_results:
            return


# dual edge-subset search


def contractible_prefilter(n: int, p: int) -> bool:
    """False when no disk of p-gons can have all n vertices on its boundary."""
    return (n - 2) % (p - 2) == 0


def _edge_order(dual: SurfaceMap) -> List[Edge]:
    # walk faces breadth-first so that each face's edges are decided together
    order, seen_e, seen_f = [], set(), {0}
    queue = [0]
    while queue:
        fi = queue.pop(0)
        for e in dual.face_edges(fi):
            if e not in seen_e:
                seen_e.add(e)
                order.append(e)
            other = dual.other_face(e, fi)
            if other not in seen_f:
                seen_f.add(other)
                queue.append(other)
    return order


def admissible_subsets(dual: SurfaceMap, prune_subtours: bool = True) -> Iterator[FrozenSet[Edge]]:
    """Edge sets of the dual with exactly two edges on every face, forming one chain.

    Backtracks over the dual edges keeping a per-face counter; a branch dies
    as soon as a face holds three chosen edges or can no longer reach two.
    With ``prune_subtours`` a choice that would close a chain of faces
    shorter than the whole map is cut immediately; otherwise such choices
    are only rejected at the leaves by chain decomposition.
    """
    nf = len(dual.faces)
    order = _edge_order(dual)
    faces_of = [dual.edge_faces[e] for e in order]
    count = [0] * nf
    remaining = [0] * nf
    for fs in faces_of:
        for fi in fs:
            remaining[fi] += 1
    end = list(range(nf))  # other end of the face path through each endpoint
    size = [1] * nf
    chosen: List[Edge] = []

    def rec(i):
        if i == len(order):
            if prune_subtours:
                yield frozenset(chosen)
                return
            g = EdgeSubgraph(dual, frozenset(chosen))
            chains = face_chains(g)
            if chains is not None and len(chains) == 1:
                yield g.edges
            return
        fa, fb = faces_of[i]
        remaining[fa] -= 1
        remaining[fb] -= 1
        if count[fa] < 2 and count[fb] < 2:
            ea, eb = end[fa], end[fb]
            closing = ea == fb
            if not (prune_subtours and closing and size[fa] != nf):
                count[fa] += 1
                count[fb] += 1
                chosen.append(order[i])
                saved = (end[ea], end[eb], size[ea], size[eb])
                if not closing:
                    end[ea], end[eb] = eb, ea
                    size[ea] = size[eb] = size[ea] + size[eb]
                yield from rec(i + 1)
                end[ea], end[eb], size[ea], size[eb] = saved
                chosen.pop()
                count[fa] -= 1
                count[fb] -= 1
        if count[fa] + remaining[fa] >= 2 and count[fb] + remaining[fb] >= 2:
            yield from rec(i + 1)
        remaining[fa] += 1
        remaining[fb] += 1

    yield from rec(0)


def subset_search(k: SurfaceMap, req: SearchRequest = SearchRequest(), force: bool = False) -> Iterator[HamiltonianResult]:
    """Hamiltonian cycles of ``k`` found through admissible subgraphs of its dual.

    The class reported is the one read off the proper-graph type; the direct
    topological class is attached as a cross-check (see
    :attr:`HamiltonianResult.consistent`).
    """
    require_surface(k)
    _guard(k, force)
    n = len(k.vertices)
    et = equivelar_type(k)
    if req.target_class is TargetClass.CONTRACTIBLE and et is not None and not contractible_prefilter(n, et.p):
        return
    dual, corr = build_dual(k)
    found = 0
    for edges in admissible_subsets(dual):
        g = EdgeSubgraph(dual, edges)
        verdict = classify_proper_type(g, n)
        cls = DICTIONARY.get(verdict.verdict)
        if cls is None:
            # only reachable if the component count goes wrong
            cycle = dual_cycle_of_graph(g, corr)
            yield HamiltonianResult(cycle, classify_cycle(k, cycle), g, verdict, region_summary(k, cycle))
            continue
        if not req.target_class.accepts(cls):
            continue
        cycle = dual_cycle_of_graph(g, corr)
        yield HamiltonianResult(cycle, classify_cycle(k, cycle), g, verdict, region_summary(k, cycle))
        found += 1
        if req.max_results is not None and found >= req.max_results:
            return


# disk growing


def _as_cycle(edges: FrozenSet[Edge]) -> Optional[Tuple[Vertex, ...]]:
    adj: Dict[Vertex, List[Vertex]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    if len(adj) < 3 or any(len(x) != 2 for x in adj.values()):
        return None
    start = min(adj)
    seq = [start]
    prev, cur = start, adj[start][0]
    while cur != start:
        seq.append(cur)
        prev, cur = cur, adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
    return tuple(seq) if len(seq) == len(adj) else None


class _Budget(Exception):
    pass


def disk_grow_search(k: SurfaceMap, req: SearchRequest = SearchRequest(algorithm=Algorithm.DISK_GROW),
                     max_states: int = 200_000) -> Optional[HamiltonianResult]:
    """Look for a non-contractible Hamiltonian cycle by growing a disk of faces.

    Phase one adds faces that meet the disk in exactly one boundary edge and
    bring ``p - 2`` fresh vertices, so the boundary stays a simple cycle.
    From any disk, a face meeting it in some other way closes a band; each
    simple cycle on the boundary of disk plus face is then stretched by
    swapping a shared boundary path for the longer side of a neighbouring
    face until it is Hamiltonian.  Choices are backtracked in canonical
    order.  ``None`` means nothing was found within ``max_states`` visited
    states, not that no such cycle exists.
    """
    require_surface(k)
    if req.target_class is TargetClass.CONTRACTIBLE:
        raise ValueError("disk-grow only looks for non-contractible cycles")
    n = len(k.vertices)
    face_edge_sets = [frozenset(k.face_edges(i)) for i in range(len(k.faces))]
    _, corr = build_dual(k)
    seen_disks = set()
    seen_cycles = set()
    states = [0]

    def tick():
        states[0] += 1
        if states[0] > max_states:
            raise _Budget

    def accept(edges):
        seq = _as_cycle(edges)
        cycle = CycleSpec(seq)
        cls = classify_cycle(k, cycle)
        if cls is CycleClass.CONTRACTIBLE:
            return None
        if req.target_class is not TargetClass.ANY and not req.target_class.accepts(cls):
            return None
        return analyze_cycle(corr, cycle)

    def stretch(edges):
        if edges in seen_cycles:
            return None
        seen_cycles.add(edges)
        tick()
        verts = {v for e in edges for v in e}
        if len(verts) == n:
            return accept(edges)
        for fi, fe in enumerate(face_edge_sets):
            shared = edges & fe
            if not shared:
                continue
            new = edges ^ fe
            if len(new) <= len(edges) or _as_cycle(new) is None:
                continue
            found = stretch(new)
            if found is not None:
                return found
        return None

    def close(disk, boundary, covered):
        for fi, fe in enumerate(face_edge_sets):
            if fi in disk or len(covered & set(k.faces[fi])) < 2:
                continue
            fresh = set(k.faces[fi]) - covered
            if len(boundary & fe) == 1 and len(fresh) == len(fe) - 2:
                continue  # ordinary growth step, handled by grow()
            union_boundary = boundary ^ fe
            graph = nx.Graph(list(union_boundary))
            for cyc in sorted(nx.simple_cycles(graph)):
                if len(cyc) < 3:
                    continue
                found = stretch(frozenset(cycle_edges(cyc)))
                if found is not None:
                    return found
        return None

    def grow(disk, boundary, covered):
        if disk in seen_disks:
            return None
        seen_disks.add(disk)
        tick()
        for fi, fe in enumerate(face_edge_sets):
            if fi in disk:
                continue
            shared = boundary & fe
            fresh = set(k.faces[fi]) - covered
            if len(shared) != 1 or len(fresh) != len(fe) - 2:
                continue
            found = grow(disk | {fi}, boundary ^ fe, covered | fresh)
            if found is not None:
                return found
        return close(disk, boundary, covered)

    try:
        for start in range(len(k.faces)):
            found = grow(frozenset([start]), face_edge_sets[start], frozenset(k.faces[start]))
            if found is not None:
                return found
    except _Budget:
        return None
    return None


# proper trees from disk growth in the dual


def construct_proper_tree(dual: SurfaceMap, n: int, max_states: int = 200_000) -> Optional[EdgeSubgraph]:
    """A proper tree of ``dual`` touching all of its faces, or ``None``.

    The tree is grown one vertex at a time.  A vertex ``x`` joined to the
    tree by the edge ``tx`` may be added only when every face at ``x`` not
    containing ``tx`` is still untouched; in primal terms this glues one more
    face onto a disk along a single boundary edge, so the disk never acquires
    interior vertices and the tree stays proper.
    """
    seen = set()
    states = [0]
    nf = len(dual.faces)
    faces_at = {v: frozenset(dual.vertex_faces[v]) for v in dual.vertices}

    def induced(verts):
        edges = frozenset(e for e in dual.edges if e[0] in verts and e[1] in verts)
        return EdgeSubgraph(dual, edges, frozenset() if edges else frozenset(verts))

    def rec(verts, touched):
        if verts in seen:
            return None
        seen.add(verts)
        states[0] += 1
        if states[0] > max_states:
            raise _Budget
        if len(touched) == nf:
            t = induced(verts)
            return t if check_proper_tree(t, n).verdict else None
        for x in sorted({w for v in verts for w in dual.neighbors[v]} - verts):
            for t in sorted(dual.neighbors[x] & verts):
                side = set(dual.edge_faces[edge_key(t, x)])
                if any(f in touched for f in faces_at[x] - side):
                    continue
                found = rec(verts | {x}, touched | faces_at[x])
                if found is not None:
                    return found
        return None

    try:
        for v0 in dual.vertices:
            found = rec(frozenset([v0]), faces_at[v0])
            if found is not None:
                return found
    except _Budget:
        return None
    return None


def contractible_cycle_from_tree(corr: DualCorrespondence, tree: EdgeSubgraph) -> CycleSpec:
    g = tree_to_type2_graph(tree, len(corr.primal.vertices))
    return dual_cycle_of_graph(g, corr)


def find_hamiltonian(k: SurfaceMap, req: SearchRequest, force: bool = False) -> List[HamiltonianResult]:
    """Run the requested algorithm and collect its results."""
    if req.algorithm is Algorithm.DISK_GROW:
        found = disk_grow_search(k, req)
        return [] if found is None else [found]
    if req.algorithm is Algorithm.DUAL_SUBSET:
        return list(subset_search(k, req, force=force))
    return list(enumerate_classified(k, req, force=force))
