"""Direct topological classification of a cycle by cutting the surface along it.

Cutting is done on the abstract cut surface: every region receives its own
copy of each cycle vertex corner and cycle edge side it borders.  With that
convention the Euler characteristics of the regions add up to that of the
map, and a region is a disk exactly when its characteristic is 1 and its
boundary is the cycle run once.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List

from .dual import CycleSpec, InvalidCycleError
from .surface import Edge, SurfaceMap, face_components


class TopologyError(RuntimeError):
    pass


class CycleClass(str, enum.Enum):
    CONTRACTIBLE = "contractible"
    NON_SEPARATING = "non-separating"
    NC_SEPARATING = "noncontractible-separating"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Region:
    faces: FrozenSet[int]
    boundary_edges: FrozenSet[Edge]

    def __len__(self):
        return len(self.faces)


def regions_of_cycle(m: SurfaceMap, cycle: CycleSpec) -> List[Region]:
    cycle.check(m)
    cut = set(cycle.edges)
    regions = []
    for comp in face_components(m, blocked=cut):
        faces = frozenset(comp)
        border = frozenset(e for e in cut if any(fi in faces for fi in m.edge_faces[e]))
        regions.append(Region(faces, border))
    return regions


def _corner_copies(m: SurfaceMap, cycle: CycleSpec, region: Region) -> Counter:
    """How many fans of each cycle vertex lie in the region."""
    copies = Counter()
    seq = cycle.vertices
    r = len(seq)
    for k, v in enumerate(seq):
        a, b = seq[k - 1], seq[(k + 1) % r]
        nbrs, faces = m.rotation(v)
        i, j = nbrs.index(a), nbrs.index(b)
        d = len(nbrs)
        # faces[i] sits between nbrs[i] and nbrs[i+1]; the two cycle edges
        # split the rotation into two fans
        fan1 = [faces[(i + t) % d] for t in range((j - i) % d)]
        fan2 = [faces[(j + t) % d] for t in range((i - j) % d)]
        for fan in (fan1, fan2):
            if fan[0] in region.faces:
                copies[v] += 1
    return copies


def _check_region(m: SurfaceMap, region: Region, cycle: CycleSpec) -> None:
    if region not in regions_of_cycle(m, cycle):
        raise ValueError("region does not come from cutting along this cycle")


def region_euler_characteristic(m: SurfaceMap, region: Region, cycle: CycleSpec) -> int:
    _check_region(m, region, cycle)
    on_cycle = set(cycle.vertices)
    cut = set(cycle.edges)
    interior_vertices = {v for fi in region.faces for v in m.faces[fi] if v not in on_cycle}
    nv = len(interior_vertices) + sum(_corner_copies(m, cycle, region).values())
    ne = 0
    for fi in region.faces:
        for e in m.face_edges(fi):
            # interior edges are seen from two faces of the region, cut
            # edges get one copy per side
            ne += 2 if e in cut else 1
    return nv - ne // 2 + len(region.faces)


def is_disk(m: SurfaceMap, region: Region, cycle: CycleSpec) -> bool:
    _check_region(m, region, cycle)
    if region.boundary_edges != frozenset(cycle.edges):
        return False
    for e in region.boundary_edges:
        if sum(fi in region.faces for fi in m.edge_faces[e]) != 1:
            return False
    if any(c != 1 for c in _corner_copies(m, cycle, region).values()):
        return False
    return region_euler_characteristic(m, region, cycle) == 1


def classify_cycle(m: SurfaceMap, cycle: CycleSpec) -> CycleClass:
    regions = regions_of_cycle(m, cycle)
    if len(regions) == 1:
        return CycleClass.NON_SEPARATING
    if len(regions) == 2:
        if any(is_disk(m, r, cycle) for r in regions):
            return CycleClass.CONTRACTIBLE
        return CycleClass.NC_SEPARATING
    raise TopologyError(f"cycle cuts the surface into {len(regions)} regions")


def region_summary(m: SurfaceMap, cycle: CycleSpec) -> List[dict]:
    return [
        {"size": len(r), "euler": region_euler_characteristic(m, r, cycle)}
        for r in sorted(regions_of_cycle(m, cycle), key=lambda r: (len(r), sorted(r.faces)))
    ]


def boundary_cycle(m: SurfaceMap, faces: Iterable[int]) -> CycleSpec:
    """The boundary of a union of faces, which must be a single simple cycle."""
    faces = set(faces)
    count = Counter(e for fi in faces for e in m.face_edges(fi))
    border = [e for e, c in count.items() if c == 1 and len(m.edge_faces[e]) == 2]
    adj = {}
    for a, b in border:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    if not adj or any(len(x) != 2 for x in adj.values()):
        raise InvalidCycleError("boundary of the face set is not a simple cycle")
    start = min(adj)
    seq = [start]
    prev, cur = start, min(adj[start])
    while cur != start:
        seq.append(cur)
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        prev, cur = cur, nxt
    if len(seq) != len(adj):
        raise InvalidCycleError("boundary of the face set has several components")
    return CycleSpec(seq).canonical()
