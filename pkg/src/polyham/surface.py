"""Polyhedral maps on closed surfaces given by their cyclic face boundaries.

A map is stored as a sorted tuple of canonical faces.  Everything else
(edges, incidences, vertex rotations) is derived once at construction and
never mutated afterwards, so a :class:`SurfaceMap` can be shared freely
between threads and worker processes.
"""

from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple

Vertex = str
Edge = Tuple[str, str]
Face = Tuple[str, ...]


class MapError(ValueError):
    """Raised when a face list does not describe a usable map."""


class MapParseError(MapError):
    """Malformed map text; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def edge_key(a: Vertex, b: Vertex) -> Edge:
    return (a, b) if a <= b else (b, a)


def canonical_cycle(seq: Sequence[Vertex]) -> Tuple[Vertex, ...]:
    """Lexicographically smallest rotation or reflection of a cyclic sequence."""
    seq = tuple(seq)
    n = len(seq)
    best = seq
    rev = seq[::-1]
    for s in (seq, rev):
        for i in range(n):
            cand = s[i:] + s[:i]
            if cand < best:
                best = cand
    return best


def cycle_edges(seq: Sequence[Vertex]) -> List[Edge]:
    n = len(seq)
    return [edge_key(seq[i], seq[(i + 1) % n]) for i in range(n)]


class FVector(NamedTuple):
    f0: int
    f1: int
    f2: int


class EquivelarType(NamedTuple):
    p: int
    q: int

    def __str__(self):
        return f"{{{self.p},{self.q}}}"


class SurfaceMap:
    """A map on a closed surface, described by its faces.

    Faces are canonicalised (rotation/reflection minimal) and sorted, so two
    maps with the same labelled faces compare equal regardless of how the
    input was written.
    """

    def __init__(self, faces: Iterable[Sequence[Vertex]]):
        canon = []
        for raw in faces:
            face = tuple(str(v) for v in raw)
            if len(face) < 3:
                raise MapError(f"face {face!r} has fewer than 3 vertices")
            if len(set(face)) != len(face):
                raise MapError(f"face {face!r} repeats a vertex")
            canon.append(canonical_cycle(face))
        if not canon:
            raise MapError("map has no faces")
        self.faces: Tuple[Face, ...] = tuple(sorted(canon))

        edge_faces: Dict[Edge, List[int]] = defaultdict(list)
        vertex_faces: Dict[Vertex, List[int]] = defaultdict(list)
        neighbors: Dict[Vertex, set] = defaultdict(set)
        for i, face in enumerate(self.faces):
            for v in face:
                vertex_faces[v].append(i)
            for a, b in cycle_edges(face):
                edge_faces[(a, b)].append(i)
                neighbors[a].add(b)
                neighbors[b].add(a)
        self.vertices: Tuple[Vertex, ...] = tuple(sorted(vertex_faces))
        self.edges: Tuple[Edge, ...] = tuple(sorted(edge_faces))
        self.edge_faces: Dict[Edge, Tuple[int, ...]] = {e: tuple(f) for e, f in edge_faces.items()}
        self.vertex_faces: Dict[Vertex, Tuple[int, ...]] = {v: tuple(f) for v, f in vertex_faces.items()}
        self.neighbors: Dict[Vertex, frozenset] = {v: frozenset(n) for v, n in neighbors.items()}
        self._rotations: Dict[Vertex, Optional[Tuple[Tuple[Vertex, ...], Tuple[int, ...]]]] = {}

    # basic protocol

    def __eq__(self, other):
        return isinstance(other, SurfaceMap) and self.faces == other.faces

    def __hash__(self):
        return hash(self.faces)

    def __repr__(self):
        f0, f1, f2 = self.f_vector
        return f"SurfaceMap(f_vector=({f0}, {f1}, {f2}))"

    def __getstate__(self):
        return {"faces": self.faces}

    def __setstate__(self, state):
        self.__init__(state["faces"])

    @property
    def f_vector(self) -> FVector:
        return FVector(len(self.vertices), len(self.edges), len(self.faces))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors[v])

    def has_edge(self, a: Vertex, b: Vertex) -> bool:
        return edge_key(a, b) in self.edge_faces

    def face_edges(self, index: int) -> List[Edge]:
        return cycle_edges(self.faces[index])

    def other_face(self, e: Edge, index: int) -> int:
        a, b = self.edge_faces[e]
        return b if a == index else a

    def relabel(self, mapping: Mapping[Vertex, Vertex]) -> "SurfaceMap":
        return SurfaceMap([mapping[v] for v in face] for face in self.faces)

    def to_text(self) -> str:
        return "".join(" ".join(face) + "\n" for face in self.faces)

    def rotation(self, v: Vertex) -> Tuple[Tuple[Vertex, ...], Tuple[int, ...]]:
        """Neighbours and faces around ``v`` in cyclic order.

        Returns ``(nbrs, faces)`` where ``faces[i]`` is the face holding the
        corner between ``nbrs[i]`` and ``nbrs[i + 1]``.  Raises
        :class:`MapError` if the corners at ``v`` do not close up into a
        single cycle.
        """
        if v not in self.vertex_faces:
            raise KeyError(f"vertex {v!r} not in map")
        if v not in self._rotations:
            self._rotations[v] = self._compute_rotation(v)
        rot = self._rotations[v]
        if rot is None:
            raise MapError(f"link of vertex {v!r} is not a single cycle")
        return rot

    def _compute_rotation(self, v):
        # corner (prev, next) contributed by each face at v
        corners = {}
        by_nbr = defaultdict(list)
        for fi in self.vertex_faces[v]:
            face = self.faces[fi]
            k = face.index(v)
            a, b = face[k - 1], face[(k + 1) % len(face)]
            corners[fi] = (a, b)
            by_nbr[a].append(fi)
            by_nbr[b].append(fi)
        if any(len(fs) != 2 for fs in by_nbr.values()):
            return None
        start = min(by_nbr)
        nbrs = [start]
        faces = []
        used = set()
        cur = start
        while True:
            nxt_face = next((f for f in by_nbr[cur] if f not in used), None)
            if nxt_face is None:
                break
            used.add(nxt_face)
            faces.append(nxt_face)
            a, b = corners[nxt_face]
            cur = b if a == cur else a
            if cur == start:
                break
            nbrs.append(cur)
        if cur != start or len(used) != len(corners):
            return None
        return tuple(nbrs), tuple(faces)


# parsing


def _strip_comment(line: str) -> str:
    # '#' opens a comment only at the start of a token, so labels like F#3 survive
    for i, ch in enumerate(line):
        if ch == "#" and (i == 0 or line[i - 1].isspace()):
            return line[:i]
    return line


def parse_map(text: str, strict: bool = True) -> SurfaceMap:
    """Parse the text map format: one face per line, ``#`` comments.

    With ``strict`` (the default) the local surface condition is enforced
    as well: every edge must lie in exactly two faces.
    """
    faces = []
    seen: Dict[Face, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        tokens = []
        col = 0
        for tok in line.split():
            col = line.index(tok, col) + 1
            tokens.append((tok, col))
            col += len(tok) - 1
        if len(tokens) < 3:
            raise MapParseError(f"face has {len(tokens)} vertices, need at least 3", lineno, tokens[0][1])
        names = set()
        for tok, c in tokens:
            if tok in names:
                raise MapParseError(f"vertex {tok!r} repeated in face", lineno, c)
            names.add(tok)
        face = tuple(t for t, _ in tokens)
        key = canonical_cycle(face)
        if key in seen:
            raise MapParseError(f"duplicate face (same as line {seen[key]})", lineno, tokens[0][1])
        seen[key] = lineno
        faces.append(face)
    if not faces:
        raise MapParseError("no faces", 1, 1)
    m = SurfaceMap(faces)
    if strict:
        for e, fs in m.edge_faces.items():
            if len(fs) != 2:
                line = seen[m.faces[fs[0]]]
                raise MapParseError(f"edge {e[0]}-{e[1]} lies in {len(fs)} face(s), expected 2", line, 1)
    return m


def load_map(path, strict: bool = True) -> SurfaceMap:
    with open(path, encoding="utf-8") as fh:
        return parse_map(fh.read(), strict=strict)


# validation and invariants


@dataclass
class SurfaceReport:
    edges_ok: bool
    bad_edges: Dict[Edge, int]
    links_ok: bool
    bad_vertices: List[Vertex]
    connected: bool
    face_components: int
    euler_ok: bool

    @property
    def ok(self) -> bool:
        return self.edges_ok and self.links_ok and self.connected and self.euler_ok

    def failures(self) -> List[str]:
        out = []
        if not self.edges_ok:
            out += [f"edge {a}-{b} lies in {c} face(s)" for (a, b), c in sorted(self.bad_edges.items())]
        if not self.links_ok:
            out += [f"link of vertex {v} is not a single cycle" for v in self.bad_vertices]
        if not self.connected:
            out.append(f"face-adjacency graph has {self.face_components} components")
        if not self.euler_ok:
            out.append("Euler characteristic exceeds 2")
        return out

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "edges_ok": self.edges_ok,
            "links_ok": self.links_ok,
            "connected": self.connected,
            "face_components": self.face_components,
            "euler_ok": self.euler_ok,
            "failures": self.failures(),
        }


def face_components(m: SurfaceMap, blocked: Iterable[Edge] = ()) -> List[List[int]]:
    """Components of the face-adjacency graph, crossing only unblocked edges."""
    blocked = set(blocked)
    adj = defaultdict(list)
    for e, fs in m.edge_faces.items():
        if e in blocked or len(fs) != 2:
            continue
        a, b = fs
        adj[a].append(b)
        adj[b].append(a)
    seen = set()
    comps = []
    for start in range(len(m.faces)):
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def validate_surface(m: SurfaceMap) -> SurfaceReport:
    bad_edges = {e: len(fs) for e, fs in m.edge_faces.items() if len(fs) != 2}
    bad_vertices = []
    for v in m.vertices:
        try:
            m.rotation(v)
        except MapError:
            bad_vertices.append(v)
    ncomp = len(face_components(m))
    return SurfaceReport(
        edges_ok=not bad_edges,
        bad_edges=bad_edges,
        links_ok=not bad_vertices,
        bad_vertices=bad_vertices,
        connected=ncomp == 1,
        face_components=ncomp,
        euler_ok=euler_characteristic(m) <= 2,
    )


def require_surface(m: SurfaceMap) -> None:
    report = validate_surface(m)
    if not report.ok:
        raise MapError("not a closed surface: " + "; ".join(report.failures()))


@dataclass
class PolyhedralityReport:
    violations: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def is_polyhedral(self) -> bool:
        return not self.violations


def check_polyhedral(m: SurfaceMap) -> PolyhedralityReport:
    """Any two faces must meet in nothing, one vertex, or one common edge."""
    violations = []
    nf = len(m.faces)
    vsets = [set(f) for f in m.faces]
    edge_sets = [set(m.face_edges(i)) for i in range(nf)]
    for i in range(nf):
        for j in range(i + 1, nf):
            common = vsets[i] & vsets[j]
            if len(common) <= 1:
                continue
            if len(common) == 2:
                e = edge_key(*common)
                if e in edge_sets[i] and e in edge_sets[j]:
                    continue
            violations.append((i, j))
    return PolyhedralityReport(violations)


def euler_characteristic(m: SurfaceMap) -> int:
    f0, f1, f2 = m.f_vector
    return f0 - f1 + f2


def equivelar_type(m: SurfaceMap) -> Optional[EquivelarType]:
    lengths = {len(f) for f in m.faces}
    degrees = {m.degree(v) for v in m.vertices}
    if len(lengths) == 1 and len(degrees) == 1:
        return EquivelarType(lengths.pop(), degrees.pop())
    return None


def vertex_link(m: SurfaceMap, v: Vertex) -> Tuple[Vertex, ...]:
    """Neighbours of ``v`` in the cyclic order given by the faces around it."""
    nbrs, _ = m.rotation(v)
    return canonical_cycle(nbrs)


def is_orientable(m: SurfaceMap) -> bool:
    """Try to orient faces coherently by propagation across shared edges."""
    require_surface(m)
    orient: Dict[int, int] = {0: 1}
    queue = deque([0])

    def directed(fi, sign):
        face = m.faces[fi] if sign > 0 else m.faces[fi][::-1]
        return {(face[k], face[(k + 1) % len(face)]) for k in range(len(face))}

    while queue:
        fi = queue.popleft()
        darts = directed(fi, orient[fi])
        for a, b in darts:
            gj = m.other_face(edge_key(a, b), fi)
            # the neighbour must traverse the shared edge as b -> a
            want = 1 if (b, a) in directed(gj, 1) else -1
            if gj in orient:
                if orient[gj] != want:
                    return False
            else:
                orient[gj] = want
                queue.append(gj)
    return True


def iter_isomorphisms(a: SurfaceMap, b: SurfaceMap) -> Iterator[Dict[Vertex, Vertex]]:
    """All vertex bijections carrying the faces of ``a`` onto the faces of ``b``.

    One face of ``a`` is tried against every aligned placement in ``b``; the
    rest of the map is then forced by propagation across edges, so the cost
    is polynomial for connected maps.
    """
    if a.f_vector != b.f_vector:
        return
    if Counter(map(len, a.faces)) != Counter(map(len, b.faces)):
        return
    if Counter(a.degree(v) for v in a.vertices) != Counter(b.degree(v) for v in b.vertices):
        return
    for m in (a, b):
        if any(len(fs) != 2 for fs in m.edge_faces.values()):
            raise MapError("isomorphism search needs every edge in two faces")

    f0 = a.faces[0]
    p = len(f0)
    for gi, g in enumerate(b.faces):
        if len(g) != p:
            continue
        for d in (1, -1):
            for off in range(p):
                phi = {f0[k]: g[(off + d * k) % p] for k in range(p)}
                result = _propagate(a, b, 0, gi, phi)
                if result is not None:
                    yield result


def find_isomorphism(a: SurfaceMap, b: SurfaceMap) -> Optional[Dict[Vertex, Vertex]]:
    return next(iter_isomorphisms(a, b), None)


def _align(face: Face, x, y, fx, fy, target: Face) -> Optional[Dict[Vertex, Vertex]]:
    p = len(face)
    if len(target) != p:
        return None
    i, j = face.index(x), target.index(fx)
    d_src = 1 if face[(i + 1) % p] == y else -1
    d_dst = 1 if target[(j + 1) % p] == fy else -1
    if target[(j + d_dst) % p] != fy:
        return None
    return {face[(i + d_src * k) % p]: target[(j + d_dst * k) % p] for k in range(p)}


def _propagate(a, b, fi, gi, phi):
    phi = dict(phi)
    face_map = {fi: gi}
    queue = deque([fi])
    while queue:
        x = queue.popleft()
        for u, w in a.face_edges(x):
            y = a.other_face((u, w), x)
            e = edge_key(phi[u], phi[w])
            if e not in b.edge_faces:
                return None
            gy = b.other_face(e, face_map[x])
            if y in face_map:
                if face_map[y] != gy:
                    return None
                continue
            local = _align(a.faces[y], u, w, phi[u], phi[w], b.faces[gy])
            if local is None:
                return None
            for s, t in local.items():
                if phi.setdefault(s, t) != t:
                    return None
            face_map[y] = gy
            queue.append(y)
    if len(face_map) != len(a.faces) or len(set(phi.values())) != len(phi):
        return None
    if a.relabel(phi) != b:
        return None
    return phi


def is_isomorphic(a: SurfaceMap, b: SurfaceMap) -> bool:
    return find_isomorphism(a, b) is not None
