"""Equivelar maps on the torus as quotients of the square/triangular grid."""

from __future__ import annotations

from .dual import build_dual
from .surface import EquivelarType, MapError, SurfaceMap, check_polyhedral, equivelar_type, validate_surface

SUPPORTED = {EquivelarType(3, 6), EquivelarType(4, 4), EquivelarType(6, 3)}


def _grid_faces(rows: int, cols: int, shift: int, triangulate: bool):
    # the torus is Z^2 modulo (cols, 0) and (shift, rows)
    def label(x, y):
        k, yy = divmod(y, rows)
        xx = (x - k * shift) % cols
        return str(yy * cols + xx)

    faces = []
    for y in range(rows):
        for x in range(cols):
            a, b, c, d = label(x, y), label(x + 1, y), label(x + 1, y + 1), label(x, y + 1)
            if triangulate:
                faces += [(a, b, c), (a, c, d)]
            else:
                faces.append((a, b, c, d))
    return faces


def generate_equivelar_torus(p_q, rows: int, cols: int, shift: int = 0) -> SurfaceMap:
    """Build a ``{3,6}``, ``{4,4}`` or ``{6,3}`` torus on a ``rows x cols`` grid.

    ``shift`` twists the vertical identification.  Parameters that collapse
    the quotient into something that is not a polyhedral map raise
    :class:`MapError`.  The ``{6,3}`` map is the dual of the ``{3,6}`` one
    and has ``2 * rows * cols`` vertices.
    """
    p_q = EquivelarType(*p_q)
    if p_q not in SUPPORTED:
        raise ValueError(f"unsupported type {p_q}; choose one of {{3,6}}, {{4,4}}, {{6,3}}")
    if rows < 1 or cols < 1:
        raise ValueError("rows and cols must be positive")
    try:
        m = SurfaceMap(_grid_faces(rows, cols, shift, triangulate=p_q.p != 4))
    except MapError as exc:
        raise MapError(f"degenerate quotient: {exc}") from None
    report = validate_surface(m)
    expected_edges = rows * cols * (3 if p_q.p != 4 else 2)
    if not report.ok or m.f_vector.f1 != expected_edges or m.f_vector.f0 != rows * cols:
        raise MapError("degenerate quotient: grid edges are identified")
    if not check_polyhedral(m).is_polyhedral:
        raise MapError("quotient is not a polyhedral map")
    if p_q == EquivelarType(6, 3):
        dual, corr = build_dual(m)
        m = dual.relabel({label: f"h{i}" for i, label in enumerate(corr.face_label)})
    assert equivelar_type(m) == p_q
    return m


def equivelar_tori(p_q, min_vertices: int, max_vertices: int):
    """Every valid grid quotient with a vertex count in the given range.

    Yields ``(rows, cols, shift, map)``; isomorphic duplicates are kept.
    """
    p_q = EquivelarType(*p_q)
    per_cell = 2 if p_q == EquivelarType(6, 3) else 1
    for size in range(min_vertices, max_vertices + 1):
        if size % per_cell:
            continue
        cells = size // per_cell
        for rows in range(1, cells + 1):
            if cells % rows:
                continue
            cols = cells // rows
            for shift in range(cols):
                try:
                    yield rows, cols, shift, generate_equivelar_torus(p_q, rows, cols, shift)
                except MapError:
                    continue
