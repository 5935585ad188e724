"""Radial, medial and overlay grids of an embedded graph, and their recognition.

All constructions place new vertices inside faces.  A face is a disc, so its
boundary walk fixes a local orientation: the boundary flag ``(d, s)`` lies on a
vertex whose rotation agrees with that orientation iff ``s = +1``.  An edge
drawn inside the face gets the product of the orientation indicators of its
two ends as its sign, new vertices inside the face being ``+1``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantError, NotAGridError, PreconditionError
from .maps import EmbeddedMap, MapBuilder, are_isomorphic, dual, euler_characteristic, is_bipartite, is_grid, \
    is_orientable

BLACK, WHITE = "black", "white"
RED, BLUE = "red", "blue"


@dataclass(frozen=True)
class ColoredGrid:
    map: EmbeddedMap
    coloring: dict

    def vertices_colored(self, color) -> list:
        return [v for v in self.map.vertex_ids if self.coloring[v] == color]


def _indicator(flag: int) -> int:
    return -1 if flag & 1 else 1


def _star_faces(m: EmbeddedMap, b: MapBuilder, keep=None, prefix: str = "F") -> list:
    """Add a vertex inside every face of ``m`` joined to its boundary visits.

    ``keep(flag)`` selects which visits get a spoke (default: all).  Returns
    the new vertex ids in face order.
    """
    idx = m._idx
    centers = []
    for fi, walk in enumerate(idx.faces):
        c = b.add_vertex(f"{prefix}{fi}")
        centers.append(c)
        for k, x in enumerate(walk):
            if keep is not None and not keep(x):
                continue
            _, da, db = b.add_edge(f"{c}.g{k}", _indicator(x))
            b.append(c, da)
            b.insert_after(idx.dart_ids[idx.corner(x)], db)
    return centers


def radial(h: EmbeddedMap) -> ColoredGrid:
    """The radial grid: vertices of ``h`` (black) and its faces (white)."""
    b = MapBuilder.from_map(h)
    centers = _star_faces(h, b)
    for e in h.edge_ids:
        b.remove_edge(e)
    g = b.build()
    coloring = {v: BLACK for v in h.vertex_ids}
    coloring.update({c: WHITE for c in centers})
    if not is_grid(g):
        raise InvariantError("radial graph is not a grid")
    if g.num_edges != 2 * h.num_edges:
        raise InvariantError("radial graph has the wrong number of edges")
    return ColoredGrid(g, coloring)


def medial(h: EmbeddedMap) -> EmbeddedMap:
    """The medial graph, the dual of the radial grid."""
    m = dual(radial(h).map)
    if any(len(r) != 4 for _, r in m.vertices):
        raise InvariantError("medial graph is not 4-regular")
    return m


def overlay(h: EmbeddedMap) -> ColoredGrid:
    """``h`` (red) and its dual (blue) drawn together, crossings white.

    Built as the radial grid of the radial grid; checked against the direct
    construction that subdivides every edge and stars every face.
    """
    r = radial(h)
    o = radial(r.map)
    coloring = {v: (RED if c == BLACK else BLUE) for v, c in r.coloring.items()}
    coloring.update({v: WHITE for v, c in o.coloring.items() if c == WHITE})
    g = o.map
    nf = len(h._idx.faces)
    white = [v for v, c in coloring.items() if c == WHITE]
    if g.num_vertices != h.num_vertices + nf + h.num_edges:
        raise InvariantError("overlay has the wrong number of vertices")
    if any(g.degree(w) != 4 for w in white):
        raise InvariantError("overlay has a white vertex of degree other than 4")
    if not are_isomorphic(g, overlay_direct(h)):
        raise InvariantError("overlay differs from the edge/dual-edge crossing construction")
    return ColoredGrid(g, coloring)


def overlay_direct(h: EmbeddedMap) -> EmbeddedMap:
    """Overlay built by crossing every edge with its dual edge."""
    b = MapBuilder.from_map(h)
    mids = set()
    for e, (d1, d2), sign in h.edges:
        w = b.add_vertex(f"{e}.x")
        mids.add(w)
        _, a1, a2 = b.add_edge(f"{e}.h0", sign)
        _, c1, c2 = b.add_edge(f"{e}.h1")
        b.replace_dart(d1, a1)
        b.replace_dart(d2, c2)
        b.append(w, a2)
        b.append(w, c1)
        b.remove_edge(e)
    sub = b.build()
    b = MapBuilder.from_map(sub)
    idx = sub._idx
    _star_faces(sub, b, keep=lambda x: idx.vertex_ids[idx.vert[x >> 1]] in mids, prefix="B")
    return b.build()


@dataclass(frozen=True)
class RGraph:
    map: EmbeddedMap
    bipartition: dict | None


def r_graph(g: ColoredGrid, strict: bool = True) -> RGraph:
    """Join the two black corners of every face and delete the white vertices.

    The rotation at a black vertex lists its faces in rotation order.  With
    ``strict`` every white vertex must have degree 4.
    """
    m = g.map
    if not is_grid(m):
        raise NotAGridError("R(G) is defined for grids only")
    black = {v for v in m.vertex_ids if g.coloring[v] != WHITE}
    for e, (a, b), _ in m.edges:
        if (m.vertex_of(a) in black) == (m.vertex_of(b) in black):
            raise PreconditionError(f"edge {e} does not join a black and a white vertex")
    if strict:
        for v in m.vertex_ids:
            if v not in black and m.degree(v) != 4:
                raise PreconditionError(f"white vertex {v} has degree {m.degree(v)}")
    idx = m._idx
    at_corner = {}
    edges = []
    for fi, walk in enumerate(idx.faces):
        ends = [x for x in walk if idx.vertex_ids[idx.vert[x >> 1]] in black]
        x, y = ends
        e = f"q{fi}"
        at_corner[idx.corner(x)] = f"{e}.a"
        at_corner[idx.corner(y)] = f"{e}.b"
        edges.append((e, (f"{e}.a", f"{e}.b"), _indicator(x) * _indicator(y)))
    verts = tuple((idx.vertex_ids[vi], tuple(at_corner[z] for z in rot))
                  for vi, rot in enumerate(idx.rot) if idx.vertex_ids[vi] in black)
    r = EmbeddedMap(verts, tuple(edges))
    return RGraph(r, is_bipartite(r))


def bipartition_grid(m: EmbeddedMap, white_color: int = 1) -> ColoredGrid | None:
    """Colour a bipartite map black/white, or None if it is not bipartite."""
    col = is_bipartite(m)
    if col is None:
        return None
    return ColoredGrid(m, {v: (WHITE if c == white_color else BLACK) for v, c in col.items()})


@dataclass(frozen=True)
class RadialVerdict:
    is_radial: bool
    primal: EmbeddedMap | None = None
    dual: EmbeddedMap | None = None


def check_radial_form(g: EmbeddedMap) -> RadialVerdict:
    """Decide whether a grid is a radial graph and recover ``(H, H*)``."""
    if not is_grid(g):
        raise NotAGridError("radial recognition needs a grid")
    if is_bipartite(g) is None:
        return RadialVerdict(False)
    h = r_graph(bipartition_grid(g, 1), strict=False).map
    hs = r_graph(bipartition_grid(g, 0), strict=False).map
    for x in (h, hs):
        if not are_isomorphic(radial(x).map, g):
            raise InvariantError("recovered graph does not reproduce the grid")
        if (euler_characteristic(x), is_orientable(x)) != (euler_characteristic(g), is_orientable(g)):
            raise InvariantError("recovered graph lies on a different surface")
    if not are_isomorphic(dual(h), hs):
        raise InvariantError("the two partite classes do not give dual maps")
    return RadialVerdict(True, h, hs)


@dataclass(frozen=True)
class OverlayVerdict:
    is_overlay: bool
    primal: EmbeddedMap | None = None
    white: frozenset | None = None


def check_overlay_form(g: EmbeddedMap) -> OverlayVerdict:
    """Decide whether a grid is an overlay graph and recover ``H``.

    Both partite classes are tried as the white class.
    """
    if not is_grid(g):
        raise NotAGridError("overlay recognition needs a grid")
    col = is_bipartite(g)
    if col is None:
        return OverlayVerdict(False)
    for white_color in (1, 0):
        cg = bipartition_grid(g, white_color)
        white = cg.vertices_colored(WHITE)
        if any(g.degree(w) != 4 for w in white):
            continue
        rg = r_graph(cg, strict=True)
        if rg.bipartition is None:
            continue
        h = r_graph(bipartition_grid(rg.map, 1), strict=False).map
        if not are_isomorphic(overlay(h).map, g):
            raise InvariantError("recovered graph does not reproduce the overlay")
        return OverlayVerdict(True, h, frozenset(white))
    return OverlayVerdict(False)
