"""Transverse walks and circuits of an embedded graph, and skeleton grids.

At a vertex of degree four with rotation ``(e1, e2, e3, e4)`` the edges
``e1, e3`` and ``e2, e4`` are transverse.  Following transverse pairs through
degree-4 vertices splits the edge set into walks (ending at vertices of degree
other than four) and circuits, in exactly one way.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import EmptyCurvatureError, InvariantError, NotAGridError, PreconditionError, StructuralError
from .graph import Graph
from .maps import EmbeddedMap, curvature_sequence, degree_sequence, is_grid, is_orientable, euler_characteristic


class VertexKind(str, Enum):
    CURVATURE = "curvature"
    CROSSING = "crossing"
    SUBDIVIDING = "subdividing"
    INTERIOR = "interior"


@dataclass(frozen=True)
class TransverseWalk:
    """A transverse walk; ``darts[i]`` is the dart leaving the i-th vertex."""

    darts: tuple
    edges: tuple
    endpoints: tuple

    def __str__(self):
        return f"walk {self.endpoints[0]} -> {self.endpoints[1]}: {' '.join(self.edges)}"


@dataclass(frozen=True)
class TransverseCircuit:
    darts: tuple
    edges: tuple

    def __str__(self):
        return f"circuit: {' '.join(self.edges)}"


@dataclass(frozen=True)
class TransverseDecomposition:
    walks: tuple
    circuits: tuple

    def to_text(self) -> str:
        return "".join(f"{w}\n" for w in (*self.walks, *self.circuits))


def transverse_next(m: EmbeddedMap, dart):
    """The dart opposite to ``dart`` at its degree-4 vertex."""
    v = m.vertex_of(dart)
    if m.degree(v) != 4:
        raise PreconditionError(f"vertex {v} has degree {m.degree(v)}, not 4")
    return m.next_dart(m.next_dart(dart))


def _decompose(idx):
    """Walks and circuits as lists of outgoing dart indices, canonically ordered."""
    deg = [len(r) for r in idx.rot]
    nxt, vert = idx.nxt, idx.vert
    used = [False] * len(idx.edge_ids)
    walks = []
    for vi, rot in enumerate(idx.rot):
        if deg[vi] == 4:
            continue
        for d in rot:
            if used[d >> 1]:
                continue
            darts = [d]
            used[d >> 1] = True
            cur = d
            while True:
                arr = cur ^ 1
                if deg[vert[arr]] != 4:
                    break
                cur = nxt[nxt[arr]]
                if used[cur >> 1]:
                    raise InvariantError("transverse walk is not a trail")
                used[cur >> 1] = True
                darts.append(cur)
            rev = [x ^ 1 for x in reversed(darts)]
            u, w = vert[darts[0]], vert[darts[-1] ^ 1]
            if (w, rev[0]) < (u, darts[0]):
                darts = rev
            walks.append(darts)
    circuits = []
    for e in range(len(used)):
        if used[e]:
            continue
        d = 2 * e
        darts = [d]
        used[e] = True
        cur = d
        while True:
            cur = nxt[nxt[cur ^ 1]]
            if cur == d:
                break
            if used[cur >> 1]:
                raise InvariantError("transverse circuit is not a trail")
            used[cur >> 1] = True
            darts.append(cur)
        circuits.append(_min_cyclic(darts))
    walks.sort(key=lambda ds: min(x >> 1 for x in ds))
    circuits.sort(key=lambda ds: min(x >> 1 for x in ds))
    return walks, circuits


def _min_cyclic(darts):
    rev = [x ^ 1 for x in reversed(darts)]
    n = len(darts)
    return min(min(s[i:] + s[:i] for i in range(n)) for s in (darts, rev))


def decompose(m: EmbeddedMap) -> TransverseDecomposition:
    idx = m._idx
    walks, circuits = _decompose(idx)
    ids, eids, vids = idx.dart_ids, idx.edge_ids, idx.vertex_ids
    return TransverseDecomposition(
        tuple(TransverseWalk(tuple(ids[x] for x in ds), tuple(eids[x >> 1] for x in ds),
                             (vids[idx.vert[ds[0]]], vids[idx.vert[ds[-1] ^ 1]])) for ds in walks),
        tuple(TransverseCircuit(tuple(ids[x] for x in ds), tuple(eids[x >> 1] for x in ds))
              for ds in circuits),
    )


def classify_vertices(m: EmbeddedMap, dec: TransverseDecomposition | None = None) -> dict:
    """Map every vertex to its :class:`VertexKind`."""
    if dec is None:
        dec = decompose(m)
    in_walk = {e for w in dec.walks for e in w.edges}
    out = {}
    for v, rot in m.vertices:
        if len(rot) != 4:
            out[v] = VertexKind.CURVATURE
            continue
        k = (m.edge_of(rot[0]) in in_walk) + (m.edge_of(rot[1]) in in_walk)
        out[v] = (VertexKind.INTERIOR, VertexKind.SUBDIVIDING, VertexKind.CROSSING)[k]
    return out


@dataclass(frozen=True)
class SkeletonResult:
    """The skeleton grid of a grid together with the data linking the two.

    ``g_l`` is the curvature graph (one edge ``w<i>`` per transverse walk),
    ``walk_to_path`` maps those edges to dart sequences of the input, and
    ``segment_paths`` maps each skeleton edge to the input edges it smooths.
    """

    g_l: Graph
    skeleton: EmbeddedMap
    classification: dict
    walk_to_path: dict
    segment_paths: dict
    crossings: tuple

    def subdivision_counts(self) -> dict:
        """Number of subdividing vertices on each skeleton edge."""
        return {e: len(p) - 1 for e, p in self.segment_paths.items()}


def extract_skeleton(m: EmbeddedMap) -> SkeletonResult:
    if not is_grid(m):
        raise NotAGridError("skeleton extraction needs a grid")
    if not curvature_sequence(m):
        raise EmptyCurvatureError("empty curvature sequence: every vertex has degree 4")
    idx = m._idx
    walks, _ = _decompose(idx)
    dec = decompose(m)
    kinds = classify_vertices(m, dec)
    vids, eids, ids = idx.vertex_ids, idx.edge_ids, idx.dart_ids
    crossing = [kinds[v] is VertexKind.CROSSING for v in vids]
    branch = [kinds[v] in (VertexKind.CURVATURE, VertexKind.CROSSING) for v in vids]

    seg_edges = []
    segment_paths = {}
    walk_of_dart = {}
    for wi, ds in enumerate(walks):
        p, sign, path = ds[0], 1, []
        for j, x in enumerate(ds):
            sign *= idx.sign[x >> 1]
            path.append(eids[x >> 1])
            arr = x ^ 1
            if j == len(ds) - 1 or crossing[idx.vert[arr]]:
                e = eids[p >> 1]
                seg_edges.append((e, (ids[p], ids[arr]), sign))
                segment_paths[e] = tuple(path)
                walk_of_dart[ids[p]] = walk_of_dart[ids[arr]] = wi
                if j < len(ds) - 1:
                    p, sign, path = ds[j + 1], 1, []
    verts = []
    for vi, rot in enumerate(idx.rot):
        if branch[vi]:
            verts.append((vids[vi], tuple(ids[d] for d in rot)))
    try:
        skel = EmbeddedMap(tuple(verts), tuple(seg_edges))
    except StructuralError as exc:
        raise InvariantError(f"walk subgraph is not a connected embedded graph: {exc}") from None

    g_l = Graph(
        tuple(v for v in vids if kinds[v] is VertexKind.CURVATURE),
        tuple((f"w{i}", w.endpoints[0], w.endpoints[1]) for i, w in enumerate(dec.walks)),
    )
    walk_to_path = {f"w{i}": w.darts for i, w in enumerate(dec.walks)}
    crossings = tuple(v for v in vids if kinds[v] is VertexKind.CROSSING)

    if g_l.degree_sequence() != curvature_sequence(m):
        raise InvariantError("curvature graph degrees differ from the curvature sequence")
    for v in crossings:
        r = skel.rotation(v)
        if walk_of_dart[r[0]] != walk_of_dart[r[2]] or walk_of_dart[r[1]] != walk_of_dart[r[3]]:
            raise InvariantError(f"strands at crossing {v} do not alternate")
    if not is_grid(skel):
        raise InvariantError("skeleton is not a grid")
    if euler_characteristic(skel) != euler_characteristic(m) or is_orientable(skel) != is_orientable(m):
        raise InvariantError("skeleton lies on a different surface")
    if degree_sequence(skel) != tuple(sorted(curvature_sequence(m) + (4,) * len(crossings))):
        raise InvariantError("skeleton degrees are not curvature plus crossings")
    return SkeletonResult(g_l, skel, kinds, walk_to_path, segment_paths, crossings)
