"""Building grids from a skeleton grid by subdividing edges and patching faces.

The edges of a grid fall into classes, one per transverse circuit of its dual
(opposite sides of every quadrilateral lie in the same class).  Choosing a
count ``n`` per class, subdividing every edge of the class ``n`` times and
filling each face with a rectangular patch yields every grid with the given
skeleton.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import InvariantError, MalformedPatchError, NotAGridError, PreconditionError, StructuralError
from .graph import Graph
from .maps import (EmbeddedMap, MapBuilder, Namer, are_isomorphic, curvature_sequence, dual,
                   euler_characteristic, is_grid, is_orientable)
from .transverse import SkeletonResult, VertexKind, classify_vertices, decompose, extract_skeleton


@dataclass(frozen=True)
class EulerVerdict:
    chi: Fraction
    feasible: bool


def forced_euler(g: Graph) -> EulerVerdict:
    """The only Euler characteristic a quadrangular immersion of ``g`` can have.

    The verdict is infeasible when ``|V| - |E|/2`` is not an integer or
    exceeds 2.
    """
    deg = g.degrees()
    bad = [v for v, k in deg.items() if k == 4]
    if bad:
        raise PreconditionError(f"vertex {bad[0]} has degree 4")
    chi = Fraction(2 * g.num_vertices - g.num_edges, 2)
    return EulerVerdict(chi, chi.denominator == 1 and chi <= 2)


@dataclass(frozen=True)
class SubdivisionPlan:
    """Edge classes of a grid with one subdivision count per class.

    Class ``k`` is ``classes[k]``; ``counts`` is None until counts are chosen.
    """

    classes: tuple
    counts: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(tuple(c) for c in self.classes))
        if self.counts is not None:
            counts = tuple(int(n) for n in self.counts)
            if len(counts) != len(self.classes):
                raise PreconditionError("one count per class is required")
            if any(n < 0 for n in counts):
                raise PreconditionError("counts must be non-negative")
            object.__setattr__(self, "counts", counts)

    def class_of(self) -> dict:
        return {e: k for k, c in enumerate(self.classes) for e in c}

    def with_counts(self, counts: Mapping | Sequence) -> "SubdivisionPlan":
        if isinstance(counts, Mapping):
            unknown = set(counts) - set(range(len(self.classes)))
            if unknown:
                raise PreconditionError(f"unknown class ids: {sorted(unknown)}")
            counts = [counts.get(k, 0) for k in range(len(self.classes))]
        return SubdivisionPlan(self.classes, tuple(counts))

    def edge_counts(self) -> dict:
        if self.counts is None:
            raise PreconditionError("plan has no counts")
        return {e: self.counts[k] for k, c in enumerate(self.classes) for e in c}


def dual_circuit_classes(skel: EmbeddedMap) -> SubdivisionPlan:
    """Classes of edges crossed by the transverse circuits of the dual."""
    if not is_grid(skel):
        raise NotAGridError("edge classes are defined for grids only")
    d = dual(skel)
    if any(len(r) != 4 for _, r in d.vertices):
        raise InvariantError("dual of a grid is not 4-regular")
    dec = decompose(d)
    if dec.walks:
        raise InvariantError("4-regular dual has transverse walks")
    pos = {e: i for i, e in enumerate(skel.edge_ids)}
    classes = sorted((sorted(set(c.edges), key=pos.__getitem__) for c in dec.circuits),
                     key=lambda c: pos[c[0]])
    plan = SubdivisionPlan(tuple(classes))
    cls = plan.class_of()
    for f in skel._idx.faces:
        e = [skel._idx.edge_ids[x >> 2] for x in f]
        if cls[e[0]] != cls[e[2]] or cls[e[1]] != cls[e[3]]:
            raise InvariantError("opposite sides of a face lie in different classes")
    return plan


def _subdivide(m: EmbeddedMap, plan: SubdivisionPlan):
    counts = plan.edge_counts()
    unknown = set(counts) - set(m.edge_ids)
    if unknown:
        raise StructuralError(f"plan names unknown edges: {sorted(unknown)}")
    vnames = Namer(m.vertex_ids)
    enames = Namer(m.edge_ids)
    dnames = Namer(d for _, r in m.vertices for d in r)
    verts = [(v, tuple(r)) for v, r in m.vertices]
    edges = []
    points = []
    for e, (d1, d2), sign in m.edges:
        n = counts.get(e, 0)
        if n == 0:
            edges.append((e, (d1, d2), sign))
            continue
        prev = d1
        for k in range(n):
            s = vnames(f"{e}.s{k + 1}")
            sub = enames(f"{e}.{k}")
            a, b = dnames(f"{sub}.a"), dnames(f"{sub}.b")
            edges.append((sub, (prev, a), sign if k == 0 else 1))
            verts.append((s, (a, b)))
            points.append(s)
            prev = b
        edges.append((enames(f"{e}.{n}"), (prev, d2), 1))
    return EmbeddedMap(tuple(verts), tuple(edges)), frozenset(points)


def subdivide(m: EmbeddedMap, plan: SubdivisionPlan) -> EmbeddedMap:
    """Replace every edge of class ``C`` by a path through ``n_C`` new vertices.

    Sub-edges of ``e`` are ``e.0 ... e.n`` and the new vertices ``e.s1 ...``;
    the sign of ``e`` moves to ``e.0``.
    """
    return _subdivide(m, plan)[0]


def patch(m: EmbeddedMap, points) -> EmbeddedMap:
    """Fill every face with a rectangular grid.

    ``points`` are the subdivision vertices; every other vertex is a corner.
    Each face boundary must read corner, ``a`` points, corner, ``b`` points,
    corner, ``a`` points, corner, ``b`` points.  The i-th point of a side is
    joined through the patch to the ``(a+1-i)``-th point of the opposite side,
    both counted along the boundary walk.
    """
    points = frozenset(points)
    idx = m._idx
    b = MapBuilder.from_map(m)
    for fi, walk in enumerate(idx.faces):
        corners = [i for i, x in enumerate(walk) if idx.vertex_ids[idx.vert[x >> 1]] not in points]
        if len(corners) != 4:
            raise MalformedPatchError(f"face {fi} has {len(corners)} corners, expected 4")
        L = len(walk)
        sides = []
        for j in range(4):
            lo, hi = corners[j], corners[(j + 1) % 4]
            gap = (hi - lo) % L or L
            sides.append([walk[(lo + t) % L] for t in range(1, gap)])
        a, bb = len(sides[0]), len(sides[1])
        if len(sides[2]) != a or len(sides[3]) != bb:
            raise MalformedPatchError(
                f"face {fi} has side counts {[len(s) for s in sides]}, opposite sides must agree")
        if a == 0 and bb == 0:
            continue
        _fill(b, idx, fi, a, bb, sides)
    out = b.build()
    if not is_grid(out):
        raise InvariantError("patched map is not a grid")
    return out


def _fill(b: MapBuilder, idx, fi: int, a: int, bb: int, sides):
    """Add the ``a x bb`` patch of face ``fi`` to the builder."""
    bottom, right, top, left = sides
    node = {}
    for x in range(1, a + 1):
        node[x, 0] = bottom[x - 1]
        node[x, bb + 1] = top[a - x]
    for y in range(1, bb + 1):
        node[a + 1, y] = right[y - 1]
        node[0, y] = left[bb - y]
    slots = {}
    for x in range(1, a + 1):
        for y in range(1, bb + 1):
            node[x, y] = b.add_vertex(f"f{fi}.{x}.{y}")
            slots[x, y] = [None] * 4  # east, north, west, south

    def attach(pos, dart, slot):
        # returns the orientation indicator of the endpoint
        v = node[pos]
        if pos in slots:
            slots[pos][slot] = dart
            return 1
        b.insert_after(idx.dart_ids[idx.corner(v)], dart)
        return -1 if v & 1 else 1

    for y in range(1, bb + 1):
        for x in range(0, a + 1):
            e, da, db = b.add_edge(f"f{fi}.h{x}.{y}")
            b.set_sign(e, attach((x, y), da, 0) * attach((x + 1, y), db, 2))
    for x in range(1, a + 1):
        for y in range(0, bb + 1):
            e, da, db = b.add_edge(f"f{fi}.v{x}.{y}")
            b.set_sign(e, attach((x, y), da, 1) * attach((x, y + 1), db, 3))
    for pos, darts in slots.items():
        for d in darts:
            b.append(node[pos], d)


def synthesize(skel: EmbeddedMap, counts) -> EmbeddedMap:
    """Subdivide and patch ``skel`` with one count per dual-circuit class.

    ``counts`` is a :class:`SubdivisionPlan` with counts, a mapping from class
    index to count, or a sequence indexed by class.
    """
    if not is_grid(skel):
        raise NotAGridError("synthesis needs a grid skeleton")
    plan = dual_circuit_classes(skel)
    if isinstance(counts, SubdivisionPlan):
        if counts.classes != plan.classes:
            raise PreconditionError("plan classes do not match the skeleton")
        counts = counts.counts
    plan = plan.with_counts(counts)
    sub, points = _subdivide(skel, plan)
    g = patch(sub, points)
    if euler_characteristic(g) != euler_characteristic(skel) or is_orientable(g) != is_orientable(skel):
        raise InvariantError("synthesis changed the surface")
    if curvature_sequence(g) != curvature_sequence(skel):
        raise InvariantError("synthesis changed the curvature sequence")
    if not curvature_sequence(skel):
        warnings.warn("empty curvature sequence: skeleton roundtrip not checked", stacklevel=2)
    elif not is_skeleton_grid(skel):
        warnings.warn("input has degree-4 vertices that are not crossings: roundtrip not checked",
                      stacklevel=2)
    else:
        res = extract_skeleton(g)
        if not are_isomorphic(res.skeleton, skel):
            raise InvariantError("skeleton of the synthesized grid differs from the input")
        want = plan.edge_counts()
        for e, (p, _), _ in res.skeleton.edges:
            if len(res.segment_paths[e]) - 1 != want[skel.edge_of(p)]:
                raise InvariantError("recovered subdivision counts differ from the plan")
    return g


def is_skeleton_grid(m: EmbeddedMap) -> bool:
    """True for grids whose degree-4 vertices are all crossings of walks."""
    if not is_grid(m) or not curvature_sequence(m):
        return False
    return all(k in (VertexKind.CURVATURE, VertexKind.CROSSING) for k in classify_vertices(m).values())


def recover_plan(result: SkeletonResult) -> SubdivisionPlan:
    """Per-class counts read off the segments of an extracted skeleton."""
    plan = dual_circuit_classes(result.skeleton)
    per_edge = result.subdivision_counts()
    counts = []
    for c in plan.classes:
        vals = {per_edge[e] for e in c}
        if len(vals) != 1:
            raise InvariantError(f"edges of one class are subdivided {sorted(vals)} times")
        counts.append(vals.pop())
    return plan.with_counts(counts)
