"""Cellular embeddings stored as signed rotation systems.

An :class:`EmbeddedMap` lists, for every vertex, the cyclic order of the darts
(edge-ends) around it, and for every edge its two darts and a sign.  A sign of
``-1`` means the local orientation is reversed when crossing the edge; with all
signs ``+1`` the surface is orientable.

Everything else (faces, duality, orientability, isomorphism) is computed from
the derived :class:`FlagSystem`.  Side ``+1`` of a dart ``d`` is the corner
between ``d`` and the next dart in rotation, side ``-1`` the corner between the
previous dart and ``d``.  Flag ``(d, s)`` is stored at index ``2*dart + (s<0)``
where darts are indexed ``2*i, 2*i+1`` for the ``i``-th edge, so that the
vertex-preserving side switch ``s2`` is ``f ^ 1`` and edge partners are
``d ^ 1``.
"""
from __future__ import annotations

import re
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import InvariantError, NotAGridError, StructuralError

IDENT = re.compile(r"[A-Za-z0-9_.-]+\Z")


@dataclass(frozen=True)
class EmbeddedMap:
    """A connected graph cellularly embedded in a closed surface.

    ``vertices`` is a sequence of ``(vertex_id, rotation)`` pairs and ``edges``
    a sequence of ``(edge_id, (dart, dart), sign)`` triples.  Storage order is
    significant only for determinism of derived output.
    """

    vertices: tuple
    edges: tuple
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        vertices = tuple((v, tuple(rot)) for v, rot in self.vertices)
        edges = tuple((e, (ds[0], ds[1]), int(sign)) for e, ds, sign in self.edges)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        self._validate()

    def _validate(self):
        if not self.edges:
            raise StructuralError("a map needs at least one edge")
        vids = [v for v, _ in self.vertices]
        eids = [e for e, _, _ in self.edges]
        if len(set(vids)) != len(vids):
            raise StructuralError("duplicate vertex id")
        if len(set(eids)) != len(eids):
            raise StructuralError("duplicate edge id")
        edge_darts = Counter()
        for e, (a, b), sign in self.edges:
            if sign not in (1, -1):
                raise StructuralError(f"edge {e}: sign must be +1 or -1")
            edge_darts[a] += 1
            edge_darts[b] += 1
        vertex_darts = Counter()
        for v, rot in self.vertices:
            if not rot:
                raise StructuralError(f"vertex {v} has an empty rotation")
            vertex_darts.update(rot)
        for d, k in edge_darts.items():
            if k != 1:
                raise StructuralError(f"dart {d} used {k} times among edges")
        for d, k in vertex_darts.items():
            if k != 1:
                raise StructuralError(f"dart {d} used {k} times among rotations")
        if set(edge_darts) != set(vertex_darts):
            dangling = sorted(map(str, set(edge_darts) ^ set(vertex_darts)))
            raise StructuralError(f"dangling darts: {' '.join(dangling[:5])}")
        # connectivity of the underlying graph
        idx = self._idx
        seen = [False] * len(self.vertices)
        seen[0] = True
        stack = [0]
        while stack:
            v = stack.pop()
            for d in idx.rot[v]:
                w = idx.vert[d ^ 1]
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        if not all(seen):
            raise StructuralError("the underlying graph is disconnected")

    @classmethod
    def from_rotations(cls, rotations: Mapping, signs: Mapping | None = None) -> "EmbeddedMap":
        """Build a map from rotations written as edge ids.

        Every edge id must occur exactly twice over all rotations (twice in
        the same rotation for a loop).  Darts are named ``<edge>.0`` for the
        first occurrence and ``<edge>.1`` for the second, in vertex order.

        >>> m = EmbeddedMap.from_rotations({"v": ["a", "b", "a", "b"]})
        >>> euler_characteristic(m)
        0
        """
        signs = dict(signs or {})
        seen: dict = {}
        order = []
        vertices = []
        for v, rot in rotations.items():
            darts = []
            for e in rot:
                k = seen.get(e, 0)
                if k >= 2:
                    raise StructuralError(f"edge {e} appears more than twice")
                if k == 0:
                    order.append(e)
                seen[e] = k + 1
                darts.append(f"{e}.{k}")
            vertices.append((v, darts))
        for e, k in seen.items():
            if k != 2:
                raise StructuralError(f"edge {e} appears only once")
        edges = [(e, (f"{e}.0", f"{e}.1"), signs.pop(e, 1)) for e in order]
        if signs:
            raise StructuralError(f"signs given for unknown edges: {sorted(signs)}")
        return cls(tuple(vertices), tuple(edges))

    @classmethod
    def _trusted(cls, vertices: tuple, edges: tuple) -> "EmbeddedMap":
        """Skip validation; for tuples derived from an already valid map."""
        m = object.__new__(cls)
        object.__setattr__(m, "vertices", vertices)
        object.__setattr__(m, "edges", edges)
        object.__setattr__(m, "_cache", {})
        return m

    # -- index-level view -------------------------------------------------

    @property
    def _idx(self) -> "_Index":
        idx = self._cache.get("idx")
        if idx is None:
            idx = self._cache["idx"] = _Index(self)
        return idx

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def vertex_ids(self) -> tuple:
        return tuple(v for v, _ in self.vertices)

    @property
    def edge_ids(self) -> tuple:
        return tuple(e for e, _, _ in self.edges)

    def rotation(self, v) -> tuple:
        idx = self._idx
        return tuple(idx.dart_ids[d] for d in idx.rot[idx.vpos[v]])

    def degree(self, v) -> int:
        return len(self._idx.rot[self._idx.vpos[v]])

    def vertex_of(self, dart):
        idx = self._idx
        return idx.vertex_ids[idx.vert[idx.dpos[dart]]]

    def edge_of(self, dart):
        idx = self._idx
        return idx.edge_ids[idx.dpos[dart] >> 1]

    def partner(self, dart):
        idx = self._idx
        return idx.dart_ids[idx.dpos[dart] ^ 1]

    def sign(self, edge) -> int:
        idx = self._idx
        return idx.sign[idx.epos[edge]]

    def darts_of(self, edge) -> tuple:
        return self.edges[self._idx.epos[edge]][1]

    def endpoints(self, edge) -> tuple:
        a, b = self.darts_of(edge)
        return self.vertex_of(a), self.vertex_of(b)

    def next_dart(self, dart):
        idx = self._idx
        return idx.dart_ids[idx.nxt[idx.dpos[dart]]]

    def prev_dart(self, dart):
        idx = self._idx
        return idx.dart_ids[idx.prv[idx.dpos[dart]]]

    def mirror(self) -> "EmbeddedMap":
        """The same map with every rotation reversed (a reflection of the surface)."""
        verts = tuple((v, (rot[0],) + tuple(reversed(rot[1:]))) for v, rot in self.vertices)
        return EmbeddedMap(verts, self.edges)

    def relabel(self, darts: Mapping | None = None, vertices: Mapping | None = None,
                edges: Mapping | None = None) -> "EmbeddedMap":
        """Rename darts, vertices and edges; unmapped names are kept."""
        dm = (lambda x: darts.get(x, x)) if darts else (lambda x: x)
        vm = (lambda x: vertices.get(x, x)) if vertices else (lambda x: x)
        em = (lambda x: edges.get(x, x)) if edges else (lambda x: x)
        verts = tuple((vm(v), tuple(dm(d) for d in rot)) for v, rot in self.vertices)
        eds = tuple((em(e), (dm(a), dm(b)), s) for e, (a, b), s in self.edges)
        return EmbeddedMap(verts, eds)

    def __repr__(self):
        return f"EmbeddedMap(V={self.num_vertices}, E={self.num_edges}, F={len(self._idx.faces)})"


class _Index:
    """Integer encoding of a map: darts, rotations and the three involutions."""

    def __init__(self, m: EmbeddedMap):
        self.vertex_ids = [v for v, _ in m.vertices]
        self.edge_ids = [e for e, _, _ in m.edges]
        self.vpos = {v: i for i, v in enumerate(self.vertex_ids)}
        self.epos = {e: i for i, e in enumerate(self.edge_ids)}
        self.dart_ids = dart_ids = [d for _, ds, _ in m.edges for d in ds]
        self.sign = [s for _, _, s in m.edges]
        self.dpos = dpos = {d: i for i, d in enumerate(dart_ids)}
        nd = len(dart_ids)
        nxt = [0] * nd
        prv = [0] * nd
        vert = [0] * nd
        self.rot = rots = []
        for vi, (_, rot) in enumerate(m.vertices):
            r = [dpos[d] for d in rot]
            rots.append(r)
            prev = r[-1]
            for d in r:
                nxt[prev] = d
                prv[d] = prev
                vert[d] = vi
                prev = d
        self.nxt, self.prv, self.vert = nxt, prv, vert

    @cached_property
    def involutions(self):
        nxt, prv = self.nxt, self.prv
        nd = len(nxt)
        t0 = [0] * (2 * nd)
        t1 = [0] * (2 * nd)
        t2 = [f ^ 1 for f in range(2 * nd)]
        for d in range(nd):
            # s0(d, s) = (partner, -s*sign); s1(d, +) = (next, -); s1(d, -) = (prev, +)
            p = 2 * (d ^ 1)
            if self.sign[d >> 1] == 1:
                t0[2 * d], t0[2 * d + 1] = p + 1, p
            else:
                t0[2 * d], t0[2 * d + 1] = p, p + 1
            t1[2 * d] = 2 * nxt[d] + 1
            t1[2 * d + 1] = 2 * prv[d]
        return t0, t1, t2

    @cached_property
    def faces(self):
        """Face boundaries as lists of flags, traced by ``f -> s1(s0(f))``."""
        t0, t1, _ = self.involutions
        n = len(t0)
        seen = [False] * n
        out = []
        for f in range(n):
            if seen[f]:
                continue
            walk = []
            x = f
            while True:
                walk.append(x)
                y = t0[x]
                seen[x] = seen[y] = True
                x = t1[y]
                if x == f:
                    break
            out.append(walk)
        return out

    @cached_property
    def face_of_flag(self):
        t0 = self.involutions[0]
        res = [0] * len(t0)
        for i, walk in enumerate(self.faces):
            for x in walk:
                res[x] = i
                res[t0[x]] = i
        return res

    def corner(self, flag) -> int:
        """Dart after which the corner of ``flag`` lies in its vertex rotation."""
        d = flag >> 1
        return d if flag & 1 == 0 else self.prv[d]


def _side(flag: int) -> int:
    return -1 if flag & 1 else 1


@dataclass(frozen=True)
class FlagSystem:
    """Flags ``(dart, side)`` with the three fixed-point-free involutions."""

    flags: tuple
    s0: tuple
    s1: tuple
    s2: tuple

    def orbits(self, *gens: str) -> list:
        perms = [getattr(self, g) for g in gens]
        return _orbits(len(self.flags), perms)

    def check(self):
        n = len(self.flags)
        for name in ("s0", "s1", "s2"):
            p = getattr(self, name)
            if any(p[p[i]] != i or p[i] == i for i in range(n)):
                raise InvariantError(f"{name} is not a fixed-point-free involution")
        for i in range(n):
            a = self.s0[self.s2[i]]
            if a != self.s2[self.s0[i]] or a == i:
                raise InvariantError("s0 s2 must be a fixed-point-free involution")
        if len(_orbits(n, [self.s0, self.s1, self.s2])) != 1:
            raise InvariantError("flag graph is disconnected")


def _orbits(n: int, perms: Sequence[Sequence[int]]) -> list:
    seen = [False] * n
    out = []
    for f in range(n):
        if seen[f]:
            continue
        seen[f] = True
        orbit = [f]
        i = 0
        while i < len(orbit):
            x = orbit[i]
            i += 1
            for p in perms:
                y = p[x]
                if not seen[y]:
                    seen[y] = True
                    orbit.append(y)
        out.append(orbit)
    return out


def build_flags(m: EmbeddedMap) -> FlagSystem:
    idx = m._idx
    t0, t1, t2 = idx.involutions
    flags = tuple((idx.dart_ids[f >> 1], _side(f)) for f in range(len(t0)))
    fs = FlagSystem(flags, tuple(t0), tuple(t1), tuple(t2))
    return fs


@dataclass(frozen=True)
class FaceWalk:
    """A facial boundary walk.

    ``boundary[i]`` is the flag ``(dart, side)`` at which the walk leaves
    ``vertices[i]`` along ``edges[i]``; the face occupies the corner on
    ``side`` of ``dart``.
    """

    boundary: tuple
    vertices: tuple
    edges: tuple

    @property
    def length(self) -> int:
        return len(self.boundary)


def faces(m: EmbeddedMap) -> list:
    idx = m._idx
    out = []
    for walk in idx.faces:
        out.append(FaceWalk(
            tuple((idx.dart_ids[f >> 1], _side(f)) for f in walk),
            tuple(idx.vertex_ids[idx.vert[f >> 1]] for f in walk),
            tuple(idx.edge_ids[f >> 2] for f in walk),
        ))
    return out


def face_lengths(m: EmbeddedMap) -> list:
    return [len(w) for w in m._idx.faces]


def euler_characteristic(m: EmbeddedMap) -> int:
    return m.num_vertices - m.num_edges + len(m._idx.faces)


def is_orientable(m: EmbeddedMap) -> bool:
    """True iff the flag graph is bipartite."""
    cached = m._cache.get("orientable")
    if cached is not None:
        return cached
    t0, t1, t2 = m._idx.involutions
    color = [-1] * len(t0)
    ok = True
    for start in range(len(t0)):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack and ok:
            x = stack.pop()
            for p in (t0, t1, t2):
                y = p[x]
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    ok = False
                    break
    m._cache["orientable"] = ok
    return ok


def surface(m: EmbeddedMap) -> tuple:
    """The closed surface as an ``(euler_characteristic, orientable)`` pair."""
    return euler_characteristic(m), is_orientable(m)


def _read_back(t0, t1, t2):
    """Recover a signed rotation system from a flag system.

    Returns ``(rotations, edges)``: each rotation is a list of flags, each
    flag the side-``+1`` flag of one dart; each edge is ``(flag, flag, sign)``.
    Vertices and darts are discovered in increasing flag order.
    """
    n = len(t0)
    seen = [False] * n
    plus = [False] * n
    rotations = []
    for f in range(n):
        if seen[f]:
            continue
        rot = []
        x = f
        while True:
            seen[x] = seen[t2[x]] = True
            plus[x] = True
            rot.append(x)
            x = t2[t1[x]]
            if x == f:
                break
        rotations.append(rot)
    done = [False] * n
    edges = []
    for rot in rotations:
        for x in rot:
            if done[x]:
                continue
            y = t0[x]
            py = y if plus[y] else t2[y]
            if py == x:
                raise InvariantError("s0 s2 has a fixed point")
            edges.append((x, py, -1 if plus[y] else 1))
            done[x] = done[py] = True
    return rotations, edges


def dual(m: EmbeddedMap) -> EmbeddedMap:
    """The topological dual: swap the roles of ``s0`` and ``s2``.

    Dual vertex ``f<i>`` is the ``i``-th face of ``faces(m)``; every dual edge
    keeps the id of the primal edge it crosses, with darts ``<edge>.0`` and
    ``<edge>.1``.
    """
    idx = m._idx
    t0, t1, t2 = idx.involutions
    rotations, edges = _read_back(t2, t1, t0)
    name = {}
    eds = []
    for x, y, s in edges:
        e = idx.edge_ids[x >> 2]
        name[x], name[y] = f"{e}.0", f"{e}.1"
        eds.append((e, (name[x], name[y]), s))
    verts = tuple((f"f{i}", tuple(name[x] for x in rot)) for i, rot in enumerate(rotations))
    return EmbeddedMap._trusted(verts, tuple(eds))


def degree_sequence(m: EmbeddedMap) -> tuple:
    return tuple(sorted(len(r) for r in m._idx.rot))


def curvature_sequence(m: EmbeddedMap) -> tuple:
    return tuple(d for d in degree_sequence(m) if d != 4)


def is_grid(m: EmbeddedMap) -> bool:
    return all(len(w) == 4 for w in m._idx.faces)


def check_curvature_identity(m: EmbeddedMap) -> bool:
    """Check ``3v1 + 2v2 + v3 = 4*chi + sum_{i>=5} (i-4) v_i`` on a grid."""
    if not is_grid(m):
        raise NotAGridError("the curvature identity is only defined for grids")
    v = Counter(len(r) for r in m._idx.rot)
    lhs = 3 * v[1] + 2 * v[2] + v[3]
    rhs = 4 * euler_characteristic(m) + sum((i - 4) * k for i, k in v.items() if i >= 5)
    return lhs == rhs


def is_bipartite(m: EmbeddedMap) -> dict | None:
    """A proper 2-colouring ``{vertex: 0 | 1}`` of the underlying graph, or None.

    The first vertex in storage order gets colour 0.
    """
    if "bipartite" in m._cache:
        col = m._cache["bipartite"]
        return None if col is None else dict(col)
    col = m._cache["bipartite"] = _two_colouring(m)
    return None if col is None else dict(col)


def _two_colouring(m: EmbeddedMap) -> dict | None:
    idx = m._idx
    color = [-1] * m.num_vertices
    color[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for d in idx.rot[v]:
            w = idx.vert[d ^ 1]
            if color[w] < 0:
                color[w] = 1 - color[v]
                queue.append(w)
            elif color[w] == color[v]:
                return None
    return {idx.vertex_ids[i]: c for i, c in enumerate(color)}


# -- isomorphism -----------------------------------------------------------

def _bfs_code(perms, start, best):
    """Generator-labelled BFS code of the flag graph from ``start``.

    Returns ``(code, order)``, or None as soon as the code is known to exceed
    ``best`` lexicographically.
    """
    n = len(perms[0])
    label = [-1] * n
    label[start] = 0
    order = [start]
    code = []
    undecided = best is not None
    pos = 0
    i = 0
    while i < len(order):
        f = order[i]
        i += 1
        for p in perms:
            g = p[f]
            lg = label[g]
            if lg < 0:
                lg = label[g] = len(order)
                order.append(g)
            if undecided:
                b = best[pos]
                if lg > b:
                    return None
                if lg < b:
                    undecided = False
            code.append(lg)
            pos += 1
    return code, order


def _canonical(m: EmbeddedMap):
    cached = m._cache.get("canon")
    if cached is not None:
        return cached
    idx = m._idx
    perms = idx.involutions
    # restrict roots to flags with the smallest isomorphism-invariant key
    deg = [len(r) for r in idx.rot]
    flen = [len(w) for w in idx.faces]
    ff = idx.face_of_flag
    keys = [(deg[idx.vert[f >> 1]], flen[ff[f]]) for f in range(len(ff))]
    kmin = min(keys)
    best = None
    for f, k in enumerate(keys):
        if k != kmin:
            continue
        res = _bfs_code(perms, f, best[0] if best else None)
        if res is not None and (best is None or res[0] < best[0]):
            best = res
    m._cache["canon"] = best
    return best


def canonical_form(m: EmbeddedMap) -> bytes:
    """Byte string equal for two maps iff they are isomorphic (mirrors included)."""
    code, _ = _canonical(m)
    return ",".join(map(str, code)).encode("ascii")


def are_isomorphic(m1: EmbeddedMap, m2: EmbeddedMap) -> bool:
    if (m1.num_vertices, m1.num_edges, len(m1._idx.faces)) != \
            (m2.num_vertices, m2.num_edges, len(m2._idx.faces)):
        return False
    if degree_sequence(m1) != degree_sequence(m2):
        return False
    return canonical_form(m1) == canonical_form(m2)


def canonicalize(m: EmbeddedMap) -> EmbeddedMap:
    """Relabel ``m`` into its canonical representative.

    Vertices ``v0, v1, ...``, edges ``e0, e1, ...`` and darts ``d0, d1, ...``
    are numbered in canonical discovery order, so isomorphic maps yield equal
    objects.
    """
    _, order = _canonical(m)
    label = [0] * len(order)
    for i, f in enumerate(order):
        label[f] = i
    perms = m._idx.involutions
    new = []
    for p in perms:
        q = [0] * len(order)
        for f in range(len(order)):
            q[label[f]] = label[p[f]]
        new.append(q)
    rotations, edges = _read_back(*new)
    dname = {}
    for rot in rotations:
        for x in rot:
            dname[x] = f"d{len(dname)}"
    verts = tuple((f"v{i}", tuple(dname[x] for x in rot)) for i, rot in enumerate(rotations))
    eds = tuple((f"e{i}", (dname[x], dname[y]), s) for i, (x, y, s) in enumerate(edges))
    return EmbeddedMap(verts, eds)


# -- incremental construction ------------------------------------------------

class Namer:
    """Hands out identifiers that avoid a set of names already in use."""

    def __init__(self, used: Iterable[Hashable] = ()):
        self.used = set(used)

    def __call__(self, base: str) -> str:
        name = base
        k = 0
        while name in self.used:
            k += 1
            name = f"{base}_{k}"
        self.used.add(name)
        return name


class MapBuilder:
    """Mutable rotation-system builder used by the constructions."""

    def __init__(self):
        self.rot: dict = {}
        self.edges: dict = {}
        self.vertex_of: dict = {}
        self.vnames = Namer()
        self.enames = Namer()
        self.dnames = Namer()

    @classmethod
    def from_map(cls, m: EmbeddedMap) -> "MapBuilder":
        b = cls()
        for v, rot in m.vertices:
            b.rot[v] = list(rot)
            for d in rot:
                b.vertex_of[d] = v
        for e, ds, s in m.edges:
            b.edges[e] = (ds, s)
        b.vnames.used.update(b.rot)
        b.enames.used.update(b.edges)
        b.dnames.used.update(b.vertex_of)
        return b

    def add_vertex(self, base: str) -> str:
        v = self.vnames(base)
        self.rot[v] = []
        return v

    def add_edge(self, base: str, sign: int = 1) -> tuple:
        """Create an edge with two unattached darts; returns ``(edge, dart, dart)``."""
        e = self.enames(base)
        a = self.dnames(f"{e}.a")
        b = self.dnames(f"{e}.b")
        self.edges[e] = ((a, b), sign)
        return e, a, b

    def set_sign(self, e, sign: int):
        ds, _ = self.edges[e]
        self.edges[e] = (ds, sign)

    def append(self, v, dart):
        self.rot[v].append(dart)
        self.vertex_of[dart] = v

    def insert_after(self, anchor, dart):
        v = self.vertex_of[anchor]
        r = self.rot[v]
        r.insert(r.index(anchor) + 1, dart)
        self.vertex_of[dart] = v

    def replace_dart(self, old, new):
        v = self.vertex_of.pop(old)
        r = self.rot[v]
        r[r.index(old)] = new
        self.vertex_of[new] = v

    def remove_edge(self, e):
        (a, b), _ = self.edges.pop(e)
        for d in (a, b):
            v = self.vertex_of.pop(d, None)
            if v is not None:
                self.rot[v].remove(d)

    def remove_vertex(self, v):
        if self.rot[v]:
            raise StructuralError(f"vertex {v} still has darts")
        del self.rot[v]

    def build(self) -> EmbeddedMap:
        verts = tuple((v, tuple(r)) for v, r in self.rot.items())
        eds = tuple((e, ds, s) for e, (ds, s) in self.edges.items())
        return EmbeddedMap(verts, eds)
