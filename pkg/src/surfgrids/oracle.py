"""Brute-force enumeration of embeddings and quadrangular immersions.

Everything here is exhaustive and deduplicated with
:func:`~surfgrids.maps.canonical_form`; it is meant for small inputs and as
ground truth for the constructive modules.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from .errors import BudgetError, InfeasibleError, InvariantError, PreconditionError
from .graph import Graph
from .maps import EmbeddedMap, canonical_form, euler_characteristic, is_grid, is_orientable
from .synthesis import forced_euler
from .transverse import extract_skeleton


@dataclass(frozen=True)
class EnumerationBudget:
    max_edges: int = 14
    max_crossings: int = 3
    chi: int | None = None
    orientable: bool | None = None
    max_candidates: int = 10 ** 7


def _spanning_tree(nv: int, ends) -> set:
    adj = [[] for _ in range(nv)]
    for i, (u, v) in enumerate(ends):
        adj[u].append((v, i))
        adj[v].append((u, i))
    seen = [False] * nv
    seen[0] = True
    tree = set()
    stack = [0]
    while stack:
        u = stack.pop()
        for v, i in adj[u]:
            if not seen[v]:
                seen[v] = True
                tree.add(i)
                stack.append(v)
    return tree


def _rotations(darts):
    first, rest = darts[0], darts[1:]
    for p in itertools.permutations(rest):
        yield (first,) + p


class _Search:
    """Depth-first search over signed rotation systems of an indexed graph.

    Dart ``2i`` of edge ``i`` sits at its first endpoint, ``2i+1`` at the
    second.  ``options[v]`` lists the admissible rotations at vertex ``v``.
    With ``grid_only`` partial face walks are traced after every vertex and a
    branch dies as soon as some face provably has length other than 4.
    """

    def __init__(self, nv, ends, options, free_signs, grid_only):
        self.nv = nv
        self.ends = ends
        self.options = options
        self.grid_only = grid_only
        ne = len(ends)
        self.nxt = [-1] * (2 * ne)
        self.prv = [-1] * (2 * ne)
        self.sign = [0] * ne
        for i in range(ne):
            if i not in free_signs:
                self.sign[i] = 1
        # edges whose sign is chosen once their later endpoint is placed
        order = list(range(nv))
        self.order = order
        pos = {v: k for k, v in enumerate(order)}
        self.sign_at = [[] for _ in range(nv)]
        for i, (u, v) in enumerate(ends):
            if i in free_signs:
                self.sign_at[max(pos[u], pos[v])].append(i)

    def space(self) -> int:
        total = 1
        for opts in self.options:
            total *= len(opts)
        return total * 2 ** sum(len(s) for s in self.sign_at)

    def run(self) -> Iterator[tuple]:
        yield from self._rec(0)

    def _rec(self, k):
        if k == self.nv:
            yield [self.nxt], list(self.sign)
            return
        v = self.order[k]
        free = self.sign_at[k]
        for rot in self.options[v]:
            n = len(rot)
            for j, d in enumerate(rot):
                self.nxt[d] = rot[(j + 1) % n]
                self.prv[d] = rot[j - 1]
            for signs in itertools.product((1, -1), repeat=len(free)):
                for i, s in zip(free, signs):
                    self.sign[i] = s
                if self.grid_only and not self._faces_ok():
                    continue
                yield from self._rec(k + 1)
            for i in free:
                self.sign[i] = 0
        for d in self.options[v][0]:
            self.nxt[d] = self.prv[d] = -1

    def _faces_ok(self) -> bool:
        nxt, prv, sign = self.nxt, self.prv, self.sign
        for f in range(2 * len(nxt)):
            x = f
            steps = 0
            while True:
                d = x >> 1
                s = sign[d >> 1]
                if s == 0:
                    break
                y = 2 * (d ^ 1) + ((x & 1) ^ (1 if s == 1 else 0))
                d2 = y >> 1
                if nxt[d2] < 0:
                    break
                x = 2 * nxt[d2] + 1 if y & 1 == 0 else 2 * prv[d2]
                steps += 1
                if x == f:
                    if steps != 4:
                        return False
                    break
                if steps == 4:
                    return False
        return True


def _build(vertex_ids, edge_ids, ends, rot_nxt, signs, dart_name):
    """Assemble an EmbeddedMap from a search leaf."""
    nxt = rot_nxt[0]
    verts = []
    at = [[] for _ in vertex_ids]
    for i, (u, v) in enumerate(ends):
        at[u].append(2 * i)
        at[v].append(2 * i + 1)
    for vi, darts in enumerate(at):
        d0 = darts[0]
        rot = [d0]
        d = nxt[d0]
        while d != d0:
            rot.append(d)
            d = nxt[d]
        verts.append((vertex_ids[vi], tuple(dart_name(d) for d in rot)))
    edges = tuple((edge_ids[i], (dart_name(2 * i), dart_name(2 * i + 1)), signs[i])
                  for i in range(len(ends)))
    return EmbeddedMap(tuple(verts), edges)


def _surface_filter(budget, chi_default=None):
    chi = budget.chi if budget.chi is not None else chi_default
    orientable = budget.orientable
    if chi is not None and chi % 2 != 0:
        if orientable:
            return chi, None  # no orientable surface has odd chi
        orientable = False
    if chi == 2:
        if orientable is False:
            return chi, None
        orientable = True
    return chi, orientable


def _embeddings(g: Graph, budget: EnumerationBudget, grid_only: bool, options=None,
                chi=None, orientable=None, seen=None):
    vid = {v: i for i, v in enumerate(g.vertices)}
    ends = [(vid[u], vid[v]) for _, u, v in g.edges]
    edge_ids = [e for e, _, _ in g.edges]
    nv = len(g.vertices)
    if options is None:
        at = [[] for _ in range(nv)]
        for i, (u, v) in enumerate(ends):
            at[u].append(2 * i)
            at[v].append(2 * i + 1)
        options = [list(_rotations(tuple(d))) for d in at]
    tree = _spanning_tree(nv, ends)
    free = set(range(len(ends))) - tree
    if orientable:
        free = set()
    search = _Search(nv, ends, options, free, grid_only)
    if search.space() > budget.max_candidates:
        raise BudgetError(f"{search.space()} candidate embeddings exceed the budget")
    seen = set() if seen is None else seen

    def dart_name(d):
        return f"{edge_ids[d >> 1]}.{d & 1}"

    for rot, signs in search.run():
        if orientable is False and all(s == 1 for s in signs):
            continue
        m = _build(g.vertices, edge_ids, ends, rot, signs, dart_name)
        if grid_only and not is_grid(m):
            continue
        if chi is not None and euler_characteristic(m) != chi:
            continue
        if orientable is not None and is_orientable(m) != orientable:
            continue
        key = canonical_form(m)
        if key in seen:
            continue
        seen.add(key)
        yield m


def enumerate_embeddings(g: Graph, budget: EnumerationBudget | None = None,
                         grid_only: bool = False) -> Iterator[EmbeddedMap]:
    """All cellular embeddings of ``g``, one per isomorphism class.

    Rotations are enumerated with the first dart of each vertex fixed and
    signs only on edges outside a spanning tree, so every switching class is
    visited once.  ``budget.chi`` / ``budget.orientable`` filter by surface.
    """
    budget = budget or EnumerationBudget()
    if g.num_edges > budget.max_edges:
        raise BudgetError(f"{g.num_edges} edges exceed the budget of {budget.max_edges}")
    if not g.is_connected() or g.num_edges == 0:
        raise PreconditionError("only connected graphs with edges have cellular embeddings")
    chi, orientable = _surface_filter(budget)
    if budget.chi is not None and orientable is None and budget.orientable is not None:
        return
    if budget.orientable is not None and orientable != budget.orientable:
        return
    yield from _embeddings(g, budget, grid_only, chi=chi, orientable=orientable)


@dataclass(frozen=True)
class Immersion:
    """A transverse immersion given by its skeleton (crossings as degree-4 vertices)."""

    skeleton: EmbeddedMap
    crossings: int


def _crossing_candidates(g: Graph, k: int):
    """Graphs obtained from ``g`` by splicing ``k`` crossings into its edges.

    Yields ``(graph, options_builder)`` where crossing vertices ``x0, x1, ...``
    only admit the two rotations in which the strands alternate.
    """
    ne = g.num_edges
    for counts in _compositions(2 * k, ne):
        pts = [(i, j) for i in range(ne) for j in range(counts[i])]
        for matching in _matchings(list(range(len(pts)))):
            yield _splice(g, counts, pts, matching)


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _matchings(items):
    if not items:
        yield []
        return
    a = items[0]
    for i in range(1, len(items)):
        rest = items[1:i] + items[i + 1:]
        for m in _matchings(rest):
            yield [(a, items[i])] + m


def _splice(g: Graph, counts, pts, matching):
    cross_of = {}
    for t, (p, q) in enumerate(matching):
        cross_of[pts[p]] = (t, 0)
        cross_of[pts[q]] = (t, 1)
    vertices = list(g.vertices) + [f"x{t}" for t in range(len(matching))]
    edges = []
    # darts at crossing t: strand 0 in/out, strand 1 in/out (edge index, end)
    strand = {}
    for i, (e, u, v) in enumerate(g.edges):
        prev = u
        for j in range(counts[i] + 1):
            nxt = v if j == counts[i] else f"x{cross_of[i, j][0]}"
            idx = len(edges)
            edges.append((f"{e}.{j}" if counts[i] else e, prev, nxt))
            if j > 0:
                t, s = cross_of[i, j - 1]
                strand[t, s, "out"] = 2 * idx
            if j < counts[i]:
                t, s = cross_of[i, j]
                strand[t, s, "in"] = 2 * idx + 1
            prev = nxt
    graph = Graph(tuple(vertices), tuple(edges))
    alternating = {}
    for t in range(len(matching)):
        a_in, a_out = strand[t, 0, "in"], strand[t, 0, "out"]
        b_in, b_out = strand[t, 1, "in"], strand[t, 1, "out"]
        alternating[len(g.vertices) + t] = [(a_in, b_in, a_out, b_out), (a_in, b_out, a_out, b_in)]
    return graph, alternating


def search_immersions(g_l: Graph, budget: EnumerationBudget | None = None,
                      quadrangular: bool = True) -> Iterator[Immersion]:
    """Transverse immersions of ``g_l`` with at most ``budget.max_crossings`` crossings.

    With ``quadrangular`` only immersions whose skeleton is a grid are
    produced; otherwise every immersion on the budget's surface (default:
    the forced one) is produced.  Output is deduplicated across all ``k``.
    """
    budget = budget or EnumerationBudget()
    if g_l.num_edges > budget.max_edges:
        raise BudgetError(f"{g_l.num_edges} edges exceed the budget of {budget.max_edges}")
    verdict = forced_euler(g_l)
    if quadrangular and not verdict.feasible:
        raise InfeasibleError(f"forced Euler characteristic {verdict.chi} is not realisable")
    chi_default = int(verdict.chi) if verdict.chi.denominator == 1 else None
    chi, orientable = _surface_filter(budget, chi_default)
    if budget.orientable is not None and orientable != budget.orientable:
        return
    seen: set = set()
    for k in range(budget.max_crossings + 1):
        for graph, alternating in _crossing_candidates(g_l, k):
            vid = {v: i for i, v in enumerate(graph.vertices)}
            at = [[] for _ in graph.vertices]
            for i, (_, u, v) in enumerate(graph.edges):
                at[vid[u]].append(2 * i)
                at[vid[v]].append(2 * i + 1)
            options = [alternating.get(i) or list(_rotations(tuple(d))) for i, d in enumerate(at)]
            for m in _embeddings(graph, budget, quadrangular, options=options,
                                 chi=chi, orientable=orientable, seen=seen):
                if quadrangular:
                    _check_immersion(m, g_l, k)
                yield Immersion(m, k)


def search_quadrangular(g_l: Graph, budget: EnumerationBudget | None = None) -> Iterator[Immersion]:
    return search_immersions(g_l, budget, quadrangular=True)


def _check_immersion(m: EmbeddedMap, g_l: Graph, k: int):
    res = extract_skeleton(m)
    if len(res.crossings) != k or res.g_l.num_edges != g_l.num_edges:
        raise InvariantError("immersion does not smooth back to the curvature graph")
    if res.g_l.degree_sequence() != g_l.degree_sequence():
        raise InvariantError("immersion changed the degree sequence")
    v = forced_euler(g_l)
    if euler_characteristic(m) != v.chi:
        raise InvariantError("immersion violates the forced Euler characteristic")
