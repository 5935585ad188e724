"""Exhaustive catalogs of small maps and grids.

Grids are generated as duals of 4-regular maps.  Rooted 4-regular maps are
built dart by dart (vertex ``i`` owns darts ``4i .. 4i+3`` in rotation order)
and a leaf is kept only when its root flag is the canonical starting flag, so
every isomorphism class appears exactly once.  The canonical test uses the
same breadth-first flag code as :func:`~surfgrids.maps.canonical_form`.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

import numba
import numpy as np

from .graph import Graph
from .maps import EmbeddedMap, canonical_form, dual
from .oracle import EnumerationBudget, enumerate_embeddings


@numba.njit(cache=True)
def _flag_perms(n, mate, sgn, t0, t1):
    for d in range(4 * n):
        base = 4 * (d // 4)
        nx = base + (d % 4 + 1) % 4
        pv = base + (d % 4 + 3) % 4
        flip = 1 if sgn[d] == 1 else 0
        t0[2 * d] = 2 * mate[d] + flip
        t0[2 * d + 1] = 2 * mate[d] + (1 - flip)
        t1[2 * d] = 2 * nx + 1
        t1[2 * d + 1] = 2 * pv


@numba.njit(cache=True)
def _code_cmp(nf, t0, t1, start, best, have_best, out, lab, order):
    """Write the BFS code from ``start`` into ``out``.

    Returns -1 / 0 / 1 comparing against ``best`` (0 if ``have_best`` is
    false); aborts early at the first difference when ``best`` is given.
    """
    for i in range(nf):
        lab[i] = -1
    lab[start] = 0
    order[0] = start
    head = 0
    tail = 1
    pos = 0
    cmp = 0
    while head < tail:
        x = order[head]
        head += 1
        for g in range(3):
            if g == 0:
                y = t0[x]
            elif g == 1:
                y = t1[x]
            else:
                y = x ^ 1
            if lab[y] < 0:
                lab[y] = tail
                order[tail] = y
                tail += 1
            v = lab[y]
            if have_best and cmp == 0:
                if v < best[pos]:
                    cmp = -1
                elif v > best[pos]:
                    return 1
            out[pos] = v
            pos += 1
    return cmp


@numba.njit(cache=True)
def _is_canonical(n, mate, sgn, t0, t1, flen, best, cur, lab, order):
    nf = 8 * n
    _flag_perms(n, mate, sgn, t0, t1)
    for i in range(nf):
        flen[i] = 0
    for f in range(nf):
        if flen[f] > 0:
            continue
        x = f
        k = 0
        while True:
            k += 1
            x = t1[t0[x]]
            if x == f:
                break
        x = f
        while True:
            flen[x] = k
            x = t1[t0[x]]
            if x == f:
                break
    # roots are restricted to flags minimising (own face length, length of
    # the face across the dart's other side), an isomorphism invariant
    k0 = flen[0]
    k1 = flen[1]
    for f in range(nf):
        if flen[f] < k0 or (flen[f] == k0 and flen[f ^ 1] < k1):
            return False
    _code_cmp(nf, t0, t1, 0, best, False, best, lab, order)
    for f in range(1, nf):
        if flen[f] != k0 or flen[f ^ 1] != k1:
            continue
        if _code_cmp(nf, t0, t1, f, best, True, cur, lab, order) < 0:
            return False
    return True


@numba.njit(cache=True)
def _quartic(n, cap):
    """Canonical rooted 4-regular maps with ``n`` vertices (all surfaces)."""
    nd = 4 * n
    mate = np.full(nd, -1, np.int64)
    sgn = np.zeros(nd, np.int64)
    out_mate = np.zeros((cap, nd), np.int8)
    out_sgn = np.zeros((cap, nd), np.int8)
    t0 = np.zeros(2 * nd, np.int64)
    t1 = np.zeros(2 * nd, np.int64)
    flen = np.zeros(2 * nd, np.int64)
    best = np.zeros(6 * nd, np.int64)
    cur = np.zeros(6 * nd, np.int64)
    lab = np.zeros(2 * nd, np.int64)
    order = np.zeros(2 * nd, np.int64)
    lvl_d = np.zeros(nd, np.int64)
    lvl_nv = np.zeros(nd, np.int64)
    lvl_k = np.zeros(nd, np.int64)
    count = 0
    top = 0
    lvl_d[0] = 0
    lvl_nv[0] = 1
    lvl_k[0] = -1
    nv = 1
    while top >= 0:
        d = lvl_d[top]
        nvl = lvl_nv[top]
        k = lvl_k[top]
        if k >= 0:
            d2 = mate[d]
            mate[d] = -1
            mate[d2] = -1
            nv = nvl
        maxk = 2 * (4 * nvl - d - 1)
        k += 1
        found = False
        while k <= maxk:
            if k == maxk:
                found = nvl < n
                break
            d2 = d + 1 + k // 2
            if mate[d2] < 0:
                found = True
                break
            k += 1
        if not found:
            top -= 1
            continue
        lvl_k[top] = k
        if k == maxk:
            d2 = 4 * nvl
            s = 1
            nv = nvl + 1
        else:
            d2 = d + 1 + k // 2
            s = 1 if k % 2 == 0 else -1
        mate[d] = d2
        mate[d2] = d
        sgn[d] = s
        sgn[d2] = s
        dn = -1
        for i in range(d + 1, 4 * nv):
            if mate[i] < 0:
                dn = i
                break
        if dn < 0:
            if nv == n and _is_canonical(n, mate, sgn, t0, t1, flen, best, cur, lab, order):
                if count < cap:
                    for i in range(nd):
                        out_mate[count, i] = mate[i]
                        out_sgn[count, i] = sgn[i]
                count += 1
            continue
        top += 1
        lvl_d[top] = dn
        lvl_nv[top] = nv
        lvl_k[top] = -1
    return count, out_mate, out_sgn


@numba.njit(cache=True)
def _duals(n, mates, sgns):
    """Read back the dual rotation system of every generated 4-regular map.

    Flags of the primal are reused with ``s0`` and ``s2`` exchanged.  Per map, ``rot``
    lists the side-``+1`` flags vertex by vertex, ``off`` delimits vertices
    (``-1`` padded) and ``edges`` holds ``(flag, flag, sign)`` triples.
    """
    count = mates.shape[0]
    nd = 4 * n
    nf = 2 * nd
    rot = np.zeros((count, nd), np.int16)
    off = np.full((count, nd + 1), -1, np.int16)
    edges = np.zeros((count, nd // 2, 3), np.int16)
    t0 = np.zeros(nf, np.int64)
    t1 = np.zeros(nf, np.int64)
    seen = np.zeros(nf, np.bool_)
    plus = np.zeros(nf, np.bool_)
    done = np.zeros(nf, np.bool_)
    mate = np.zeros(nd, np.int64)
    sgn = np.zeros(nd, np.int64)
    for c in range(count):
        for i in range(nd):
            mate[i] = mates[c, i]
            sgn[i] = sgns[c, i]
        _flag_perms(n, mate, sgn, t0, t1)
        for i in range(nf):
            seen[i] = False
            plus[i] = False
            done[i] = False
        pos = 0
        nv = 0
        for f in range(nf):
            if seen[f]:
                continue
            off[c, nv] = pos
            nv += 1
            x = f
            while True:
                seen[x] = True
                seen[t0[x]] = True
                plus[x] = True
                rot[c, pos] = x
                pos += 1
                x = t0[t1[x]]
                if x == f:
                    break
        off[c, nv] = pos
        ne = 0
        for p in range(pos):
            x = rot[c, p]
            if done[x]:
                continue
            y = x ^ 1
            py = y if plus[y] else t0[y]
            edges[c, ne, 0] = x
            edges[c, ne, 1] = py
            edges[c, ne, 2] = -1 if plus[y] else 1
            ne += 1
            done[x] = True
            done[py] = True
    return rot, off, edges


def _grid_map(rot, off, edges) -> EmbeddedMap:
    verts = []
    k = 0
    while k + 1 < len(off) and off[k + 1] >= 0:
        verts.append((f"f{k}", tuple(f"d{x}" for x in rot[off[k]:off[k + 1]])))
        k += 1
    eds = tuple((f"e{j}", (f"d{x}", f"d{y}"), int(s)) for j, (x, y, s) in enumerate(edges))
    return EmbeddedMap._trusted(tuple(verts), eds)


def _quartic_arrays(n: int):
    cap = 1024
    while True:
        count, mates, sgns = _quartic(n, cap)
        if count <= cap:
            return mates[:count], sgns[:count]
        cap = count


def _quartic_map(n, mate, sgn, validate=False) -> EmbeddedMap:
    verts = tuple((f"v{i}", tuple(f"d{4 * i + j}" for j in range(4))) for i in range(n))
    edges = []
    for d in range(4 * n):
        if d < mate[d]:
            edges.append((f"e{len(edges)}", (f"d{d}", f"d{int(mate[d])}"), int(sgn[d])))
    # the generator only emits connected perfect matchings of the darts
    return EmbeddedMap(verts, tuple(edges)) if validate else EmbeddedMap._trusted(verts, tuple(edges))


@lru_cache(maxsize=None)
def quartic_maps(n: int, validate: bool = False) -> tuple:
    """All 4-regular maps with ``n`` vertices, one per isomorphism class."""
    if n < 1:
        return ()
    mates, sgns = _quartic_arrays(n)
    return tuple(_quartic_map(n, m, s, validate) for m, s in zip(mates, sgns))


@lru_cache(maxsize=None)
def grid_catalog(max_edges: int) -> tuple:
    """Every grid with at most ``max_edges`` edges on any surface, up to isomorphism.

    Ordered by edge count, then generation order.
    """
    out = []
    for n in range(1, max_edges // 2 + 1):
        mates, sgns = _quartic_arrays(n)
        rot, off, edges = _duals(n, mates, sgns)
        out.extend(_grid_map(*t) for t in zip(rot, off, edges))
    return tuple(out)


def _graph_key(nv, edges):
    best = None
    for p in itertools.permutations(range(nv)):
        key = tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return nv, best


@lru_cache(maxsize=None)
def connected_multigraphs(num_edges: int) -> tuple:
    """Connected multigraphs (loops allowed) with exactly ``num_edges`` edges.

    Each is ``(k, edges)`` on vertices ``0 .. k-1``, one per isomorphism
    class.  Built level by level: every connected multigraph arises from a
    smaller one by adding a loop, an edge, or a pendant edge.
    """
    if num_edges == 0:
        return ((1, ()),)
    out = {}
    for nv, edges in connected_multigraphs(num_edges - 1):
        for u in range(nv):
            for v in range(u, nv + 1):
                grown = (nv + (v == nv), edges + ((u, v),))
                key = _graph_key(*grown)
                if key not in out:
                    out[key] = grown
    return tuple(out[k] for k in sorted(out))


def map_catalog(max_edges: int, grid_only: bool = False) -> tuple:
    """Every map with at most ``max_edges`` edges, via graphs and rotation systems."""
    out = []
    seen: set = set()
    budget = EnumerationBudget(max_edges=max_edges)
    for ne in range(1, max_edges + 1):
        for nv, edges in connected_multigraphs(ne):
            g = Graph.from_edges([(f"x{u}", f"x{v}") for u, v in edges],
                                 vertices=[f"x{i}" for i in range(nv)])
            for m in enumerate_embeddings(g, budget, grid_only=grid_only):
                key = canonical_form(m)
                if key not in seen:
                    seen.add(key)
                    out.append(m)
    return tuple(out)
