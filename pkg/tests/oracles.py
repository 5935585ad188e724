"""Independent reference computations used to cross-check the library.

These work directly on the signed rotation system with textbook algorithms
and share no code with the flag-based implementation.
"""
from __future__ import annotations

from collections import Counter


def _tables(m):
    nxt, prv, vert, partner, sign = {}, {}, {}, {}, {}
    for v, rot in m.vertices:
        for i, d in enumerate(rot):
            nxt[d] = rot[(i + 1) % len(rot)]
            prv[d] = rot[i - 1]
            vert[d] = v
    for _, (a, b), s in m.edges:
        partner[a], partner[b] = b, a
        sign[a] = sign[b] = s
    return nxt, prv, vert, partner, sign


def trace_faces(m):
    """Face lengths by the classical walk carrying a local orientation bit.

    State ``(d, o)``: leave along dart ``d`` with orientation ``o``.  Each face
    is traced once in each direction, so orbit lengths come in pairs.
    """
    nxt, prv, _, partner, sign = _tables(m)
    seen = set()
    lengths = []
    for d0 in nxt:
        for o0 in (1, -1):
            if (d0, o0) in seen:
                continue
            d, o, k = d0, o0, 0
            while (d, o) not in seen:
                seen.add((d, o))
                k += 1
                arr = partner[d]
                o = o * sign[d]
                d = nxt[arr] if o == 1 else prv[arr]
            lengths.append(k)
    assert len(lengths) % 2 == 0
    return sorted(lengths)[::2]


def euler_char(m):
    return m.num_vertices - m.num_edges + len(trace_faces(m))


def switching_orientable(m):
    """Orientable iff some vertex switching turns every sign into ``+``."""
    _, _, vert, _, _ = _tables(m)
    ori = {}
    adj = {}
    for _, (a, b), s in m.edges:
        u, v = vert[a], vert[b]
        if u == v and s == -1:
            return False
        adj.setdefault(u, []).append((v, s))
        adj.setdefault(v, []).append((u, s))
    start = m.vertices[0][0]
    ori[start] = 1
    stack = [start]
    while stack:
        u = stack.pop()
        for v, s in adj.get(u, []):
            want = ori[u] * s
            if v not in ori:
                ori[v] = want
                stack.append(v)
            elif ori[v] != want:
                return False
    return True


def two_colour(m):
    """Bipartiteness of the underlying graph by union of odd cycles check."""
    _, _, vert, _, _ = _tables(m)
    col = {}
    for v, _ in m.vertices:
        if v in col:
            continue
        col[v] = 0
        todo = [v]
        while todo:
            u = todo.pop()
            for _, (a, b), _ in m.edges:
                x, y = vert[a], vert[b]
                for p, q in ((x, y), (y, x)):
                    if p == u:
                        if q not in col:
                            col[q] = 1 - col[u]
                            todo.append(q)
                        elif col[q] == col[u]:
                            return False
    return True


def curvature_lhs_rhs(m):
    deg = Counter(len(r) for _, r in m.vertices)
    lhs = 3 * deg[1] + 2 * deg[2] + deg[3] - sum((i - 4) * k for i, k in deg.items() if i >= 5)
    return lhs, 4 * euler_char(m)
