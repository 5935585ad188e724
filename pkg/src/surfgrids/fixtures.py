"""Small named maps and graphs used by the tests, demos and the CLI.

Planar fixtures with straight-line drawings get their rotations from
coordinates (neighbours sorted counter-clockwise), which keeps them
independent of the constructions they are used to check.
"""
from __future__ import annotations

import math

from .graph import Graph
from .maps import EmbeddedMap


def planar_map(coords: dict, pairs) -> EmbeddedMap:
    """Spherical map of a straight-line plane drawing; edges named ``e0, e1, ...``."""
    around = {v: [] for v in coords}
    for i, (u, v) in enumerate(pairs):
        (x0, y0), (x1, y1) = coords[u], coords[v]
        around[u].append((math.atan2(y1 - y0, x1 - x0), f"e{i}"))
        around[v].append((math.atan2(y0 - y1, x0 - x1), f"e{i}"))
    return EmbeddedMap.from_rotations({str(v): [e for _, e in sorted(r)] for v, r in around.items()})


def c4() -> EmbeddedMap:
    """A 4-cycle in the sphere (two square faces)."""
    return planar_map({"a": (0, 0), "b": (1, 0), "c": (1, 1), "d": (0, 1)},
                      [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])


def t1(sign_a: int = 1) -> EmbeddedMap:
    """One vertex with loops ``a, b`` in rotation ``a b a b``: the torus.

    With ``sign_a=-1`` the same rotation lives in the Klein bottle.
    """
    return EmbeddedMap.from_rotations({"v": ["a", "b", "a", "b"]}, {"a": sign_a})


def klein() -> EmbeddedMap:
    return t1(-1)


def single_edge() -> EmbeddedMap:
    return EmbeddedMap.from_rotations({"u": ["e"], "v": ["e"]})


def q3() -> EmbeddedMap:
    """The cube."""
    coords = {0: (-2, -2), 1: (2, -2), 2: (2, 2), 3: (-2, 2),
              4: (-1, -1), 5: (1, -1), 6: (1, 1), 7: (-1, 1)}
    pairs = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
             (0, 4), (1, 5), (2, 6), (3, 7)]
    return planar_map(coords, pairs)


def k4() -> EmbeddedMap:
    coords = {0: (0, 0), 1: (0, 2), 2: (-2, -1), 3: (2, -1)}
    return planar_map(coords, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)])


def octahedron() -> EmbeddedMap:
    coords = {"A": (0, 10), "B": (-9, -5), "C": (9, -5), "D": (0, -2), "E": (2, 1), "F": (-2, 1)}
    pairs = [("A", "B"), ("B", "C"), ("C", "A"), ("D", "E"), ("E", "F"), ("F", "D"),
             ("A", "E"), ("A", "F"), ("B", "D"), ("B", "F"), ("C", "D"), ("C", "E")]
    return planar_map(coords, pairs)


def double_wheel(n: int) -> EmbeddedMap:
    """A ``2n``-cycle with one hub inside joined to the even rim vertices and one
    hub outside joined to the odd ones: a spherical grid.

    ``double_wheel(5)`` has curvature ``{3 x 10, 5 x 2}``; ``double_wheel(4)``
    is the skeleton grid of a quadrangular immersion of the Wagner graph, its
    two hubs being the crossings of the four long chords.
    """
    m = 2 * n
    rot = {}
    for i in range(m):
        fwd, back = f"r{i}", f"r{(i - 1) % m}"
        rot[f"v{i}"] = [fwd, f"s{i}", back] if i % 2 == 0 else [f"s{i}", fwd, back]
    rot["hin"] = [f"s{i}" for i in range(0, m, 2)]
    # seen from inside the outer face the order is reversed
    rot["hout"] = [f"s{i}" for i in range(m - 1, 0, -2)]
    return EmbeddedMap.from_rotations(rot)


def pdw() -> EmbeddedMap:
    return double_wheel(5)


def v8_skeleton() -> EmbeddedMap:
    return double_wheel(4)


def v8_grid() -> EmbeddedMap:
    """The Wagner skeleton with its single edge class subdivided twice, patched."""
    from .synthesis import synthesize
    return synthesize(v8_skeleton(), [2])


def cube_graph() -> Graph:
    return Graph.underlying(q3())


def k4_graph() -> Graph:
    return Graph.underlying(k4())


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges([(f"c{i}", f"c{(i + 1) % n}") for i in range(n)])


def wagner_graph() -> Graph:
    """The Wagner graph: an 8-cycle plus its four long diagonals."""
    pairs = [(f"v{i}", f"v{(i + 1) % 8}") for i in range(8)]
    pairs += [(f"v{i}", f"v{i + 4}") for i in range(4)]
    return Graph.from_edges(pairs)


def wheel_quotient() -> Graph:
    """Two pendant edges on the ends of a digon: the quotient of the alternating
    10-wheel by its 5-fold rotation."""
    return Graph.from_edges([("h1", "r0"), ("r0", "r1"), ("r0", "r1"), ("r1", "h2")])


MAPS = {
    "c4": c4,
    "t1": t1,
    "klein": klein,
    "edge": single_edge,
    "q3": q3,
    "k4": k4,
    "octahedron": octahedron,
    "pdw": pdw,
    "v8-skeleton": v8_skeleton,
    "v8-grid": v8_grid,
}


GRAPHS = {
    "cube-graph": cube_graph,
    "k4-graph": k4_graph,
    "c5-graph": lambda: cycle_graph(5),
    "wagner": wagner_graph,
    "wheel-quotient": wheel_quotient,
}
