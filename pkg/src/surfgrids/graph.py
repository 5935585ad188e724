"""Abstract (non-embedded) multigraphs with loops."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import StructuralError


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: tuple  # (edge_id, u, v)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple((e, u, v) for e, u, v in self.edges))
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise StructuralError("duplicate vertex id")
        if len({e for e, _, _ in self.edges}) != len(self.edges):
            raise StructuralError("duplicate edge id")
        for e, u, v in self.edges:
            if u not in vs or v not in vs:
                raise StructuralError(f"edge {e} has an unknown endpoint")

    @classmethod
    def from_edges(cls, pairs: Iterable, vertices: Iterable = ()) -> "Graph":
        """Graph with edges ``e0, e1, ...``; vertices in order of first appearance."""
        order = list(vertices)
        seen = set(order)
        edges = []
        for i, (u, v) in enumerate(pairs):
            for x in (u, v):
                if x not in seen:
                    seen.add(x)
                    order.append(x)
            edges.append((f"e{i}", u, v))
        return cls(tuple(order), tuple(edges))

    @classmethod
    def underlying(cls, m) -> "Graph":
        """The underlying graph of an :class:`~surfgrids.maps.EmbeddedMap`."""
        return cls(m.vertex_ids, tuple((e, m.vertex_of(a), m.vertex_of(b)) for e, (a, b), _ in m.edges))

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> Counter:
        deg = Counter({v: 0 for v in self.vertices})
        for _, u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def degree_sequence(self) -> tuple:
        return tuple(sorted(self.degrees().values()))

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = {v: [] for v in self.vertices}
        for _, u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)
