"""Text formats: SMAP maps, subdivision plans and abstract graphs.

SMAP version 1::

    smap 1
    vertex <vid>: <dart> <dart> ...
    edge <eid>: <dart> <dart> <+|->

``#`` starts a comment, blank lines are ignored and identifiers match
``[A-Za-z0-9_.-]+``.  Vertex colours travel in comments of the form
``# color: <vid> <colour>``.
"""
from __future__ import annotations

import re
from typing import Iterable

from .errors import SmapParseError, StructuralError
from .graph import Graph
from .maps import EmbeddedMap, canonicalize
from .synthesis import SubdivisionPlan

_ID = r"[A-Za-z0-9_.-]+"
_VERTEX = re.compile(rf"vertex\s+({_ID})\s*:((?:\s+{_ID})+)\s*\Z")
_EDGE = re.compile(rf"edge\s+({_ID})\s*:\s+({_ID})\s+({_ID})\s+([+-])\s*\Z")
_GEDGE = re.compile(rf"edge\s+({_ID})\s*:\s+({_ID})\s+({_ID})\s*\Z")
_GVERTEX = re.compile(rf"vertex\s+({_ID})\s*\Z")
_COLOR = re.compile(rf"#\s*color:\s+({_ID})\s+({_ID})\s*\Z")
_CLASS = re.compile(rf"class\s+(\d+)\s*:((?:\s+{_ID})*)\s*\Z")
_COUNT = re.compile(r"count\s+(\d+)\s*:\s+(\d+)\s*\Z")


def _lines(text: str):
    """Yield ``(lineno, content)`` with comments stripped and blanks skipped."""
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _header(text: str, word: str):
    first = text.splitlines()[0].split("#", 1)[0].strip() if text.strip() else ""
    if first != f"{word} 1":
        raise SmapParseError(f"expected header '{word} 1'", 1)


def parse_smap(text: str) -> EmbeddedMap:
    m, _ = parse_smap_colored(text)
    return m


def parse_smap_colored(text: str) -> tuple:
    """Parse an SMAP document; returns the map and its ``# color:`` table."""
    _header(text, "smap")
    vertices, edges = [], []
    where = {}
    for no, line in _lines(text):
        if no == 1:
            continue
        if line.startswith("vertex"):
            mt = _VERTEX.match(line)
            if not mt:
                raise SmapParseError("malformed vertex line", no)
            darts = mt.group(2).split()
            vertices.append((mt.group(1), tuple(darts)))
            for d in darts:
                if ("v", d) in where:
                    raise SmapParseError(f"dart {d} appears twice among vertex lines", no)
                where[("v", d)] = no
        elif line.startswith("edge"):
            mt = _EDGE.match(line)
            if not mt:
                raise SmapParseError("malformed edge line", no)
            e, a, b, s = mt.groups()
            edges.append((e, (a, b), 1 if s == "+" else -1))
            for d in (a, b):
                if ("e", d) in where:
                    raise SmapParseError(f"dart {d} appears twice among edge lines", no)
                where[("e", d)] = no
        else:
            raise SmapParseError(f"unknown line: {line.split()[0]!r}", no)
    _check_darts(vertices, edges, where)
    colors = {}
    for raw in text.splitlines():
        mt = _COLOR.match(raw.strip())
        if mt:
            colors[mt.group(1)] = mt.group(2)
    try:
        m = EmbeddedMap(tuple(vertices), tuple(edges))
    except StructuralError as exc:
        raise SmapParseError(str(exc)) from None
    unknown = set(colors) - set(m.vertex_ids)
    if unknown:
        raise SmapParseError(f"colour given for unknown vertex {sorted(unknown)[0]}")
    return m, colors


def _check_darts(vertices, edges, where):
    """Dangling darts with line numbers, before the map itself validates."""
    seen_v = {d for _, rot in vertices for d in rot}
    seen_e = {d for _, ds, _ in edges for d in ds}
    for d in seen_v:
        if d not in seen_e:
            raise SmapParseError(f"dart {d} has no edge", where[("v", d)])
    for d in seen_e:
        if d not in seen_v:
            raise SmapParseError(f"dart {d} is in no rotation", where[("e", d)])


def serialize_smap(m: EmbeddedMap, colors: dict | None = None, canonical: bool = False) -> str:
    """SMAP text of ``m``; with ``canonical`` the canonical relabelling is written."""
    if canonical:
        m = canonicalize(m)
    out = ["smap 1"]
    out += [f"vertex {v}: {' '.join(rot)}" for v, rot in m.vertices]
    out += [f"edge {e}: {a} {b} {'+' if s == 1 else '-'}" for e, (a, b), s in m.edges]
    if colors:
        out += [f"# color: {v} {colors[v]}" for v in m.vertex_ids if v in colors]
    return "\n".join(out) + "\n"


def split_stream(text: str) -> list:
    """Split a multi-map stream on ``---`` separator lines."""
    blocks, cur = [], []
    for raw in text.splitlines():
        if raw.strip() == "---":
            blocks.append("\n".join(cur) + "\n")
            cur = []
        else:
            cur.append(raw)
    if any(line.strip() for line in cur):
        blocks.append("\n".join(cur) + "\n")
    return blocks


def join_stream(docs: Iterable[str]) -> str:
    return "---\n".join(docs)


def parse_plan(text: str) -> SubdivisionPlan:
    """Parse ``class <k>: <edge> ...`` and ``count <k>: <n>`` lines."""
    classes, counts = {}, {}
    for no, line in _lines(text):
        if line.startswith("class"):
            mt = _CLASS.match(line)
            if not mt:
                raise SmapParseError("malformed class line", no)
            k = int(mt.group(1))
            if k in classes:
                raise SmapParseError(f"class {k} defined twice", no)
            classes[k] = tuple(mt.group(2).split())
        elif line.startswith("count"):
            mt = _COUNT.match(line)
            if not mt:
                raise SmapParseError("malformed count line", no)
            k, n = int(mt.group(1)), int(mt.group(2))
            if k not in classes:
                raise SmapParseError(f"count for undefined class {k}", no)
            counts[k] = n
        else:
            raise SmapParseError(f"unknown line: {line.split()[0]!r}", no)
    if sorted(classes) != list(range(len(classes))):
        raise SmapParseError("classes must be numbered 0, 1, 2, ... without gaps")
    plan = SubdivisionPlan(tuple(classes[k] for k in range(len(classes))))
    if counts:
        if set(counts) != set(classes):
            raise SmapParseError("counts must be given for every class or for none")
        plan = plan.with_counts(counts)
    return plan


def serialize_plan(plan: SubdivisionPlan) -> str:
    out = [f"class {k}: {' '.join(c)}" for k, c in enumerate(plan.classes)]
    if plan.counts is not None:
        out += [f"count {k}: {n}" for k, n in enumerate(plan.counts)]
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse a graph file; an SMAP document is read as its underlying graph.

    Graph format::

        graph 1
        vertex <vid>              (optional, fixes order)
        edge <eid>: <u> <v>
    """
    if text.strip() and text.splitlines()[0].split("#", 1)[0].strip() == "smap 1":
        return Graph.underlying(parse_smap(text))
    _header(text, "graph")
    vertices, edges = [], []
    for no, line in _lines(text):
        if no == 1:
            continue
        mt = _GVERTEX.match(line)
        if mt:
            vertices.append(mt.group(1))
            continue
        mt = _GEDGE.match(line)
        if mt:
            edges.append(mt.groups())
            continue
        raise SmapParseError("malformed graph line", no)
    order = list(vertices)
    known = set(order)
    for _, u, v in edges:
        for x in (u, v):
            if x not in known:
                known.add(x)
                order.append(x)
    try:
        return Graph(tuple(order), tuple(edges))
    except StructuralError as exc:
        raise SmapParseError(str(exc)) from None


def serialize_graph(g: Graph) -> str:
    out = ["graph 1"] + [f"vertex {v}" for v in g.vertices]
    out += [f"edge {e}: {u} {v}" for e, u, v in g.edges]
    return "\n".join(out) + "\n"
