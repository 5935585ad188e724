import pytest

from surfgrids import (SmapParseError, are_isomorphic, dual_circuit_classes, fixtures as F, parse_graph, parse_plan,
                       parse_smap, parse_smap_colored, serialize_graph, serialize_plan, serialize_smap)
from surfgrids.smap import join_stream, split_stream


def test_roundtrip(fixture_map):
    text = serialize_smap(fixture_map)
    assert parse_smap(text) == fixture_map


def test_canonical_serialisation(fixture_map):
    text = serialize_smap(fixture_map, canonical=True)
    again = parse_smap(text)
    assert serialize_smap(again) == text
    assert serialize_smap(again, canonical=True) == text
    assert are_isomorphic(again, fixture_map)


def test_canonical_equal_for_relabelled():
    m = F.q3()
    r = m.relabel(darts={d: f"z{i}" for i, d in enumerate(d for _, r in m.vertices for d in r)},
                  vertices={v: f"p{v}" for v in m.vertex_ids})
    assert serialize_smap(r, canonical=True) == serialize_smap(m, canonical=True)


def test_format_details():
    text = serialize_smap(F.klein())
    assert text == "smap 1\nvertex v: a.0 b.0 a.1 b.1\nedge a: a.0 a.1 -\nedge b: b.0 b.1 +\n"


def test_comments_and_blanks():
    text = "smap 1  # header\n\n# note\nvertex u: x   # trailing\nvertex w: y\nedge e: x y +\n"
    m = parse_smap(text)
    assert m.num_vertices == 2


def test_colors():
    text = serialize_smap(F.c4(), colors={"a": "black", "b": "white"})
    m, col = parse_smap_colored(text)
    assert col == {"a": "black", "b": "white"}


@pytest.mark.parametrize("text, line, msg", [
    ("smap 2\n", 1, "header"),
    ("vertex a: x\n", 1, "header"),
    ("smap 1\nvertex a x\n", 2, "malformed vertex"),
    ("smap 1\nvertex a: x\nedge e: x +\n", 3, "malformed edge"),
    ("smap 1\nvertex a: x y\nedge e: x y *\n", 3, "malformed edge"),
    ("smap 1\nvertex a: x y\nfoo\n", 3, "unknown line"),
    ("smap 1\nvertex a: x x\nedge e: x y +\n", 2, "twice"),
    ("smap 1\nvertex a: x y\nedge e: x y +\nedge f: y z +\n", 4, "twice"),
    ("smap 1\nvertex a: x y z\nedge e: x y +\n", 2, "no edge"),
    ("smap 1\nvertex a: x\nedge e: x y +\n", 3, "no rotation"),
    ("smap 1\nvertex a: x/y\n", 2, "malformed"),
])
def test_parse_errors(text, line, msg):
    with pytest.raises(SmapParseError, match=msg) as info:
        parse_smap(text)
    assert info.value.lineno == line
    assert str(info.value).startswith(f"line {line}:")


def test_disconnected_rejected():
    with pytest.raises(SmapParseError, match="disconnected"):
        parse_smap("smap 1\nvertex a: x y\nvertex b: z w\nedge e: x y +\nedge f: z w +\n")


def test_stream():
    docs = [serialize_smap(F.c4()), serialize_smap(F.t1())]
    parts = split_stream(join_stream(docs))
    assert [parse_smap(p) for p in parts] == [F.c4(), F.t1()]


def test_plan_roundtrip():
    plan = dual_circuit_classes(F.q3()).with_counts([1, 2, 3])
    assert parse_plan(serialize_plan(plan)) == plan
    bare = dual_circuit_classes(F.q3())
    assert parse_plan(serialize_plan(bare)) == bare


@pytest.mark.parametrize("text, msg", [
    ("class 1: a\n", "without gaps"),
    ("class 0: a\ncount 1: 2\n", "undefined"),
    ("class 0: a\nclass 0: b\n", "twice"),
    ("class 0: a\nclass 1: b\ncount 0: 1\n", "every class"),
    ("count: 3\n", "malformed"),
])
def test_plan_errors(text, msg):
    with pytest.raises(SmapParseError, match=msg):
        parse_plan(text)


def test_graph_format():
    g = F.wagner_graph()
    assert parse_graph(serialize_graph(g)) == g
    assert parse_graph(serialize_smap(F.q3())).num_edges == 12
    with pytest.raises(SmapParseError, match="line 2"):
        parse_graph("graph 1\nedge e a b\n")
