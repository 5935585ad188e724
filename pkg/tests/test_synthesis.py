import random
import warnings
from fractions import Fraction

import pytest

from surfgrids import (Graph, MalformedPatchError, NotAGridError, PreconditionError, StructuralError,
                       SubdivisionPlan, are_isomorphic, curvature_sequence, decompose, dual, dual_circuit_classes,
                       euler_characteristic, extract_skeleton, face_lengths, fixtures as F, forced_euler, is_grid,
                       is_orientable, patch, recover_plan, subdivide, synthesize)
from surfgrids.synthesis import _subdivide


def test_forced_euler_examples():
    v = forced_euler(F.wagner_graph())
    assert v.chi == 2 and v.feasible
    assert forced_euler(F.cube_graph()).chi == 2
    v = forced_euler(F.k4_graph())
    assert v.chi == 1 and v.feasible
    v = forced_euler(F.cycle_graph(5))
    assert v.chi == Fraction(5, 2) and not v.feasible


def test_forced_euler_rejects_degree_4():
    with pytest.raises(PreconditionError):
        forced_euler(Graph.from_edges([("a", "a"), ("a", "b"), ("a", "c")]))


def test_forced_euler_above_two_is_infeasible():
    # two disjoint edges: 4 vertices, 2 edges
    v = forced_euler(Graph.from_edges([("a", "b"), ("c", "d")]))
    assert v.chi == 3 and not v.feasible


def test_classes_c4():
    plan = dual_circuit_classes(F.c4())
    assert sorted(map(sorted, plan.classes)) == [["e0", "e2"], ["e1", "e3"]]


def test_classes_q3_are_parallel_classes():
    plan = dual_circuit_classes(F.q3())
    assert sorted(len(c) for c in plan.classes) == [4, 4, 4]
    m = F.q3()
    # parallel classes of the cube: edges of a class share no vertex
    for c in plan.classes:
        ends = [v for e in c for v in m.endpoints(e)]
        assert len(set(ends)) == 8


def test_classes_v8_single():
    plan = dual_circuit_classes(F.v8_skeleton())
    assert len(plan.classes) == 1 and len(plan.classes[0]) == 16


def test_classes_match_dual_circuits(fixture_map):
    if not is_grid(fixture_map):
        with pytest.raises(NotAGridError):
            dual_circuit_classes(fixture_map)
        return
    plan = dual_circuit_classes(fixture_map)
    circuits = decompose(dual(fixture_map)).circuits
    assert sorted(sorted(set(c.edges)) for c in circuits) == sorted(sorted(c) for c in plan.classes)


def test_subdivide_c4_hexagon():
    plan = dual_circuit_classes(F.c4())
    k = [i for i, c in enumerate(plan.classes) if "e0" in c][0]
    counts = [0, 0]
    counts[k] = 1
    h = subdivide(F.c4(), plan.with_counts(counts))
    assert (h.num_vertices, h.num_edges) == (6, 6)
    assert face_lengths(h) == [6, 6]
    g = patch(*_subdivide(F.c4(), plan.with_counts(counts)))
    assert (g.num_vertices, g.num_edges, len(face_lengths(g))) == (6, 8, 4)
    assert euler_characteristic(g) == 2 and is_grid(g)


def test_subdivide_zero_is_identity(fixture_map):
    if not is_grid(fixture_map):
        return
    plan = dual_circuit_classes(fixture_map)
    assert subdivide(fixture_map, plan.with_counts([0] * len(plan.classes))) == fixture_map


def test_subdivide_q3_counts():
    plan = dual_circuit_classes(F.q3())
    h = subdivide(F.q3(), plan.with_counts([2, 2, 2]))
    assert (h.num_vertices, h.num_edges) == (32, 36)


def test_subdivide_names_and_sign():
    k = F.klein()
    plan = SubdivisionPlan((("a",), ("b",)), (2, 0))
    h = subdivide(k, plan)
    assert h.sign("a.0") == -1 and h.sign("a.1") == 1 and h.sign("a.2") == 1
    assert h.vertex_of("a.0") == "v" and h.degree("a.s1") == 2


def test_subdivide_unknown_edge():
    with pytest.raises(StructuralError):
        subdivide(F.c4(), SubdivisionPlan((("zz",),), (1,)))


def test_patch_box():
    plan = dual_circuit_classes(F.q3())
    g = synthesize(F.q3(), [2, 0, 0])
    assert is_grid(g) and euler_characteristic(g) == 2
    # a 3x1x1 box has 16 vertices
    assert g.num_vertices == 16


def test_patch_malformed():
    # with no subdivision points declared, the hexagon has 6 corners
    h = subdivide(F.c4(), dual_circuit_classes(F.c4()).with_counts([1, 0]))
    with pytest.raises(MalformedPatchError):
        patch(h, set())


def test_patch_unequal_sides():
    plan = SubdivisionPlan((("e0",), ("e1",), ("e2",), ("e3",)), (1, 0, 0, 0))
    h, pts = _subdivide(F.c4(), plan)
    with pytest.raises(MalformedPatchError, match="opposite"):
        patch(h, pts)


def test_patch_zero_face_unchanged():
    h, pts = _subdivide(F.q3(), dual_circuit_classes(F.q3()).with_counts([0, 0, 0]))
    assert patch(h, pts) == F.q3()


def test_patch_independent_of_walk_direction():
    # the mirror traverses every face the other way round
    plan = dual_circuit_classes(F.pdw())
    counts = [1 + (i % 3) for i in range(len(plan.classes))]
    a = synthesize(F.pdw(), counts)
    mp = F.pdw().mirror()
    b = synthesize(mp, dual_circuit_classes(mp).with_counts(dict(enumerate(counts))))
    assert are_isomorphic(a, b)


def test_synthesize_q3_ones():
    g = synthesize(F.q3(), [1, 1, 1])
    assert curvature_sequence(g) == (3,) * 8
    assert are_isomorphic(extract_skeleton(g).skeleton, F.q3())


def test_synthesize_v8_skeleton():
    g = synthesize(F.v8_skeleton(), [2])
    res = extract_skeleton(g)
    assert are_isomorphic(res.skeleton, F.v8_skeleton())
    assert set(res.subdivision_counts().values()) == {2}


def test_synthesize_all_zero(fixture_map):
    if not is_grid(fixture_map):
        return
    plan = dual_circuit_classes(fixture_map)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        assert are_isomorphic(synthesize(fixture_map, [0] * len(plan.classes)), fixture_map)


def test_synthesize_empty_curvature_warns():
    with pytest.warns(UserWarning, match="empty curvature"):
        g = synthesize(F.t1(), [1, 2])
    assert is_grid(g) and euler_characteristic(g) == 0 and is_orientable(g)


def test_synthesize_klein_keeps_surface():
    with pytest.warns(UserWarning):
        g = synthesize(F.klein(), [2, 1])
    assert is_grid(g) and euler_characteristic(g) == 0 and not is_orientable(g)


def test_counts_validation():
    plan = dual_circuit_classes(F.q3())
    with pytest.raises(PreconditionError):
        plan.with_counts([1, 2])
    with pytest.raises(PreconditionError):
        plan.with_counts([1, -1, 0])
    with pytest.raises(PreconditionError):
        plan.with_counts({7: 1})


@pytest.mark.parametrize("name", ["c4", "q3", "pdw", "v8-skeleton"])
def test_random_roundtrip(name):
    skel = F.MAPS[name]()
    plan = dual_circuit_classes(skel)
    rng = random.Random(name)
    for _ in range(5):
        counts = [rng.randint(0, 3) for _ in plan.classes]
        g = synthesize(skel, counts)
        assert (euler_characteristic(g), is_orientable(g)) == (euler_characteristic(skel), is_orientable(skel))
        res = extract_skeleton(g)
        assert are_isomorphic(res.skeleton, skel)
        rec = recover_plan(res)
        # recovered plan is on the extracted skeleton; regenerate and compare
        assert are_isomorphic(synthesize(res.skeleton, rec), g)


def test_synthesized_face_structure():
    # regenerating a grid from its own skeleton and recovered counts reproduces it
    g = synthesize(F.pdw(), [3, 1, 0, 2, 1, 2, 0, 1, 1, 3, 0, 2][:len(dual_circuit_classes(F.pdw()).classes)])
    res = extract_skeleton(g)
    assert are_isomorphic(synthesize(res.skeleton, recover_plan(res)), g)
