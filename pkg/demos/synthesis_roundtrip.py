"""Build grids from a skeleton and a subdivision plan, then take them apart again."""
import random

from surfgrids import (are_isomorphic, dual_circuit_classes, extract_skeleton, fixtures, forced_euler,
                       recover_plan, serialize_plan, synthesize)

skel = fixtures.v8_skeleton()
plan = dual_circuit_classes(skel)
print("edge classes of the V8 skeleton:")
print(serialize_plan(plan))

rng = random.Random(1)
for _ in range(4):
    counts = [rng.randint(0, 4) for _ in plan.classes]
    g = synthesize(skel, counts)
    res = extract_skeleton(g)
    back = recover_plan(res)
    print(f"counts {counts} -> grid with {g.num_vertices} vertices -> "
          f"skeleton ok: {are_isomorphic(res.skeleton, skel)}, counts back: {list(back.counts)}")

# Every quadrangular immersion of a curvature graph lives on a surface with
# chi = |V| - |E|/2, so some graphs have none.
for name, g in (("wagner", fixtures.wagner_graph()), ("5-cycle", fixtures.cycle_graph(5))):
    v = forced_euler(g)
    print(f"{name}: forced chi = {v.chi}, feasible = {v.feasible}")
