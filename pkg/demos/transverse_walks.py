"""Transverse walks, circuits and the skeleton of a grid."""
from surfgrids import classify_vertices, decompose, extract_skeleton, fixtures, serialize_smap, synthesize

# Start from the cube and subdivide its three parallel edge classes 2, 1 and 0
# times, which gives a larger spherical grid with the same eight curvature vertices.
grid = synthesize(fixtures.q3(), [2, 1, 0])
print(f"grid: V={grid.num_vertices} E={grid.num_edges}")

dec = decompose(grid)
print(f"{len(dec.walks)} transverse walks, {len(dec.circuits)} circuits")
print(dec.to_text().splitlines()[0], "...")

kinds = classify_vertices(grid, dec)
print("vertex kinds:", sorted({str(k.value) for k in kinds.values()}))

res = extract_skeleton(grid)
print(f"\ncurvature graph: {res.g_l.num_vertices} vertices, {res.g_l.num_edges} edges")
print("skeleton:")
print(serialize_smap(res.skeleton))
print("subdivisions per skeleton edge:", sorted(set(res.subdivision_counts().values())))
