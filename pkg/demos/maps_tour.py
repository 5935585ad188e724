"""A tour of the map core: surfaces, faces, duality and canonical forms."""
from surfgrids import (are_isomorphic, canonical_form, check_curvature_identity, curvature_sequence, dual,
                       euler_characteristic, face_lengths, fixtures, is_grid, is_orientable, serialize_smap)


def describe(name, m):
    kind = "orientable" if is_orientable(m) else "non-orientable"
    print(f"{name:12s} V={m.num_vertices:2d} E={m.num_edges:2d} F={len(face_lengths(m)):2d} "
          f"chi={euler_characteristic(m):2d} {kind:14s} grid={is_grid(m)}")


print("Bundled maps")
for name in sorted(fixtures.MAPS):
    describe(name, fixtures.MAPS[name]())

# The torus and Klein bottle grids differ only in one edge sign.
t1, klein = fixtures.t1(), fixtures.klein()
print("\nTorus grid as SMAP:\n" + serialize_smap(t1))
print("Same chi, different surface:", euler_characteristic(t1) == euler_characteristic(klein),
      is_orientable(t1), is_orientable(klein))

# Grids satisfy a linear identity between curvature vertices and chi.
for name in ("q3", "pdw", "v8-grid"):
    g = fixtures.MAPS[name]()
    print(f"{name}: curvature {curvature_sequence(g)} identity holds: {check_curvature_identity(g)}")

# The dual of the cube is the octahedron, and dualising twice gives the cube back.
q3 = fixtures.q3()
print("\ndual(cube) ~ octahedron:", are_isomorphic(dual(q3), fixtures.octahedron()))
print("dual(dual(cube)) ~ cube:", are_isomorphic(dual(dual(q3)), q3))
print("canonical form length:", len(canonical_form(q3)))
