"""Radial, medial and overlay constructions, and recognising them."""
from surfgrids import (are_isomorphic, check_overlay_form, check_radial_form, dual, euler_characteristic,
                       face_lengths, fixtures, medial, overlay, radial)

k4 = fixtures.k4()
r = radial(k4)
print("radial(K4) is the cube:", are_isomorphic(r.map, fixtures.q3()))
print("medial(K4) is the octahedron:", are_isomorphic(medial(k4), fixtures.octahedron()))
o = overlay(k4).map
print(f"overlay(K4): V={o.num_vertices} E={o.num_edges} F={len(face_lengths(o))} chi={euler_characteristic(o)}")
print("radial(K4) ~ radial(dual K4):", are_isomorphic(r.map, radial(dual(k4)).map))

for name in ("q3", "t1", "klein", "pdw"):
    g = fixtures.MAPS[name]()
    rv, ov = check_radial_form(g), check_overlay_form(g)
    extra = f" primal V={rv.primal.num_vertices} E={rv.primal.num_edges}" if rv.is_radial else ""
    print(f"{name}: radial={rv.is_radial}{extra}; overlay={ov.is_overlay}")

print("overlay(K4) recognised:", check_overlay_form(o).is_overlay)
