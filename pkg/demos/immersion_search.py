"""Brute-force search for embeddings and quadrangular immersions of small graphs."""
import time

from surfgrids import (EnumerationBudget, are_isomorphic, enumerate_embeddings, euler_characteristic,
                       fixtures, is_orientable, search_immersions, search_quadrangular)
from surfgrids.catalog import grid_catalog

k4 = fixtures.k4_graph()
maps = list(enumerate_embeddings(k4, EnumerationBudget()))
print(f"K4 has {len(maps)} embeddings up to isomorphism:",
      sorted((euler_characteristic(m), is_orientable(m)) for m in maps))

cube = fixtures.cube_graph()
grids = list(enumerate_embeddings(cube, EnumerationBudget(), grid_only=True))
print(f"cube graph: {len(grids)} grid embedding(s)")

# One curvature graph can be realised by several quadrangular immersions.
found = list(search_quadrangular(fixtures.wheel_quotient(), EnumerationBudget(max_crossings=3)))
print("wheel quotient immersions, crossings:", sorted(im.crossings for im in found))

t = time.perf_counter()
for im in search_immersions(fixtures.wagner_graph(), EnumerationBudget(max_crossings=2)):
    if are_isomorphic(im.skeleton, fixtures.v8_skeleton()):
        print(f"Wagner graph: V8 skeleton found with {im.crossings} crossings "
              f"in {time.perf_counter() - t:.2f}s")
        break

print("grids with at most 8 edges on any surface:", len(grid_catalog(8)))
