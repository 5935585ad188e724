"""Grids (quadrangulations) of closed surfaces as signed rotation systems."""
from .derived import (BLACK, BLUE, RED, WHITE, ColoredGrid, OverlayVerdict, RadialVerdict, RGraph,
                      bipartition_grid, check_overlay_form, check_radial_form, medial, overlay,
                      overlay_direct, r_graph, radial)
from .errors import (BudgetError, EmptyCurvatureError, InfeasibleError, InvariantError, MalformedPatchError,
                     NotAGridError, PreconditionError, SmapParseError, StructuralError, SurfGridError)
from .graph import Graph
from .maps import (EmbeddedMap, FaceWalk, FlagSystem, are_isomorphic, build_flags, canonical_form,
                   canonicalize, check_curvature_identity, curvature_sequence, degree_sequence, dual,
                   euler_characteristic, face_lengths, faces, is_bipartite, is_grid, is_orientable, surface)
from .oracle import EnumerationBudget, Immersion, enumerate_embeddings, search_immersions, search_quadrangular
from .smap import (parse_graph, parse_plan, parse_smap, parse_smap_colored, serialize_graph, serialize_plan,
                   serialize_smap)
from .synthesis import (EulerVerdict, SubdivisionPlan, dual_circuit_classes, forced_euler, patch,
                        recover_plan, subdivide, synthesize)
from .transverse import (SkeletonResult, TransverseCircuit, TransverseDecomposition, TransverseWalk,
                         VertexKind, classify_vertices, decompose, extract_skeleton, transverse_next)

__all__ = [name for name in dir() if not name.startswith("_")]
