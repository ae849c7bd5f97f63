"""Exact tools for normal surfaces and angle structures on triangulated
3-dimensional pseudo-manifolds. All arithmetic is rational and all angle
style quantities are in pi units."""

from .errors import CrossCheckError
from .triangulation import (Triangulation, Gluing, TriangulationError,
                            build, vertex_link_surface)
from .cwsurface import (CWSurface, CWError, cell_area, curvature,
                        gauss_bonnet_check, realize)
from .normal import (SolutionBasis, WZCoefficients, chi_star, coefficients,
                     edge_solution, expand, matching_matrix, tet_solution,
                     verify_basis, vertex_link_vector)
from .polytope import (VertexSolution, enumerate_vertices, is_vertex,
                       support_enumeration_vertices)
from .angles import (AngleAssignment, Decision, FarkasWitness, RouteRecord,
                     angle_matrix, decide, farkas_to_normal)
from .prescribe import (AreaCurvature, DualCertificate, WedgeAssignment,
                        b_system, chi_ak, decide_prescribed, dual_to_normal,
                        induced_area_curvature, induced_link_angles,
                        lift_dual, matrix_identities, pairing_parts,
                        project_dual)
from .cli import parse, parse_data, serialize

__all__ = [
    "CrossCheckError",
    "Triangulation", "Gluing", "TriangulationError", "build",
    "vertex_link_surface",
    "CWSurface", "CWError", "cell_area", "curvature",
    "gauss_bonnet_check", "realize",
    "SolutionBasis", "WZCoefficients", "chi_star", "coefficients",
    "edge_solution", "expand", "matching_matrix", "tet_solution",
    "verify_basis", "vertex_link_vector",
    "VertexSolution", "enumerate_vertices", "is_vertex",
    "support_enumeration_vertices",
    "AngleAssignment", "Decision", "FarkasWitness", "RouteRecord",
    "angle_matrix", "decide", "farkas_to_normal",
    "AreaCurvature", "DualCertificate", "WedgeAssignment",
    "b_system", "chi_ak", "decide_prescribed", "dual_to_normal",
    "induced_area_curvature", "induced_link_angles",
    "lift_dual", "matrix_identities", "pairing_parts", "project_dual",
    "parse", "parse_data", "serialize",
]
