"""Exact Jacobian rings, Macaulay duality and Hodge locus tangent spaces."""

__version__ = "0.1.0"

from .cycles import (CIData, LinkData, ci_class_rep, ci_from_polys, decompose_in_ideal,
                     linked_class_rep, make_ci_hypersurface, make_link,
                     meeting_vs_skew_lines, twisted_cubic_ideal, twisted_cubic_link,
                     verify_ci_tangent, verify_le6)
from .divisor import (DivisorData, divisor_degree_bound, expected_codim_table,
                      hilbert_scheme_dim)
from .errors import (ConstructionError, DegeneracyError, HodgeLocusError, MembershipError,
                     NotRegularError, ParseError, ResourceError, SingularHypersurfaceError,
                     UsageError, VerificationError)
from .field import FieldSpec
from .formats import parse_poly, parse_polys, parse_sections
from .ideal import (HilbertData, IdealGens, ci_hilbert_series, hilbert_function, ideal_codim,
                    ideal_degree_piece, is_regular_sequence)
from .jacobian import (ArtinianQuotient, GradedQuotient, JacobianRing, SocleFunctional,
                       jacobian_ideal, macaulay_verify, pairing_matrix, quotient_dim,
                       smoothness_check)
from .linalg import ExactMatrix, Subspace, codim, contains, intersect, kernel, rank, rref, subspace_sum
from .poly import GradedBasis, HomoPoly, mono_basis, partial_derivative, poly_mul, variables
from .tangent import (DualityResult, HodgeClassRep, duality_check, multiplication_map,
                      nl_codim, sum_class_containment, t1_piece)

__all__ = [
    "ArtinianQuotient", "CIData", "ConstructionError", "DegeneracyError", "DivisorData",
    "DualityResult", "ExactMatrix", "FieldSpec", "GradedBasis", "GradedQuotient",
    "HilbertData", "HodgeClassRep", "HodgeLocusError", "HomoPoly", "IdealGens", "JacobianRing",
    "LinkData", "MembershipError", "NotRegularError", "ParseError", "ResourceError",
    "SingularHypersurfaceError", "SocleFunctional", "Subspace", "UsageError",
    "VerificationError", "ci_class_rep", "ci_from_polys", "ci_hilbert_series", "codim",
    "contains", "decompose_in_ideal", "divisor_degree_bound", "duality_check",
    "expected_codim_table", "hilbert_function", "hilbert_scheme_dim", "ideal_codim",
    "ideal_degree_piece", "intersect", "is_regular_sequence", "jacobian_ideal", "kernel",
    "linked_class_rep", "macaulay_verify", "make_ci_hypersurface", "make_link",
    "meeting_vs_skew_lines", "mono_basis", "multiplication_map", "nl_codim", "pairing_matrix",
    "parse_poly", "parse_polys", "parse_sections", "partial_derivative", "poly_mul",
    "quotient_dim", "rank", "rref", "smoothness_check", "subspace_sum",
    "sum_class_containment", "t1_piece", "twisted_cubic_ideal", "twisted_cubic_link",
    "variables", "verify_ci_tangent", "verify_le6",
]
