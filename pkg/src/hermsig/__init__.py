"""Exact signature pairs, inertia triples and hyperquadric ideal membership
for Hermitian symmetric polynomials."""
from .expr import ParseError, format_poly, parse_expression
from .hermitian_form import eigen_oracle, form_matrix, inertia, is_indefinite, rank, signature_pair
from .polyring import HermPoly, RealPoly, bihomogenize, hyperquadric, lift_univariate, moment_lift, sign_counts
from .quotient import divide_by_r, divide_real, holomorphic_content, in_ideal_r, projective_degree

__version__ = "0.1.0"

__all__ = [
    "HermPoly", "RealPoly", "ParseError",
    "parse_expression", "format_poly",
    "inertia", "signature_pair", "rank", "is_indefinite", "form_matrix", "eigen_oracle",
    "bihomogenize", "hyperquadric", "lift_univariate", "moment_lift", "sign_counts",
    "divide_by_r", "divide_real", "holomorphic_content", "in_ideal_r", "projective_degree",
]
