"""Certified generators for the explicit families and constructive arguments."""
from .certificate import Certificate, Claim, Refusal
from .collapse import (
    EXAMPLES,
    EXCLUDED_PAIRS,
    eq22_element,
    example_suite,
    expected_lambda,
    lambda_element,
    prop4_examples,
    prop41,
    prop42,
    theorem41_construct,
)
from .factorizations import (
    cyclotomic_factor,
    gap_family,
    gap_polynomial,
    lemma31_identities,
    lemma31_suite,
    reflect,
    whitney,
    whitney_polynomial,
)
from .stability import (
    Decomposition,
    M,
    T,
    degree_bound,
    format_table,
    juxtapose,
    shift_construct,
    stability_decompose,
    table_metadata,
    table_value,
    target_counts,
    target_family,
    tensor_move,
    theorem82_construct,
)

__all__ = [
    "Certificate", "Claim", "Refusal",
    "EXAMPLES", "EXCLUDED_PAIRS", "eq22_element", "example_suite", "expected_lambda", "lambda_element",
    "prop4_examples", "prop41", "prop42", "theorem41_construct",
    "cyclotomic_factor", "gap_family", "gap_polynomial", "lemma31_identities", "lemma31_suite",
    "reflect", "whitney", "whitney_polynomial",
    "Decomposition", "M", "T", "degree_bound", "format_table", "juxtapose", "shift_construct",
    "stability_decompose", "table_metadata", "table_value", "target_counts", "target_family",
    "tensor_move", "theorem82_construct",
]
