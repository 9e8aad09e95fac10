"""Exact-arithmetic workbench for operadic bialgebras.

The package computes products, basis-dual coproducts, compatibility laws and
idempotent projections for a registry of operads (rooted trees, pointed sets,
words, planar trees, hypertrees, surjections), always over exact rationals,
and verifies every structural claim exhaustively at fixed arities.
"""

from .elements import (
    Hypertree,
    MSet,
    PlanarTree,
    PointedSet,
    RootedTree,
    Surjection,
    Word,
    orbit_canonical,
    perm_maps,
    stabilizer_order,
    standardize,
)
from .freealg import (
    DegreeBoundError,
    FreeAlgebra,
    FreeElement,
    crochet_pairing,
    dual_coproduct_table,
    dual_coproduct_terms,
    nary_dual_coproduct,
    singleton,
)
from .grammar import ParseError, parse, render
from .idempotents import (
    GradedModel,
    IdempotentPlan,
    RoundtripReport,
    dn_operator,
    extract_primitives,
    free_graded_model,
    inductive_idempotent,
    labeled_graded_model,
    nap_partial_sum_report,
    orbit_plan,
    rigidity_roundtrip,
    series_idempotent,
    series_report,
)
from .laws import (
    LAWS,
    BasisReport,
    LawEntry,
    LawReport,
    check_all_laws,
    check_compatible_basis,
    check_law,
    get_law,
    law_rhs,
)
from .linalg import in_span, kernel_basis, rank, rref, solve
from .linear import LinComb, ONE, Tensor, ZERO, scalar, tensor2, tensor_product
from .operads import OPERADS, Operad, get_operad
from .solomon_tits import (
    STElement,
    block_coproduct,
    conilpotency_report,
    hopf_compatibility_report,
    iterated_block_coproduct,
    nongeneration_certificate,
    phi_symmetrization_rank,
    primitive_basis,
    quasi_shuffles,
    stuffle_product,
    surjection_model,
    surjections,
)

__version__ = "0.1.0"

__all__ = [
    "Hypertree", "MSet", "PlanarTree", "PointedSet", "RootedTree", "Surjection",
    "Word", "orbit_canonical", "perm_maps", "stabilizer_order", "standardize",
    "DegreeBoundError", "FreeAlgebra", "FreeElement", "crochet_pairing",
    "dual_coproduct_table", "dual_coproduct_terms", "nary_dual_coproduct",
    "singleton", "ParseError", "parse", "render", "GradedModel", "IdempotentPlan",
    "RoundtripReport", "dn_operator", "extract_primitives", "free_graded_model",
    "inductive_idempotent", "labeled_graded_model", "nap_partial_sum_report",
    "orbit_plan", "rigidity_roundtrip", "series_idempotent", "series_report",
    "LAWS", "BasisReport", "LawEntry", "LawReport", "check_all_laws",
    "check_compatible_basis", "check_law", "get_law", "law_rhs",
    "in_span", "kernel_basis", "rank", "rref", "solve",
    "LinComb", "ONE", "Tensor", "ZERO", "scalar", "tensor2", "tensor_product",
    "OPERADS", "Operad", "get_operad",
    "STElement", "block_coproduct", "conilpotency_report",
    "hopf_compatibility_report", "iterated_block_coproduct",
    "nongeneration_certificate", "phi_symmetrization_rank", "primitive_basis",
    "quasi_shuffles", "stuffle_product", "surjection_model", "surjections",
    "__version__",
]
