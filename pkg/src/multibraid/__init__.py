"""Freeness of multiplicities on the braid arrangement on K4.

Closed-form classification with witnesses and non-freeness certificates,
cross-validated by an independent exact-linear-algebra oracle comparing
global and locally generated syzygies of the six-generator power ideal.
"""
from .classifier import (
    ann_decompositions,
    ann_free,
    classify,
    classify_deleted_a3,
    exponents,
    free_vertex,
    is_signed_eliminable,
    tilde_degrees,
)
from .exactalg import BACKEND, ExactScalar, binom2
from .model import (
    AnnDecomposition,
    AnnWitness,
    ClassificationResult,
    FreeVertexWitness,
    GeneralNonFree,
    LbPositive,
    Multiplicity,
    NoFreeStructure,
    OracleGap,
    SignedGraph4,
    opposite_edge,
    triangle_edges,
)
from .obstruction import (
    d_max,
    discriminant_sq,
    general_nonfree_test,
    hf_local_syz,
    hp_quotient_triangle,
    lb,
    local_syzygy_structure,
    odd_triangle_count,
    p_stat,
    twelve_inequalities,
)
from .oracle import (
    GradedDims,
    PowerIdeal,
    default_degree_bound,
    hf_ideal,
    hf_locally_generated,
    hf_quotient,
    hf_syz_global,
    is_locally_generated,
    local_syzygy_generators,
    oracle_classify,
    syzygy_tables,
)
from .resolution import BettiTable, betti_table_free, euler_hf_check, minimality_probe

__version__ = "0.1.0"

__all__ = [
    "AnnDecomposition", "AnnWitness", "BACKEND", "BettiTable",
    "ClassificationResult", "ExactScalar", "FreeVertexWitness",
    "GeneralNonFree", "GradedDims", "LbPositive", "Multiplicity",
    "NoFreeStructure", "OracleGap", "PowerIdeal", "SignedGraph4",
    "ann_decompositions", "ann_free", "betti_table_free", "binom2",
    "classify", "classify_deleted_a3", "d_max", "default_degree_bound",
    "discriminant_sq", "euler_hf_check", "exponents", "free_vertex",
    "general_nonfree_test", "hf_ideal", "hf_local_syz",
    "hf_locally_generated", "hf_quotient", "hf_syz_global",
    "hp_quotient_triangle", "is_locally_generated", "is_signed_eliminable",
    "lb", "local_syzygy_generators", "local_syzygy_structure",
    "minimality_probe", "odd_triangle_count", "opposite_edge",
    "oracle_classify", "p_stat", "syzygy_tables", "tilde_degrees",
    "triangle_edges", "twelve_inequalities",
]
