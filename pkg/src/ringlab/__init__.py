"""Finite unital rings, element decompositions and ring-level property checks."""

from __future__ import annotations

from .classify import (
    ClassReport,
    LocalInfo,
    RingIdentities,
    classify_element,
    enumerate_class,
    is_local,
    jacobson_radical,
    ring_identities,
)
from .decompose import (
    Decomposition,
    InvalidDecomposition,
    LiftError,
    NotApplicableError,
    brute_force_decompose,
    construct_four_idempotents,
    crt_split_235,
    decompose,
    lift_idempotent,
    lift_tripotent,
    quintic_witness,
)
from .expr import ParseError, format_ring_expr, parse_literal, parse_ring_expr
from .properties import (
    PROPERTIES,
    Counterexample,
    PropertyVerdict,
    check_property,
    default_corpus,
    fifth_power_audit,
    matrix_tripotent_sum_check,
    theorem_suite,
    zn_kosan_numbertheory,
)
from .rings import (
    Elem,
    FiniteRing,
    LiteralError,
    PreconditionError,
    RingError,
    RingMismatchError,
    SizeLimitError,
    build_ring,
    carrier_cap,
    element_arithmetic,
    int_image,
    make_corner,
    make_matrix_ring,
    make_product,
    make_quotient_central,
    make_triangular_ring,
    make_zmod,
    subring_generated,
)

__version__ = "0.1.0"

__all__ = [
    "ParseError",
    "format_ring_expr",
    "parse_literal",
    "parse_ring_expr",
    "ClassReport",
    "LocalInfo",
    "RingIdentities",
    "classify_element",
    "enumerate_class",
    "is_local",
    "jacobson_radical",
    "ring_identities",
    "Decomposition",
    "InvalidDecomposition",
    "LiftError",
    "NotApplicableError",
    "brute_force_decompose",
    "construct_four_idempotents",
    "crt_split_235",
    "decompose",
    "lift_idempotent",
    "lift_tripotent",
    "quintic_witness",
    "PROPERTIES",
    "Counterexample",
    "PropertyVerdict",
    "check_property",
    "default_corpus",
    "fifth_power_audit",
    "matrix_tripotent_sum_check",
    "theorem_suite",
    "zn_kosan_numbertheory",
    "Elem",
    "FiniteRing",
    "LiteralError",
    "PreconditionError",
    "RingError",
    "RingMismatchError",
    "SizeLimitError",
    "build_ring",
    "carrier_cap",
    "element_arithmetic",
    "int_image",
    "make_corner",
    "make_matrix_ring",
    "make_product",
    "make_quotient_central",
    "make_triangular_ring",
    "make_zmod",
    "subring_generated",
]
