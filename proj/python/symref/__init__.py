"""Exact computations for the order-32 symplectic reflection group Q8 x_{Z/2} D8."""

from ._symref import (
    EXIT_OK,
    EXIT_SINGULAR,
    EXIT_VERIFICATION_FAILURE,
    ParseError,
    SymrefError,
    aut,
    chartable,
    classify,
    facts,
    hp0,
    hyperplanes,
    invertible_class_count,
    kernel_basis,
    leaves,
    molien_dims,
    normalize_rational,
    rank,
    smooth,
    subrep_count,
)

__all__ = [
    "EXIT_OK",
    "EXIT_SINGULAR",
    "EXIT_VERIFICATION_FAILURE",
    "ParseError",
    "SymrefError",
    "aut",
    "chartable",
    "classify",
    "facts",
    "hp0",
    "hyperplanes",
    "invertible_class_count",
    "kernel_basis",
    "leaves",
    "molien_dims",
    "normalize_rational",
    "rank",
    "smooth",
    "subrep_count",
]
