"""Exact arithmetic in GF(p^k) over a polynomial basis."""

from .field import (
    DivByZero,
    FieldElement,
    FieldError,
    FieldSpec,
    NonPrime,
    NotASubfield,
    SpecMismatch,
    SubfieldEmbedding,
    TooLarge,
    arith,
    embed_subfield,
    enumerate_elements,
    field_create,
)
from .poly import Poly

__all__ = [
    'DivByZero',
    'FieldElement',
    'FieldError',
    'FieldSpec',
    'NonPrime',
    'NotASubfield',
    'Poly',
    'SpecMismatch',
    'SubfieldEmbedding',
    'TooLarge',
    'arith',
    'embed_subfield',
    'enumerate_elements',
    'field_create',
]
