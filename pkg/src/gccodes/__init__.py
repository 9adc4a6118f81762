"""Galois supplemented cyclic codes, their F_q-weight distributions, and DNA codes."""

from .field import FieldElement, FieldSpec, field_build, frobenius_pow, primitive_nth_root, relative_trace, subfield_membership
from .poly import Polynomial
from .cyclotomic import Block, OrbitTable, enumerate_blocks, orbit_table, validate_block
from .enumerators import WeightEnumerator
from .codes import CyclicCode, code_from_block, code_from_generator, code_from_roots

__all__ = [
    "Block",
    "CyclicCode",
    "FieldElement",
    "FieldSpec",
    "OrbitTable",
    "Polynomial",
    "WeightEnumerator",
    "code_from_block",
    "code_from_generator",
    "code_from_roots",
    "enumerate_blocks",
    "field_build",
    "frobenius_pow",
    "orbit_table",
    "primitive_nth_root",
    "relative_trace",
    "subfield_membership",
    "validate_block",
]
