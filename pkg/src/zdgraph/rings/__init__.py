"""Finite commutative rings with unity and their analysis."""

from .analysis import (
    annihilator,
    element_from_text,
    element_to_text,
    is_field,
    is_unit,
    is_zero_divisor,
    multiply,
    nilpotency_index,
    nonunits_form_ideal,
)
from .base import DEFAULT_CAP, FiniteRing, get_cap
from .boolean import BooleanRing
from .descriptors import FIXTURES, fixture_descriptor, load_ring, make_ring
from .galois import GaloisField
from .modular import ModularRing, prime_power, valuation
from .monomial import MonomialQuotientRing, graph_quotient_ring
from .product import ProductRing
from .structure import StructureConstantRing, localex_ring

__all__ = [
    "DEFAULT_CAP",
    "FIXTURES",
    "BooleanRing",
    "FiniteRing",
    "GaloisField",
    "ModularRing",
    "MonomialQuotientRing",
    "ProductRing",
    "StructureConstantRing",
    "annihilator",
    "element_from_text",
    "element_to_text",
    "fixture_descriptor",
    "get_cap",
    "graph_quotient_ring",
    "is_field",
    "is_unit",
    "is_zero_divisor",
    "load_ring",
    "localex_ring",
    "make_ring",
    "multiply",
    "nilpotency_index",
    "nonunits_form_ideal",
    "prime_power",
    "valuation",
]
