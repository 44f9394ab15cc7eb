"""Exact arithmetic for rational lines on smooth cubic surfaces."""

from .fields import GF, QQ, NumberField, embedding, parse_field
from .poly import Poly, factor, is_irreducible, triple_sum_free

__all__ = [
    "GF", "QQ", "NumberField", "embedding", "parse_field",
    "Poly", "factor", "is_irreducible", "triple_sum_free",
]
