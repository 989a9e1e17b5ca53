"""Exact construction and verification of pfaffian representations of plane curves."""

from .field import GF, QQ, parse_field
from .poly import MPoly, Poly, parse_mpoly, parse_poly
from .skew import (
    SkewPolyMatrix,
    congruence,
    pfaffian,
    pfaffian_adjoint,
    pfaffian_matchings_oracle,
    pfaffian_minor,
    rank_at_point,
)

__all__ = [
    "GF",
    "QQ",
    "MPoly",
    "Poly",
    "SkewPolyMatrix",
    "congruence",
    "parse_field",
    "parse_mpoly",
    "parse_poly",
    "pfaffian",
    "pfaffian_adjoint",
    "pfaffian_matchings_oracle",
    "pfaffian_minor",
    "rank_at_point",
]
