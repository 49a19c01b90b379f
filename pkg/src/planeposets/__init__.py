"""Exact computations in the four-parameter deformed Hopf algebras of plane posets.

>>> from planeposets import parse_poset, product_q
>>> print(product_q(parse_poset("p:1"), parse_poset("p:1")))
(q1 + q2) p:12 + (q3 + q4) p:21
"""

from .algebra import (
    braid, concat_product, coproduct_q, counit, multiply, over_product, product_q, reduced_coproduct,
    specialize, tensor_map, transform_combo, upsilon,
)
from .combo import PermCombo, PermTensorCombo, PosetCombo, TensorCombo
from .fqsym import (
    coproduct_q as fqsym_coproduct, pair_q, parse_perm, format_perm, perm_inverse, perm_length,
    shuffle_product, theta,
)
from .pairing import (
    GramMatrix, Pairing, gram, gram_det, min_partner, pair, pair_first, pair_second, s_prime_set, s_set,
)
from .poset import (
    EMPTY, GROUP, PlanePoset, compose, concat, enumerate_posets, format_poset, from_perm, h_components,
    ideal_kind, is_forest, is_wn, linear_extensions, over, parse_poset, r_components, rel, restrict, stat,
    to_perm, transform,
)
from .qpoly import GENERIC, ONE, Q1, Q2, Q3, Q4, T, ZERO, QPoly, parse_poly, poly_canonical_string
from .verify import VerifyReport, verify

__all__ = [
    "braid", "concat_product", "coproduct_q", "counit", "multiply", "over_product", "product_q",
    "reduced_coproduct", "specialize", "tensor_map", "transform_combo", "upsilon",
    "PermCombo", "PermTensorCombo", "PosetCombo", "TensorCombo",
    "fqsym_coproduct", "pair_q", "parse_perm", "format_perm", "perm_inverse", "perm_length",
    "shuffle_product", "theta",
    "GramMatrix", "Pairing", "gram", "gram_det", "min_partner", "pair", "pair_first", "pair_second",
    "s_prime_set", "s_set",
    "EMPTY", "GROUP", "PlanePoset", "compose", "concat", "enumerate_posets", "format_poset", "from_perm",
    "h_components", "ideal_kind", "is_forest", "is_wn", "linear_extensions", "over", "parse_poset",
    "r_components", "rel", "restrict", "stat", "to_perm", "transform",
    "GENERIC", "ONE", "Q1", "Q2", "Q3", "Q4", "T", "ZERO", "QPoly", "parse_poly", "poly_canonical_string",
    "VerifyReport", "verify",
]
