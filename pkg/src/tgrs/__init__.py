"""Twisted generalized Reed-Solomon codes over finite fields.

Finite fields and polynomials (``gf``), exact linear algebra (``fla``),
linear-code parameters (``code``), TGRS instances (``twisted``), closed-form
self-orthogonality and MDS criteria (``criteria``) and parametric
constructions (``recipes``).
"""

from .code import (
    CodeReport,
    LinearCode,
    QuantumParams,
    classify,
    dual,
    hull_dim,
    is_self_dual,
    is_self_orthogonal,
    min_distance,
    quantum_derive,
)
from .criteria import check_block_so, check_line_so, check_so, gram_is_zero, is_mds, minors_nonzero
from .errors import TGRSError
from .fla import MatrixGF
from .gf import GF, Field, FieldElement, Polynomial, embed, splitting_field, sqrt
from .recipes import RECIPE_IDS, Construction, Recipe, construct, construct_full, verify_recipe
from .twisted import EvalData, TGRSInstance, TwistMatrix, eval_data, reduce_leading_coeff

__all__ = [
    "GF",
    "RECIPE_IDS",
    "CodeReport",
    "Construction",
    "EvalData",
    "Field",
    "FieldElement",
    "LinearCode",
    "MatrixGF",
    "Polynomial",
    "QuantumParams",
    "Recipe",
    "TGRSError",
    "TGRSInstance",
    "TwistMatrix",
    "check_block_so",
    "check_line_so",
    "check_so",
    "classify",
    "construct",
    "construct_full",
    "dual",
    "embed",
    "eval_data",
    "gram_is_zero",
    "hull_dim",
    "is_mds",
    "is_self_dual",
    "is_self_orthogonal",
    "min_distance",
    "minors_nonzero",
    "quantum_derive",
    "reduce_leading_coeff",
    "sqrt",
    "splitting_field",
    "verify_recipe",
]
