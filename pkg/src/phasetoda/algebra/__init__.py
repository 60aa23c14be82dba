from .multipoly import (
    MultiPoly,
    ONE,
    ZERO,
    coeff_extract,
    grevlex_key,
    mpoly_arith,
    mpoly_diff,
    mpoly_eval,
    poly_vars,
    var_key,
)
from .matrix import RingMatrix, det_cofactor, det_exact
from .ratio import RatioMatrix, RatioPoly, reduce_pair

__all__ = [
    "MultiPoly",
    "ONE",
    "ZERO",
    "RingMatrix",
    "RatioMatrix",
    "RatioPoly",
    "coeff_extract",
    "det_cofactor",
    "det_exact",
    "grevlex_key",
    "mpoly_arith",
    "mpoly_diff",
    "mpoly_eval",
    "poly_vars",
    "reduce_pair",
    "var_key",
]
