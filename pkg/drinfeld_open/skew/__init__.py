from .skewpoly import (
    SkewPoly,
    SkewRing,
    annihilator_of_subspace,
    as_matrix,
    eval_additive,
    kernel_basis,
    right_divmod,
    right_gcd,
    skew_add,
    skew_mul,
    skew_sub,
)

__all__ = [
    "SkewPoly",
    "SkewRing",
    "annihilator_of_subspace",
    "as_matrix",
    "eval_additive",
    "kernel_basis",
    "right_divmod",
    "right_gcd",
    "skew_add",
    "skew_mul",
    "skew_sub",
]
