from .relation import (
    FLAGS,
    EigenRelReport,
    NonvanishingResult,
    diagonal_scan,
    eval_symbolic_f,
    f_of_matrix,
    f_value,
    nonvanishing_search,
    random_gl_sampler,
    symbolic_f,
)

__all__ = [
    "FLAGS",
    "EigenRelReport",
    "NonvanishingResult",
    "diagonal_scan",
    "eval_symbolic_f",
    "f_of_matrix",
    "f_value",
    "nonvanishing_search",
    "random_gl_sampler",
    "symbolic_f",
]
