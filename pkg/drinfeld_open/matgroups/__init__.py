from .closure import (
    DEFAULT_CLOSURE_CAP,
    CongruenceClosure,
    PairArith,
    TruncArith,
    bfs_closure,
    closure,
    elementary,
    level_one,
    packed_keys,
    sl_generators,
)
from .filtration import (
    FiltrationProfile,
    StrongApproxVerdict,
    det_batch,
    filtration_profile,
    verify_strong_approx,
)
from .goursat import GoursatResult, frobenius_twist, goursat_analyze, recover_isomorphism
from .lie import (
    SubmoduleLattice,
    bracket_span,
    bracket_span_of,
    gl_basis,
    invariant_subgroups,
    pgl_sl_bracket_span,
    sl_basis,
)
from .orders import (
    REGIME_MIN_FIELD,
    FieldBoundVerdict,
    exhaustive_sl_count,
    field_bound_check,
    group_order,
    sl_order,
)
from .traces import (
    LadderElement,
    char2_trad_identity,
    is_square_truncation,
    lift_constant,
    scalar_layer_square_map,
    square_map_is_bijective,
    tr_ad,
    tr_ad_from_charpoly,
    trace_criterion_1,
    trace_criterion_2,
    trace_homomorphism,
)

__all__ = [
    "DEFAULT_CLOSURE_CAP",
    "REGIME_MIN_FIELD",
    "CongruenceClosure",
    "FieldBoundVerdict",
    "FiltrationProfile",
    "GoursatResult",
    "LadderElement",
    "PairArith",
    "StrongApproxVerdict",
    "SubmoduleLattice",
    "TruncArith",
    "bfs_closure",
    "bracket_span",
    "bracket_span_of",
    "char2_trad_identity",
    "closure",
    "det_batch",
    "elementary",
    "exhaustive_sl_count",
    "field_bound_check",
    "filtration_profile",
    "frobenius_twist",
    "gl_basis",
    "goursat_analyze",
    "group_order",
    "invariant_subgroups",
    "is_square_truncation",
    "level_one",
    "lift_constant",
    "packed_keys",
    "pgl_sl_bracket_span",
    "recover_isomorphism",
    "scalar_layer_square_map",
    "sl_basis",
    "sl_generators",
    "sl_order",
    "square_map_is_bijective",
    "tr_ad",
    "tr_ad_from_charpoly",
    "trace_criterion_1",
    "trace_criterion_2",
    "trace_homomorphism",
    "verify_strong_approx",
]
