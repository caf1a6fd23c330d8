from .endomorphisms import endomorphisms_up_to, frobenius_as_element
from .family import BadReduction, Place, is_isotrivial, places_of_degree, places_up_to, specialize
from .frobenius import (
    FrobeniusData,
    NewtonReport,
    charpoly_frobenius,
    charpoly_power,
    frobenius_norm,
    frobenius_trace,
    newton_check,
    rank2_ab,
    torsion_charpoly,
)
from .io import dumps_module, loads_module, parse_place, read_module, write_module
from .isogeny import IsogenyResult, isogeny_from_endomorphism
from .module import DrinfeldModule, characteristic, height, phi_of
from .motive import frobenius_on_motive, motive_charpoly, tau_matrix
from .torsion import TorsionBasis, frobenius_matrix_mod, torsion_basis, torsion_field_degree

__all__ = [
    "BadReduction",
    "DrinfeldModule",
    "FrobeniusData",
    "IsogenyResult",
    "NewtonReport",
    "Place",
    "TorsionBasis",
    "characteristic",
    "charpoly_frobenius",
    "charpoly_power",
    "dumps_module",
    "endomorphisms_up_to",
    "frobenius_as_element",
    "frobenius_matrix_mod",
    "frobenius_norm",
    "frobenius_on_motive",
    "frobenius_trace",
    "height",
    "is_isotrivial",
    "isogeny_from_endomorphism",
    "loads_module",
    "motive_charpoly",
    "newton_check",
    "parse_place",
    "phi_of",
    "places_of_degree",
    "places_up_to",
    "rank2_ab",
    "read_module",
    "specialize",
    "tau_matrix",
    "torsion_basis",
    "torsion_charpoly",
    "torsion_field_degree",
    "write_module",
]
