from .orbits import (
    Conditions,
    SystemVerdict,
    VerdictTable,
    WeightOrbit,
    check_conditions,
    is_standard_orbit,
    orthogonal_pair_property,
    three_three_relation,
    two_two_relation,
    verify_main_theorem,
    verify_system,
    weyl_group_order,
    weyl_orbit,
)
from .systems import CATALOG, RootSystem, catalog, root_system, vec

__all__ = [
    "CATALOG",
    "Conditions",
    "RootSystem",
    "SystemVerdict",
    "VerdictTable",
    "WeightOrbit",
    "catalog",
    "check_conditions",
    "is_standard_orbit",
    "orthogonal_pair_property",
    "root_system",
    "three_three_relation",
    "two_two_relation",
    "vec",
    "verify_main_theorem",
    "verify_system",
    "weyl_group_order",
    "weyl_orbit",
]
