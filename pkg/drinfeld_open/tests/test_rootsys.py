"""
Tests for root systems, Weyl orbits and the orbit classification check.
"""
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from drinfeld_open.errors import ClosureIncompleteError
from drinfeld_open.rootsys.orbits import (
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
from drinfeld_open.rootsys.systems import CATALOG, root_system, vec


@pytest.mark.parametrize("label,roots,order", [
    ("A2", 6, 6),
    ("A3", 12, 24),
    ("B2", 8, 8),
    ("G2", 12, 12),
    ("D4", 24, 192),
    ("A1xA1", 4, 4),
])
def test_root_counts_and_weyl_orders(label, roots, order):
    sys_ = root_system(label)
    assert len(sys_.roots) == roots
    assert weyl_group_order(sys_) == order


@pytest.mark.parametrize("label", ["E8", "D3", "B1", "X2", "A"])
def test_unknown_labels_rejected(label):
    with pytest.raises(ValueError):
        root_system(label)


def test_type_a_canonical_form():
    A2 = root_system("A2")
    assert A2.canonical(vec(1, 2, 3)) == vec(-2, -1, 0)


def test_standard_orbit_in_a2():
    orbit = weyl_orbit(root_system("A2"), (1, 0, 0))
    assert len(orbit) == 3
    assert check_conditions(orbit) == (True, True, True)
    assert is_standard_orbit(orbit)
    assert vec(0, 0, 1) in orbit
    assert orthogonal_pair_property(orbit) == []


def test_negative_standard_orbit():
    """(1, 1, 0) = -e_2 modulo the diagonal."""
    assert is_standard_orbit(weyl_orbit(root_system("A2"), (1, 1, 0)))


def test_b2_short_roots_fail_two_two():
    orbit = weyl_orbit(root_system("B2"), (1, 0))
    assert len(orbit) == 4
    assert not check_conditions(orbit).b
    assert two_two_relation(orbit) is not None
    assert orthogonal_pair_property(orbit), "e1 meets both e1 + e2 and e1 - e2"


def test_a2_regular_orbit_has_three_three_relation():
    orbit = weyl_orbit(root_system("A2"), (0, 1, 3))
    assert len(orbit) == 6
    assert not check_conditions(orbit).c
    relation = three_three_relation(orbit)
    assert len(set(relation)) == 6
    assert not is_standard_orbit(orbit)


def test_orbit_cap():
    with pytest.raises(ClosureIncompleteError):
        weyl_orbit(root_system("A3"), (3, 2, 1, 0), cap=10)


def test_orbit_dimension_checked():
    with pytest.raises(ValueError):
        weyl_orbit(root_system("A2"), (1, 0))


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2", "A1xA1"])
def test_verify_small_systems(label):
    verdict = verify_system(root_system(label), radius=2)
    assert not verdict.counterexamples
    assert verdict.orthogonality_violations == 0
    assert verdict.orbits > 0


def test_type_a_has_standard_orbits():
    verdict = verify_system(root_system("A3"), radius=1)
    assert verdict.standard_orbits >= 2, "c = 1 and c = -1"


def test_non_type_a_has_no_ab_orbits():
    assert verify_system(root_system("B2"), radius=2).ab_orbits == 0


@pytest.mark.slow
def test_verify_full_catalog():
    table = verify_main_theorem(CATALOG, radius=2)
    assert table.ok
    assert [row["system"] for row in table.to_dict()["systems"]] == list(CATALOG)
