"""
Tests for Drinfeld modules, Frobenius polynomials, module files and families.
"""
import json
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from drinfeld_open.drinfeld.endomorphisms import endomorphisms_up_to, frobenius_as_element
from drinfeld_open.drinfeld.family import BadReduction, is_isotrivial, places_of_degree, places_up_to, specialize
from drinfeld_open.drinfeld.frobenius import (
    FrobeniusData,
    charpoly_frobenius,
    charpoly_power,
    crt_modulus_needed,
    crt_schedule,
    newton_check,
    rank2_ab,
)
from drinfeld_open.drinfeld.io import dumps_module, loads_module, parse_place
from drinfeld_open.drinfeld.isogeny import isogeny_from_endomorphism
from drinfeld_open.drinfeld.module import DrinfeldModule, characteristic, height, phi_of
from drinfeld_open.drinfeld.torsion import torsion_cap
from drinfeld_open.errors import ExtensionCapError, InvariantViolation, ModuleFileError

ONE = (1,)
ZERO = ()


def _family_text(**changes):
    data = {"name": "fam", "q": 3, "base": "rational", "m_or_var": "s", "rank": 2, "phiT": ["0", "s", "1"]}
    data.update(changes)
    return json.dumps(data, indent=2)


# ---------------------------------------------------------------------------
# Module basics
# ---------------------------------------------------------------------------

def test_rank_and_phi_of():
    phi = DrinfeldModule.over_finite(3, 2, [ZERO, ONE])
    assert phi.rank == 1
    assert phi.m == 2
    assert phi_of(phi, (0, 0, 1)) == phi.skew_ring.monomial(phi.K.one, 2)


def test_leading_zero_coefficients_are_stripped():
    phi = DrinfeldModule.over_finite(3, 1, [ZERO, ONE, ZERO])
    assert phi.rank == 1
    with pytest.raises(ValueError):
        DrinfeldModule.over_finite(3, 1, [ONE])


def test_characteristic_over_finite_base():
    phi = DrinfeldModule.over_finite(3, 2, [ZERO, ONE])
    assert characteristic(phi).pi == (0, 1)
    K = phi.K
    psi = DrinfeldModule(K, (K.generator, K.one))
    p0 = characteristic(psi)
    assert p0.deg == 2, "gamma(T) generates F_9"


def test_characteristic_of_families(reference_family):
    assert characteristic(reference_family).pi == (0, 1)
    generic = loads_module(_family_text(phiT=["s", "1"], rank=1))
    assert characteristic(generic) is None


def test_height():
    supersingular = DrinfeldModule.over_finite(3, 1, [ZERO, ZERO, ONE])
    ordinary = DrinfeldModule.over_finite(3, 1, [ZERO, ONE, ONE])
    assert height(supersingular) == 2
    assert height(ordinary) == 1


# ---------------------------------------------------------------------------
# Frobenius polynomials
# ---------------------------------------------------------------------------

def test_rank_one_charpoly():
    """phi_T = tau over F_9: Frob = tau^2 = phi_{T^2}."""
    phi = DrinfeldModule.over_finite(3, 2, [ZERO, ONE])
    fd = charpoly_frobenius(phi, method="both")
    assert fd.coeffs == ((0, 0, 2), (1,))
    assert frobenius_as_element(phi) == (0, 0, 1)
    assert newton_check(fd).n_x == 1


def test_tau_squared_charpoly():
    """phi_T = tau^2 over F_3: Frob^2 = T, so f = X^2 - T."""
    phi = DrinfeldModule.over_finite(3, 1, [ZERO, ZERO, ONE])
    for method in ("motive", "torsion", "both"):
        fd = charpoly_frobenius(phi, method=method)
        assert fd.coeffs == ((0, 2), (), (1,)), f"method {method} gave {fd.format()}"
    report = newton_check(fd)
    assert report.ok
    assert report.n_x == 2
    assert rank2_ab(fd) == ((), (0, 2))


def test_charpoly_rejects_unknown_method():
    phi = DrinfeldModule.over_finite(3, 1, [ZERO, ONE])
    with pytest.raises(ValueError):
        charpoly_frobenius(phi, method="guess")


@pytest.mark.parametrize("phiT", [
    [ZERO, ONE, ONE],
    [ONE, ZERO, ONE],
    [(2,), ONE, ONE],
])
def test_motive_and_torsion_agree_over_f9(phiT):
    phi = DrinfeldModule.over_finite(3, 2, phiT)
    fd = charpoly_frobenius(phi, method="both")
    assert fd.n == 2
    assert newton_check(fd).ok


GEN = (0, 1)


@pytest.mark.parametrize("q, m, phiT", [
    (2, 4, [ZERO, ONE, ZERO, ONE]),
    (3, 3, [ONE, ZERO, ONE]),
    (3, 4, [ZERO, ONE, ONE]),
    (3, 4, [GEN, ONE, ZERO, ONE]),
])
def test_motive_and_torsion_agree_over_larger_fields(q, m, phiT):
    phi = DrinfeldModule.over_finite(q, m, phiT)
    fd = charpoly_frobenius(phi, method="both")
    assert fd.n == len(phiT) - 1
    assert newton_check(fd).ok
    assert fd.moduli


@pytest.mark.parametrize("n, m, need", [(1, 4, 1), (2, 2, 2), (2, 4, 3), (3, 4, 3), (3, 3, 3)])
def test_crt_modulus_needed(n, m, need):
    assert crt_modulus_needed(n, m) == need


def test_torsion_cap_is_sized_to_the_module():
    assert torsion_cap(DrinfeldModule.over_finite(3, 1, [ZERO, ONE])) == 64
    assert torsion_cap(DrinfeldModule.over_finite(3, 4, [GEN, ONE, ZERO, ONE])) == 4 * 26


def test_crt_schedule_reaches_the_needed_modulus():
    phi = DrinfeldModule.over_finite(3, 4, [GEN, ONE, ZERO, ONE])
    schedule = crt_schedule(phi)
    assert sum(level * prime.deg for prime, level, _ in schedule) >= crt_modulus_needed(3, 4)
    assert all(field_deg <= torsion_cap(phi) for _, _, field_deg in schedule)
    assert characteristic(phi).pi not in [prime.pi for prime, _, _ in schedule]
    assert len({prime.pi for prime, _, _ in schedule}) == len(schedule)


def test_crt_schedule_over_the_cap_raises():
    phi = DrinfeldModule.over_finite(3, 4, [ZERO, ONE, ONE])
    with pytest.warns(RuntimeWarning, match="over the cap"), pytest.raises(ExtensionCapError):
        crt_schedule(phi, cap=phi.m - 1)
    with pytest.raises(ExtensionCapError):
        charpoly_frobenius(phi, method="torsion", cap=phi.m - 1)


def test_newton_check_flags_wrong_polynomial(A3, prime_T):
    fd = FrobeniusData("2:bogus", 2, A3, ((0, 2), (1,)), prime_T)
    report = newton_check(fd, strict=False)
    assert not report.ok
    with pytest.raises(InvariantViolation):
        newton_check(fd)


def test_charpoly_power(A3):
    coeffs = ((0, 2), (1,))  # X - T
    assert charpoly_power(A3, coeffs, 3) == ((0, 0, 0, 2), (1,))
    with pytest.raises(ValueError):
        charpoly_power(A3, coeffs, 0)


# ---------------------------------------------------------------------------
# Endomorphisms and isogenies
# ---------------------------------------------------------------------------

def test_endomorphisms_of_tau_squared():
    """Over F_9, every constant and every c*tau commutes with tau^2."""
    phi = DrinfeldModule.over_finite(3, 2, [ZERO, ZERO, ONE])
    assert len(endomorphisms_up_to(phi, 0)) == 2
    assert len(endomorphisms_up_to(phi, 1)) == 4
    for u in endomorphisms_up_to(phi, 2):
        assert u * phi.phi_T == phi.phi_T * u


def test_frobenius_as_element_needs_rank_one():
    phi = DrinfeldModule.over_finite(3, 1, [ZERO, ONE, ONE])
    with pytest.raises(ValueError):
        frobenius_as_element(phi)


def test_isogeny_from_phi_t():
    """The kernel of phi_{T+1} gives back phi itself."""
    phi = DrinfeldModule.over_finite(3, 1, [ZERO, ONE, ONE])
    result = isogeny_from_endomorphism(phi, [phi.phi_T], (1, 1), samples=[(0, 1), (1, 0, 1)])
    assert result.degree == 2
    assert result.target.phiT == phi.phiT
    assert len(result.kernel) == 2


# ---------------------------------------------------------------------------
# Module files
# ---------------------------------------------------------------------------

def test_reference_family_reads(reference_family):
    assert reference_family.rank == 2
    assert not reference_family.is_finite
    assert reference_family.q == 3


def test_module_file_round_trip(reference_family):
    text = dumps_module(reference_family)
    assert dumps_module(loads_module(text)) == text


def test_missing_field_reported():
    data = json.loads(_family_text())
    del data["rank"]
    with pytest.raises(ModuleFileError) as exc_info:
        loads_module(json.dumps(data))
    assert exc_info.value.field == "rank"


def test_rank_mismatch_has_line():
    with pytest.raises(ModuleFileError) as exc_info:
        loads_module(_family_text(rank=3))
    assert exc_info.value.field == "rank"
    assert exc_info.value.line == 6


@pytest.mark.parametrize("bad", ["s^", "x", "5*s"])
def test_bad_coefficient_reported(bad):
    with pytest.raises(ModuleFileError) as exc_info:
        loads_module(_family_text(phiT=["0", bad, "1"]))
    assert exc_info.value.field == "phiT[1]"


def test_malformed_json():
    with pytest.raises(ModuleFileError):
        loads_module("{ not json")


# ---------------------------------------------------------------------------
# Places and specialization
# ---------------------------------------------------------------------------

def test_parse_place():
    place = parse_place("2:z+1", 3)
    assert place.degree == 2
    assert place.label == "2:z+1"
    for spec in ("x", "0:1", "2:w"):
        with pytest.raises(ModuleFileError):
            parse_place(spec, 3)


def test_place_counts():
    assert len(places_up_to(3, 2)) == 6
    assert len(list(places_of_degree(2, 3))) == 2


def test_specialize_reference_family(reference_family):
    reduced = specialize(reference_family, parse_place("1:0", 3))
    assert isinstance(reduced, DrinfeldModule)
    assert reduced.phiT == (ZERO, ZERO, ONE)


def test_bad_reduction():
    family = loads_module(_family_text(phiT=["0", "1", "s"]))
    result = specialize(family, parse_place("1:0", 3))
    assert isinstance(result, BadReduction)
    assert result.to_dict()["status"] == "bad_reduction"


def test_isotriviality(reference_family):
    assert not is_isotrivial(reference_family)
    assert is_isotrivial(loads_module(_family_text(phiT=["1", "1"], rank=1)))
