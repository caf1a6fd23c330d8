"""
Tests for trace samples, the trace-ring criteria, the place sweep and the
certification report.
"""
import json
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from drinfeld_open.algebra.fields import GF
from drinfeld_open.algebra.polys import PolyRing
from drinfeld_open.algebra.ratfunc import Frac, PrimeOfA
from drinfeld_open.drinfeld.frobenius import FrobeniusData
from drinfeld_open.drinfeld.io import loads_module
from drinfeld_open.errors import CharacteristicPrimeError, InvariantViolation
from drinfeld_open.logs import RunLog
from drinfeld_open.metrics.tracker import SweepTracker
from drinfeld_open.surjcert.certify import CERTIFIED, EXCLUDED, ROUTE_FULL, CertifyOptions, certify
from drinfeld_open.surjcert.criteria import (
    TRAD_F,
    TRAD_F2,
    TRAD_UNDETERMINED,
    TraceSample,
    check_p_independence,
    depth2_generation,
    even_degree_samples,
    expansions,
    f_in_A,
    f_nonvanishing_scan,
    pairwise_trace_surjectivity,
    residual_trace_surjectivity,
    trad_field_detect,
    trad_of,
)
from drinfeld_open.surjcert.report import SCHEMA_KEYS, report_to_json, write_report
from drinfeld_open.surjcert.sweep import collect_frobenius


def _sample(prime_T, num, den=(1,), deg=1, place="p"):
    return TraceSample(place, deg, Frac(num, den), prime_T)


@pytest.fixture
def tau_squared_data(A3, prime_T):
    """f = X^2 - T, the Frobenius polynomial of phi_T = tau^2 over F_3."""
    return FrobeniusData("1:0", 1, A3, ((0, 2), (), (1,)), prime_T)


# ---------------------------------------------------------------------------
# Trace samples
# ---------------------------------------------------------------------------

def test_trad_of_split_polynomial(A3, prime_T):
    """X^2 - (T+1) X + T: tr_ad = (T+1)^2 / T."""
    fd = FrobeniusData("x", 1, A3, ((0, 1), (2, 2), (1,)), prime_T)
    sample = trad_of(fd)
    assert sample.value == Frac((1, 2, 1), (0, 1))
    assert sample.to_dict()["place"] == "x"


def test_trad_of_rejects_foreign_denominator(A3, prime_T):
    fd = FrobeniusData("x", 1, A3, ((1, 1), (1,), (1,)), prime_T)
    with pytest.raises(InvariantViolation):
        trad_of(fd)


# ---------------------------------------------------------------------------
# Residual and pairwise criteria
# ---------------------------------------------------------------------------

def test_residual_surjectivity(A3, prime_T):
    p = PrimeOfA(A3, (1, 0, 1))
    assert residual_trace_surjectivity([_sample(prime_T, (0, 1))], p)
    assert not residual_trace_surjectivity([_sample(prime_T, (0, 0, 1))], p), "T^2 = -1 lies in F_3"


def test_residual_rejects_characteristic_prime(prime_T):
    with pytest.raises(CharacteristicPrimeError):
        residual_trace_surjectivity([_sample(prime_T, (0, 1))], prime_T)


def test_pairwise_surjectivity(A3, prime_T):
    p1 = PrimeOfA(A3, (1, 0, 1))
    p2 = PrimeOfA(A3, (2, 1, 1))
    assert pairwise_trace_surjectivity([_sample(prime_T, (0, 1))], p1, p2)
    assert not pairwise_trace_surjectivity([_sample(prime_T, (1,))], p1, p2), "constants stay on the diagonal"
    with pytest.raises(ValueError):
        pairwise_trace_surjectivity([_sample(prime_T, (0, 1))], p1, p1)


# ---------------------------------------------------------------------------
# Depth-2 criteria
# ---------------------------------------------------------------------------

def test_expansion_at_t_plus_one(A3, prime_T):
    """T = -1 + (T + 1)."""
    p = PrimeOfA(A3, (1, 1))
    assert expansions([_sample(prime_T, (0, 1))], p, 2) == [((2,), (1,))]


def test_depth2_full_mode(A3, prime_T):
    p = PrimeOfA(A3, (1, 1))
    assert depth2_generation([_sample(prime_T, (0, 1))], p, "full")
    assert not depth2_generation([_sample(prime_T, (2,))], p, "full")
    with pytest.raises(ValueError):
        depth2_generation([_sample(prime_T, (0, 1))], p, "cubes")
    with pytest.raises(ValueError):
        depth2_generation([_sample(prime_T, (0, 1))], p, "squares")


def test_depth2_squares_mode_char2():
    A = PolyRing(GF(2), "T")
    p0 = PrimeOfA(A, (0, 1))
    p = PrimeOfA(A, (1, 1))
    square = TraceSample("x", 2, Frac((0, 0, 1), (1,)), p0)  # T^2 = 1 + (T+1)^2
    assert depth2_generation([square], p, "squares")
    assert not depth2_generation([TraceSample("y", 2, Frac((0, 1), (1,)), p0)], p, "squares")


def test_even_degree_samples(prime_T):
    samples = [_sample(prime_T, (0, 1), deg=d, place=str(d)) for d in (1, 2, 3, 4)]
    assert [s.place for s in even_degree_samples(samples)] == ["2", "4"]


def test_trad_field_detect(prime_T):
    square = _sample(prime_T, (0, 0, 1))
    assert trad_field_detect([square]) == TRAD_F2
    assert trad_field_detect([square, _sample(prime_T, (0, 1))]) == TRAD_F
    assert trad_field_detect([]) == TRAD_UNDETERMINED


# ---------------------------------------------------------------------------
# Eigenvalue relation at Frobenius
# ---------------------------------------------------------------------------

def test_f_in_a(tau_squared_data):
    """f = 4 b_2 - b_1^2 = -4T = -T in F_3[T]."""
    assert f_in_A(tau_squared_data, 1) == (0, 2)
    assert f_in_A(tau_squared_data, 2) == (), "Frob^2 = T is scalar"


def test_p_independence(A3, tau_squared_data):
    primes = [PrimeOfA(A3, (1, 1)), PrimeOfA(A3, (2, 1)), PrimeOfA(A3, (1, 0, 1))]
    checks = check_p_independence(tau_squared_data, 1, primes)
    assert checks == {"T + 1": True, "T + 2": True, "T^2 + 1": True}


def test_f_nonvanishing_scan(A3, prime_T, tau_squared_data):
    p = PrimeOfA(A3, (1, 1))
    witness = f_nonvanishing_scan([tau_squared_data], 1, p)
    assert witness.place == "1:0"
    assert witness.value == (0, 2)
    assert f_nonvanishing_scan([tau_squared_data], 2, p) is None
    with pytest.raises(ValueError):
        f_nonvanishing_scan([tau_squared_data], 0, p)
    with pytest.raises(CharacteristicPrimeError):
        f_nonvanishing_scan([tau_squared_data], 1, prime_T)


# ---------------------------------------------------------------------------
# Sweep
# ---------------------------------------------------------------------------

def test_sweep_reference_family(reference_family):
    tracker = SweepTracker()
    log = RunLog()
    result = collect_frobenius(reference_family, 2, tracker=tracker, log=log)
    assert len(result) == 6
    assert not result.bad
    assert len(tracker) == 6
    assert tracker.get_summary()["places_by_degree"] == {"1": 3, "2": 3}
    assert all(fd.n == 2 for fd in result)
    assert sum(e["event"] == "sweep.place" for e in log.entries) == 6


def test_sweep_counts_bad_places():
    family = loads_module(json.dumps({"name": "bad", "q": 3, "base": "rational", "m_or_var": "s",
                                      "rank": 2, "phiT": ["0", "1", "s"]}))
    result = collect_frobenius(family, 1)
    assert len(result.bad) == 1
    assert len(result) == 2


def test_sweep_validation(reference_family):
    with pytest.raises(ValueError):
        collect_frobenius(reference_family, 0)
    iso = loads_module(json.dumps({"name": "iso", "q": 3, "base": "rational", "m_or_var": "s",
                                   "rank": 2, "phiT": ["0", "1", "1"]}))
    with pytest.warns(RuntimeWarning):
        collect_frobenius(iso, 1)


# ---------------------------------------------------------------------------
# Certification
# ---------------------------------------------------------------------------

def test_certify_small_primes_are_excluded(reference_family):
    report = certify(reference_family, 1, 1)
    assert [e.status for e in report.primes] == [EXCLUDED] * 3
    assert report.entry("T").reason == "characteristic prime"
    assert report.certified == []
    assert report.pairs == []
    assert report.meta["p0"] == "T"


def test_certify_needs_special_characteristic():
    generic = loads_module(json.dumps({"name": "g", "q": 3, "base": "rational", "m_or_var": "s",
                                       "rank": 2, "phiT": ["s", "1", "1"]}))
    with pytest.raises(ValueError):
        certify(generic, 1, 1)


def test_certify_zero_prime_bound(reference_family):
    assert certify(reference_family, 0, 1).primes == []
    with pytest.raises(ValueError):
        certify(reference_family, -1, 1)


def test_squares_mode_falls_back_in_odd_characteristic(reference_family):
    with pytest.warns(RuntimeWarning):
        report = certify(reference_family, 1, 1, CertifyOptions(mode="squares"))
    assert report.meta["mode"] == "full"
    assert any("squares mode" in a for a in report.meta["anomalies"])


def test_report_json_layout(reference_family, tmp_path):
    report = certify(reference_family, 1, 1, CertifyOptions(seed=5))
    text = report_to_json(report, {"command": "certify"})
    data = json.loads(text)
    assert list(data) == list(SCHEMA_KEYS) + ["meta"]
    assert data["meta"]["seed"] == 5
    assert data["meta"]["run"] == {"command": "certify"}
    path = tmp_path / "out" / "report.json"
    assert write_report(report, str(path), {"command": "certify"}) == text
    assert path.read_text(encoding="utf-8") == text


def test_certify_reference_family_degree_three(reference_family):
    report = certify(reference_family, 3, 4)
    cubic = [e for e in report.primes if e.prime.deg == 3]
    assert len(cubic) == 8
    assert all(e.status == CERTIFIED for e in cubic)
    assert all(e.residual and e.depth2 and e.f_witness is not None for e in cubic)
    assert all(e.status == EXCLUDED for e in report.primes if e.prime.deg < 3)
    assert sorted(report.certified) == sorted(e.prime.format() for e in cubic)
    assert report.meta["routes"] == {e.prime.format(): ROUTE_FULL for e in cubic}
    assert report_to_json(report) == report_to_json(certify(reference_family, 3, 4))
