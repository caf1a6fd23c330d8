"""
Shared fixtures for the drinfeld_open test suite.
"""
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from drinfeld_open.algebra.fields import GF
from drinfeld_open.algebra.polys import PolyRing
from drinfeld_open.algebra.ratfunc import PrimeOfA
from drinfeld_open.drinfeld.io import read_module

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running exhaustive check (deselect with -m 'not slow')")


@pytest.fixture
def A3():
    """F_3[T]."""
    return PolyRing(GF(3), "T")


@pytest.fixture
def prime_T(A3):
    """The prime (T) of F_3[T]."""
    return PrimeOfA(A3, (0, 1))


@pytest.fixture
def reference_family():
    """phi_T = s*tau + tau^2 over F_3(s)."""
    return read_module(os.path.join(DATA_DIR, "reference_family.json"))
