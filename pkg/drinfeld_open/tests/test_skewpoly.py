"""
Tests for the twisted polynomial ring K{tau}.
"""
import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from drinfeld_open.algebra.quotients import build_extension
from drinfeld_open.errors import DependencyError, RingMismatchError, ZeroPolynomialError
from drinfeld_open.skew.skewpoly import (
    SkewRing,
    annihilator_of_subspace,
    as_matrix,
    eval_additive,
    kernel_basis,
    right_divmod,
    right_gcd,
)


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------

@pytest.fixture
def K():
    """F_9 over F_3."""
    return build_extension(3, 2)


@pytest.fixture
def S(K):
    return SkewRing(K, 3)


def _random_skew(S, K, deg, rng):
    return S([K.random_element(rng) for _ in range(deg)] + [K.one])


# ---------------------------------------------------------------------------
# Multiplication
# ---------------------------------------------------------------------------

def test_commutation_rule(S, K):
    """tau * c = c^q * tau."""
    z = K.generator
    assert S.tau * S.const(z) == S.monomial(K.qth_power(z), 1)
    assert S.const(z) * S.tau == S.monomial(z, 1)


def test_multiplication_is_associative(S, K):
    rng = random.Random(1)
    for _ in range(10):
        a, b, c = (_random_skew(S, K, d, rng) for d in (1, 2, 3))
        assert (a * b) * c == a * (b * c)


def test_product_acts_as_composition(S, K):
    rng = random.Random(2)
    a, b = _random_skew(S, K, 2, rng), _random_skew(S, K, 1, rng)
    for x in K.elements():
        assert eval_additive(a * b, x) == eval_additive(a, eval_additive(b, x))


def test_mixed_rings_rejected(S):
    other = SkewRing(build_extension(3, 3), 3)
    with pytest.raises(RingMismatchError):
        S.tau * other.tau


# ---------------------------------------------------------------------------
# Division
# ---------------------------------------------------------------------------

def test_right_divmod_identity(S, K):
    rng = random.Random(3)
    for _ in range(10):
        a, b = _random_skew(S, K, 4, rng), _random_skew(S, K, 2, rng)
        quo, rem = right_divmod(a, b)
        assert quo * b + rem == a
        assert rem.degree < b.degree


def test_division_by_zero(S):
    with pytest.raises(ZeroPolynomialError):
        right_divmod(S.tau, S.zero)


def test_right_gcd(S, K):
    minus_one = K.neg(K.one)
    a = S([minus_one, K.zero, K.one])  # tau^2 - 1 = (tau + 1)(tau - 1)
    b = S([minus_one, K.one])
    assert right_gcd(a, b) == b


# ---------------------------------------------------------------------------
# Kernels and annihilators
# ---------------------------------------------------------------------------

def test_kernel_of_tau_minus_one(S, K):
    """ker(tau - 1) on F_9 is F_3."""
    basis = kernel_basis(S([K.neg(K.one), K.one]), K)
    assert len(basis) == 1
    assert K.in_base(basis[0])


def test_annihilator_of_whole_field(S, K):
    f = annihilator_of_subspace([K.one, K.generator], K)
    assert f == S([K.neg(K.one), K.zero, K.one]), f"expected tau^2 - 1, got {f.format()}"
    for x in K.elements():
        assert eval_additive(f, x) == K.zero


def test_annihilator_rejects_dependent_input(K):
    with pytest.raises(DependencyError):
        annihilator_of_subspace([K.one, K.one], K)


def test_frobenius_matrix_has_order_two(S, K):
    M = as_matrix(S.tau, K)
    n = len(M)
    square = [[K.base.sum(K.base.mul(M[i][k], M[k][j]) for k in range(n)) for j in range(n)] for i in range(n)]
    assert square == [[int(i == j) for j in range(n)] for i in range(n)]
