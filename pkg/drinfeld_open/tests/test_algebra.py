"""
Tests for the exact algebra layer.

Tests cover:
- Finite fields F_q and their extensions
- Polynomial arithmetic and factorization over F_q
- Primes of F_q[T], reductions and p-adic expansions
- Truncated rings k[u]/(u^m) and matrices over them
- Subring generation
"""
import os
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from drinfeld_open.algebra.fields import GF
from drinfeld_open.algebra.linalg import generated_subring, generates
from drinfeld_open.algebra.matrices import Mat, charpoly_mat, companion, inverse
from drinfeld_open.algebra.newton import newton_polygon, root_valuations
from drinfeld_open.algebra.polys import PolyRing, factor_unipoly, is_irreducible, roots
from drinfeld_open.algebra.quotients import build_extension, find_embedding
from drinfeld_open.algebra.ratfunc import (
    INFINITY,
    Frac,
    PrimeOfA,
    RationalFunctionField,
    enumerate_primes,
    is_square,
    pi_adic_expansion,
    primes_of_degree,
    valuation,
)
from drinfeld_open.algebra.rings import ProductRing, prime_power
from drinfeld_open.algebra.trunc import TruncRing
from drinfeld_open.errors import NotInvertibleError, NotPrimePowerError


# ---------------------------------------------------------------------------
# Fields
# ---------------------------------------------------------------------------

def test_prime_power_split():
    assert prime_power(9) == (3, 2)
    assert prime_power(16) == (2, 4)
    assert prime_power(13) == (13, 1)


@pytest.mark.parametrize("q", [1, 6, 12, 100])
def test_non_prime_power_rejected(q):
    with pytest.raises(NotPrimePowerError):
        GF(q)


def test_f4_arithmetic():
    """F_4 = F_2[x]/(x^2+x+1), codes are bit vectors."""
    F = GF(4)
    assert F.add(2, 3) == 1
    assert F.mul(2, 2) == 3, "x^2 should be x + 1"
    assert F.mul(2, 3) == 1


@pytest.mark.parametrize("q", [5, 8, 9, 25])
def test_inverses_and_frobenius(q):
    F = GF(q)
    for a in range(1, q):
        assert F.mul(a, F.inv(a)) == F.one
        assert F.frob_power(a, q) == a
    with pytest.raises(NotInvertibleError):
        F.inv(0)


def test_extension_field_order_and_frobenius():
    L = build_extension(2, 3)
    assert L.order == 8
    for a in L.elements():
        if a:
            assert L.pow(a, 7) == L.one
        assert L.qth_power(L.qth_power(L.qth_power(a))) == a


def test_embedding_is_multiplicative():
    src, dst = build_extension(2, 2), build_extension(2, 4)
    emb = find_embedding(src, dst)
    for a in src.elements():
        for b in src.elements():
            assert emb(src.mul(a, b)) == dst.mul(emb(a), emb(b))
            assert emb(src.add(a, b)) == dst.add(emb(a), emb(b))
        assert emb.preimage(emb(a)) == a


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

def test_poly_divmod_identity(A3):
    f = (1, 2, 0, 1)
    g = (1, 1)
    q, r = A3.divmod(f, g)
    assert A3.add(A3.mul(q, g), r) == f
    assert A3.deg(r) < A3.deg(g)


def test_poly_gcd_and_format(A3):
    assert A3.gcd((2, 0, 1), (1, 1)) == (1, 1)
    assert A3.format((1, 0, 1)) == "T^2 + 1"
    assert A3.format(()) == "0"


def test_factor_and_roots(A3):
    f = (2, 0, 1)  # T^2 - 1
    assert set(factor_unipoly(A3, f)) == {((1, 1), 1), ((2, 1), 1)}
    assert sorted(roots(A3, f)) == [1, 2]


def test_irreducibility(A3):
    assert is_irreducible(A3, (1, 0, 1))
    assert not is_irreducible(A3, (2, 0, 1))


# ---------------------------------------------------------------------------
# Primes of A and the fraction field
# ---------------------------------------------------------------------------

def test_enumerate_primes_f2():
    A = PolyRing(GF(2), "T")
    assert [p.format() for p in enumerate_primes(A, 2)] == ["T", "T + 1", "T^2 + T + 1"]
    assert len(primes_of_degree(A, 3)) == 2


def test_prime_count_f3_degree2(A3):
    assert len(primes_of_degree(A3, 2)) == 3


def test_prime_of_a_validation(A3):
    p = PrimeOfA(A3, (1, 0, 1))
    assert p.norm == 9
    assert p.deg == 2
    with pytest.raises(ValueError):
        PrimeOfA(A3, (2, 0, 1))


def test_reduce_fraction(A3, prime_T):
    assert prime_T.reduce(Frac((1,), (1, 1))) == (1,)
    with pytest.raises(NotInvertibleError):
        prime_T.reduce(Frac((1,), (0, 1)))


def test_fraction_normalization(A3):
    F = RationalFunctionField(A3)
    assert F.make((0, 1), (0, 2)) == Frac((2,), (1,))
    x = F.make((1, 1), (0, 1))
    assert F.mul(x, F.inv(x)) == F.one


def test_valuations(A3, prime_T):
    x = Frac((0, 1), (1, 0, 1))
    assert valuation(A3, x, INFINITY) == 1
    assert valuation(A3, x, prime_T) == 1
    assert valuation(A3, (), prime_T) is None


def test_is_square_in_f():
    A = PolyRing(GF(3), "T")
    assert is_square(A, Frac((0, 0, 1), (1,)))
    assert not is_square(A, Frac((0, 1), (1,)))
    A2 = PolyRing(GF(2), "T")
    assert is_square(A2, Frac((1, 0, 1), (1,)))
    assert not is_square(A2, Frac((0, 1), (1,)))


def test_pi_adic_expansion_digits(prime_T):
    assert pi_adic_expansion((1, 1), prime_T, 2) == [(1,), (1,)]


def test_pi_adic_expansion_is_multiplicative(A3):
    p = PrimeOfA(A3, (1, 0, 1))
    R = TruncRing(p.residue_field(), 2)
    xs = [(1, 1), (2, 0, 1), (0, 1, 1), Frac((1,), (1, 1))]
    for x in xs:
        for y in xs:
            F = RationalFunctionField(A3)
            fx = x if isinstance(x, Frac) else F.from_poly(x)
            fy = y if isinstance(y, Frac) else F.from_poly(y)
            prod = R.from_digits(pi_adic_expansion(F.mul(fx, fy), p, 2))
            expected = R.mul(R.from_digits(pi_adic_expansion(x, p, 2)),
                             R.from_digits(pi_adic_expansion(y, p, 2)))
            assert prod == expected, f"expansion of {x} * {y}"


# ---------------------------------------------------------------------------
# Truncated rings and matrices
# ---------------------------------------------------------------------------

def test_trunc_ring_basics():
    R = TruncRing(GF(5), 3)
    u = R.u
    assert R.mul(u, R.mul(u, u)) == R.zero
    assert R.is_unit(R.add(R.one, u))
    assert not R.is_unit(u)
    assert R.inv((1, 1)) == (1, 4, 1)
    assert R.from_digits([1, 2, 3, 4]) == (1, 2, 3)
    with pytest.raises(ValueError):
        TruncRing(GF(5), 0)


def test_matrix_det_inverse_charpoly():
    F = GF(5)
    M = Mat.from_rows(F, [[1, 2], [3, 4]])
    assert M.det() == 3
    assert (inverse(M) * M).is_identity()
    assert charpoly_mat(M) == (3, 0, 1)
    assert charpoly_mat(companion(F, (3, 0, 1))) == (3, 0, 1)


def test_matrix_over_trunc_ring():
    R = TruncRing(GF(3), 2)
    M = Mat.from_rows(R, [[R.one, R.u], [R.zero, R.one]])
    assert M.det() == R.one
    assert (M ** 3).is_identity(), "(1 + u E_12)^3 = 1 + 3u E_12 = 1 in characteristic 3"


# ---------------------------------------------------------------------------
# Subring generation
# ---------------------------------------------------------------------------

def test_generates_finite_field():
    F = GF(9)
    assert generates(F, [3])
    assert not generates(F, [2])
    assert len(generated_subring(F, [2])) == 1


def test_generates_product_ring():
    ring = ProductRing(GF(3), GF(3))
    assert generates(ring, [(1, 2)])
    assert not generates(ring, [(2, 2)]), "the diagonal is a proper subring"


def test_newton_polygon_ramified(A3, prime_T):
    f = ((0, 2), (), (1,))  # X^2 - T
    assert root_valuations(newton_polygon(A3, f, prime_T)) == [Fraction(1, 2), Fraction(1, 2)]
    assert root_valuations(newton_polygon(A3, f, INFINITY)) == [Fraction(-1, 2), Fraction(-1, 2)]
