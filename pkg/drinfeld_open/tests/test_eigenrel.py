"""
Tests for the eigenvalue relation polynomial f.
"""
import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from drinfeld_open.algebra.fields import GF
from drinfeld_open.algebra.matrices import Mat
from drinfeld_open.eigenrel.relation import (
    diagonal_scan,
    eval_symbolic_f,
    f_of_matrix,
    f_value,
    nonvanishing_search,
    random_gl_sampler,
    symbolic_f,
)
from drinfeld_open.errors import NotInvertibleError


def test_distinct_roots_value():
    """X^2 + 4X + 2 = (X - 1)(X - 2) over F_7, f = -(1 - 2)^2."""
    rep = f_value((2, 4, 1), GF(7))
    assert rep.value == 6
    assert not rep.flags
    assert not rep.is_zero
    assert sorted(rep.roots) == [(1,), (2,)] or len(rep.roots) == 2


def test_repeated_root_raises_flag_a():
    rep = f_value((1, 2, 1), GF(7))
    assert rep.value == 0
    assert "a" in rep.flags


def test_square_relation_raises_flag_b():
    """Roots 1, 2, 4 of X^3 - 1 over F_7 satisfy 1 * 4 = 2^2."""
    rep = f_value((6, 0, 0, 1), GF(7))
    assert rep.is_zero
    assert "b" in rep.flags
    assert eval_symbolic_f((6, 0, 0, 1), GF(7)) == 0


def test_zero_constant_term_rejected():
    with pytest.raises(NotInvertibleError):
        f_value((0, 1, 1), GF(5))


def test_degree_one_is_one():
    assert f_value((3, 1), GF(5)).value == 1


@pytest.mark.parametrize("q,n", [(5, 2), (5, 3), (7, 3), (4, 2)])
def test_symbolic_form_matches_roots(q, n):
    F = GF(q)
    rng = random.Random(q * 10 + n)
    for _ in range(25):
        cp = [F.random_element(rng) for _ in range(n)] + [F.one]
        if cp[0] == F.zero:
            continue
        assert f_value(cp, F).value == eval_symbolic_f(cp, F), f"cp = {cp}"


def test_symbolic_f_degree_two():
    import sympy
    b1, b2 = sympy.symbols("b1:3")
    assert sympy.expand(symbolic_f(2) - (4 * b2 - b1 ** 2)) == 0
    with pytest.raises(ValueError):
        symbolic_f(4)


def test_f_of_matrix():
    F = GF(7)
    g = Mat.diag(F, [1, 2])
    assert f_of_matrix(g).value == 6


def test_nonvanishing_search_finds_witness():
    result = nonvanishing_search(random_gl_sampler(GF(7), 2), 1, 50, seed=0)
    assert result.found
    assert not f_of_matrix(result.witness).is_zero
    assert result.tries <= 50


def test_nonvanishing_search_budget_exhausted():
    """g^6 = 1 on diagonal matrices over F_7, so f(g^6) = 0."""
    F = GF(7)
    sampler = lambda rng: Mat.diag(F, [rng.randrange(1, 7), rng.randrange(1, 7)])
    result = nonvanishing_search(sampler, 6, 20, seed=1)
    assert not result.found
    assert result.tries == 20


def test_diagonal_scan():
    g = diagonal_scan(GF(7), 2, 1)
    assert g is not None
    assert not f_of_matrix(g).is_zero
    assert diagonal_scan(GF(3), 3, 1) is None, "three units of F_3 cannot be distinct"
    assert diagonal_scan(GF(7), 2, 6) is None
