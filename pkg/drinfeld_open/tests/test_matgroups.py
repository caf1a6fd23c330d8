"""
Tests for congruence closures, group orders, invariant subgroups, adjoint
traces and the Goursat analysis.
"""
import os
import random
import sys
from itertools import product

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from drinfeld_open.algebra.fields import GF
from drinfeld_open.algebra.matrices import Mat
from drinfeld_open.algebra.trunc import TruncRing
from drinfeld_open.errors import NotInvertibleError
from drinfeld_open.matgroups.closure import closure, elementary, level_one, sl_generators
from drinfeld_open.matgroups.filtration import filtration_profile, verify_strong_approx
from drinfeld_open.matgroups.goursat import FULL, GRAPH, OTHER, frobenius_twist, goursat_analyze
from drinfeld_open.matgroups.lie import bracket_span, invariant_subgroups, pgl_sl_bracket_span
from drinfeld_open.matgroups.orders import exhaustive_sl_count, field_bound_check, group_order, sl_order
from drinfeld_open.matgroups.traces import (
    LadderElement,
    char2_trad_identity,
    lift_constant,
    square_map_is_bijective,
    tr_ad,
    tr_ad_from_charpoly,
    trace_criterion_1,
    trace_criterion_2,
    trace_homomorphism,
)


def _with_level_one(R, n=2):
    k = R.k
    gens = sl_generators(R, n)
    gens.append(level_one(R, Mat.diag(k, [k.one] + [k.zero] * (n - 2) + [k.neg(k.one)])))
    return gens


# ---------------------------------------------------------------------------
# Closures
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("q,order", [(2, 6), (3, 24), (4, 60), (5, 120)])
def test_sl2_closure_orders(q, order):
    R = TruncRing(GF(q), 1)
    H = closure(sl_generators(R, 2), R)
    assert H.complete
    assert H.order == order


def test_closure_cap_reports_partial():
    R = TruncRing(GF(5), 1)
    H = closure(sl_generators(R, 2), R, cap=10)
    assert not H.complete
    assert H.order is None
    assert H.size == 10
    assert H.to_dict()["complete"] is False


def test_closure_rejects_singular_generator():
    R = TruncRing(GF(3), 1)
    with pytest.raises(NotInvertibleError):
        closure([Mat.diag(R, [R.one, R.zero])], R)
    with pytest.raises(ValueError):
        closure([], R)


def test_level_one_generator_fills_sl2_mod_u2():
    R = TruncRing(GF(3), 2)
    H = closure(_with_level_one(R), R)
    assert H.order == sl_order(2, 3, 2) == 648


def test_elementary_matrix():
    R = TruncRing(GF(3), 2)
    E = elementary(R, 2, 0, 1, R.u)
    assert E[0, 1] == R.u
    assert E.det() == R.one


# ---------------------------------------------------------------------------
# Filtration and strong approximation
# ---------------------------------------------------------------------------

def test_filtration_profile_with_level_one():
    R = TruncRing(GF(3), 2)
    profile = filtration_profile(closure(_with_level_one(R), R))
    assert profile.layer0_contains_sl
    assert profile.layer1_nonscalar
    assert profile.layer1_contains_sl
    assert profile.layer_dims == [3]


def test_filtration_profile_of_constants():
    R = TruncRing(GF(3), 2)
    profile = filtration_profile(closure(sl_generators(R, 2), R))
    assert profile.layer0_order == 24
    assert profile.layer_dims == [0]
    assert not profile.hypotheses


def test_strong_approx_small_field_warns():
    R = TruncRing(GF(3), 2)
    with pytest.warns(RuntimeWarning):
        verdict = verify_strong_approx(_with_level_one(R), R)
    assert verdict.full
    assert verdict.hypotheses
    assert verdict.consistent
    assert not verdict.in_regime


def test_strong_approx_rejects_non_sl_generator():
    R = TruncRing(GF(3), 2)
    g = Mat.diag(R, [R.from_int(2), R.one])
    with pytest.raises(ValueError):
        verify_strong_approx([g], R)


@pytest.mark.slow
def test_strong_approx_f11():
    R = TruncRing(GF(11), 2)
    verdict = verify_strong_approx(_with_level_one(R), R)
    assert verdict.in_regime
    assert verdict.full
    assert verdict.order == 1_756_920
    assert verdict.profile.layer1_forced


# ---------------------------------------------------------------------------
# Orders
# ---------------------------------------------------------------------------

def test_group_orders():
    assert group_order(2, 3) == 24
    assert group_order(2, 4) == 60
    assert group_order(3, 2, twisted=True) == 216
    assert sl_order(2, 11, 2) == 1_756_920
    with pytest.raises(ValueError):
        group_order(1, 3)
    with pytest.raises(ValueError):
        sl_order(2, 3, 0)


@pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (2, 5)])
def test_exhaustive_count_matches_formula(n, q):
    assert exhaustive_sl_count(n, q) == group_order(n, q)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_field_bound(n):
    verdict = field_bound_check(n)
    assert verdict.ok, verdict.failures
    assert verdict.checked > 0


# ---------------------------------------------------------------------------
# Lie brackets and invariant subgroups
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("q,n,dim", [(3, 2, 3), (5, 2, 3), (2, 2, 1), (4, 2, 1), (2, 3, 8)])
def test_bracket_span(q, n, dim):
    assert bracket_span(n, GF(q)) == dim


def test_pgl_sl_bracket_span_char2():
    assert pgl_sl_bracket_span(GF(2)) == 3


def test_invariant_subgroups_f3():
    with pytest.warns(RuntimeWarning):
        lattice = invariant_subgroups(GF(3), 2)
    assert lattice.dims == [0, 1, 3, 4]
    assert lattice.dichotomy_violations() == []


@pytest.mark.slow
def test_invariant_subgroups_f11():
    lattice = invariant_subgroups(GF(11), 2)
    assert lattice.in_regime
    assert lattice.dims == [0, 1, 3, 4]
    assert lattice.dichotomy_violations() == []


# ---------------------------------------------------------------------------
# Adjoint traces and trace criteria
# ---------------------------------------------------------------------------

def test_tr_ad_diagonal():
    """diag(2, 3) over F_7: 2 + 2/3 + 3/2 = 3."""
    F = GF(7)
    assert tr_ad(Mat.diag(F, [2, 3])) == 3
    assert tr_ad_from_charpoly((6, 2, 1), F) == 3
    with pytest.raises(NotInvertibleError):
        tr_ad_from_charpoly((0, 1, 1), F)


def test_char2_identity_on_gl2_f4():
    F = GF(4)
    checked = 0
    for entries in product(range(4), repeat=4):
        g = Mat.from_rows(F, [list(entries[:2]), list(entries[2:])])
        if g.det() == F.zero:
            continue
        assert char2_trad_identity(g)
        checked += 1
    assert checked == 180
    with pytest.raises(ValueError):
        char2_trad_identity(Mat.diag(GF(3), [1, 2]))


def test_trace_criterion_1():
    R = TruncRing(GF(3), 2)
    assert trace_criterion_1([(1, 1)], R)
    assert not trace_criterion_1([(2,)], R)
    assert not trace_criterion_1([], R)
    R9 = TruncRing(GF(9), 2)
    assert trace_criterion_1([(3, 1)], R9)
    assert not trace_criterion_1([(1, 1)], R9), "F_3[u] is a proper subring"
    with pytest.raises(ValueError):
        trace_criterion_1([(1,)], TruncRing(GF(3), 1))


def test_trace_criterion_2():
    R = TruncRing(GF(2), 3)
    assert trace_criterion_2([(1, 0, 1)], R)
    assert not trace_criterion_2([(0, 1)], R), "u is not a square"
    with pytest.raises(ValueError):
        trace_criterion_2([(1,)], TruncRing(GF(3), 3))


@pytest.mark.parametrize("q", [2, 4, 8])
def test_square_map_is_bijective(q):
    assert square_map_is_bijective(GF(q))


def test_trace_homomorphism_is_additive():
    k = GF(4)
    R = TruncRing(k, 3)
    rng = random.Random(7)
    u2 = R.mul(R.u, R.u)

    def random_element():
        while True:
            gamma = Mat.from_rows(k, [[k.random_element(rng) for _ in range(2)] for _ in range(2)])
            if gamma.det() != k.zero:
                break
        Y = [[R.mul(u2, R.from_base(k.random_element(rng))) for _ in range(2)] for _ in range(2)]
        g2 = Mat.from_rows(R, [[R.add(R.one if i == j else R.zero, Y[i][j]) for j in range(2)] for i in range(2)])
        return LadderElement(lift_constant(R, gamma), g2, R.from_base(k.random_element(rng)))

    for _ in range(10):
        h1, h2 = random_element(), random_element()
        prod = h1 * h2
        assert prod.matrix() == h1.matrix() * h2.matrix()
        assert trace_homomorphism(prod) == R.add(trace_homomorphism(h1), trace_homomorphism(h2))


# ---------------------------------------------------------------------------
# Goursat
# ---------------------------------------------------------------------------

def _upper(k, c):
    return Mat.from_rows(k, [[k.one, c], [k.zero, k.one]])


def _lower(k, c):
    return Mat.from_rows(k, [[k.one, k.zero], [c, k.one]])


def test_goursat_diagonal_is_graph():
    k = GF(3)
    gens = [(_upper(k, 1), _upper(k, 1)), (_lower(k, 1), _lower(k, 1))]
    result = goursat_analyze(gens, k, k)
    assert result.kind == GRAPH
    assert result.order == 24
    assert result.frobenius_power == 0
    assert result.conjugator.is_identity()


def test_goursat_full_product():
    k = GF(3)
    one = Mat.diag(k, [1, 1])
    gens = [(_upper(k, 1), one), (_lower(k, 1), one), (one, _upper(k, 1)), (one, _lower(k, 1))]
    result = goursat_analyze(gens, k, k)
    assert result.kind == FULL
    assert result.order == 576


def test_goursat_frobenius_twisted_graph():
    """(g, g^sigma) over F_4 is a graph through the Frobenius, not through conjugation."""
    k = GF(4)
    gens = []
    for c in (1, 2):
        for g in (_upper(k, c), _lower(k, c)):
            gens.append((g, frobenius_twist(g, 1)))
    result = goursat_analyze(gens, k, k)
    assert result.kind == GRAPH
    assert result.order == 60
    assert result.frobenius_power == 1


def test_goursat_small_projection_is_other():
    k = GF(3)
    one = Mat.diag(k, [1, 1])
    result = goursat_analyze([(_upper(k, 1), one)], k, k)
    assert result.kind == OTHER
    assert "projections" in result.reason


def test_goursat_rejects_non_sl():
    k = GF(3)
    with pytest.raises(ValueError):
        goursat_analyze([(Mat.diag(k, [2, 1]), Mat.diag(k, [1, 1]))], k, k)
