"""
Lie brackets on gl_n(k) and the lattice of SL_n(k)-invariant additive subgroups.
"""
import logging
import warnings
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Set, Tuple

import numpy as np

from ..algebra.fields import SmallField
from ..algebra.linalg import rank, rref_mod_p, span_key
from ..algebra.matrices import Mat, inverse
from .orders import REGIME_MIN_FIELD

logger = logging.getLogger(__name__)


def _unit(k: SmallField, n: int, i: int, j: int, c=None) -> Mat:
    rows = [[k.zero] * n for _ in range(n)]
    rows[i][j] = k.one if c is None else c
    return Mat.from_rows(k, rows)


def gl_basis(k: SmallField, n: int) -> List[Mat]:
    return [_unit(k, n, i, j) for i in range(n) for j in range(n)]


def sl_basis(k: SmallField, n: int) -> List[Mat]:
    """E_ij (i != j) and E_ii - E_nn."""
    out = [_unit(k, n, i, j) for i in range(n) for j in range(n) if i != j]
    for i in range(n - 1):
        out.append(_unit(k, n, i, i) - _unit(k, n, n - 1, n - 1))
    return out


def _flat(M: Mat) -> List:
    return [x for row in M.rows for x in row]


def bracket_span_of(left: Sequence[Mat], right: Sequence[Mat], k: SmallField) -> int:
    """k-dimension of the span of [X, Y] = XY - YX over the two bases."""
    rows = [_flat(X * Y - Y * X) for X in left for Y in right]
    return rank(rows, k)


def bracket_span(n: int, k: SmallField) -> int:
    """
    k-dimension of the span of [sl_n(k), sl_n(k)].

    Equal to n^2 - 1 except for (p, n) = (2, 2), where only the scalars are reached.
    The additive span has F_p-dimension [k : F_p] times this.
    """
    B = sl_basis(k, n)
    return bracket_span_of(B, B, k)


def pgl_sl_bracket_span(k: SmallField) -> int:
    """k-dimension of the span of [gl_2(k), sl_2(k)]."""
    return bracket_span_of(gl_basis(k, 2), sl_basis(k, 2), k)


# ---------------------------------------------------------------------------
# Invariant additive subgroups
# ---------------------------------------------------------------------------

def _codes_to_prime(k: SmallField, M: Mat) -> List[int]:
    out = []
    for x in _flat(M):
        out.extend(k.prime_coords(x))
    return out


def conjugation_actions(k: SmallField, n: int) -> List[np.ndarray]:
    """
    F_p-matrices of X -> g X g^-1 on gl_n(k) for the elementary generators g of SL_n(k).

    Columns are images of the F_p-basis c E_ij, c running over p^s codes.
    """
    p, e = k.p, k.e
    basis = []
    for i in range(n):
        for j in range(n):
            for s in range(e):
                basis.append(_unit(k, n, i, j, k.from_prime_coords([int(t == s) for t in range(e)])))
    gens = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for s in range(e):
                c = k.from_prime_coords([int(t == s) for t in range(e)])
                g = Mat.identity(k, n) + _unit(k, n, i, j, c)
                gens.append(g)
    mats = []
    for g in gens:
        gi = inverse(g)
        cols = [_codes_to_prime(k, g * X * gi) for X in basis]
        mats.append(np.array(cols, dtype=np.int64).T % p)
    return mats


def _spin(v: np.ndarray, actions: Sequence[np.ndarray], p: int) -> np.ndarray:
    """rref basis of the smallest invariant subspace containing v."""
    basis, _ = rref_mod_p(v.reshape(1, -1), p)
    while True:
        images = [basis] + [(basis @ A.T) % p for A in actions]
        nxt, _ = rref_mod_p(np.vstack(images), p)
        if nxt.shape[0] == basis.shape[0]:
            return nxt
        basis = nxt


def _key(v: np.ndarray, p: int) -> int:
    return int(sum(int(x) * p ** i for i, x in enumerate(v)))


def _vector(key: int, p: int, d: int) -> np.ndarray:
    out = np.zeros(d, dtype=np.int64)
    for i in range(d):
        out[i] = key % p
        key //= p
    return out


@dataclass
class SubmoduleLattice:
    """
    All SL_n(k)-invariant additive subgroups of gl_n(k).

    Args:
        k: the field
        n: matrix size
        members: rref F_p-bases, sorted by dimension then key
    """
    k: SmallField
    n: int
    members: List[np.ndarray] = field(default_factory=list)

    @property
    def in_regime(self) -> bool:
        return self.k.q >= REGIME_MIN_FIELD

    def _scalars(self) -> np.ndarray:
        k, n = self.k, self.n
        rows = []
        for s in range(k.e):
            c = k.from_prime_coords([int(t == s) for t in range(k.e)])
            rows.append(_codes_to_prime(k, Mat.scalar(k, n, c)))
        return rref_mod_p(np.array(rows), k.p)[0]

    def _sl(self) -> np.ndarray:
        k, n = self.k, self.n
        rows = []
        for s in range(k.e):
            c = k.from_prime_coords([int(t == s) for t in range(k.e)])
            rows += [_codes_to_prime(k, X.scale(c)) for X in sl_basis(k, n)]
        return rref_mod_p(np.array(rows), k.p)[0]

    def _contains(self, big: np.ndarray, small: np.ndarray) -> bool:
        p = self.k.p
        if small.shape[0] == 0:
            return True
        if big.shape[0] == 0:
            return False
        return rref_mod_p(np.vstack([big, small]), p)[0].shape[0] == big.shape[0]

    def classify(self, member: np.ndarray) -> Dict[str, bool]:
        return {
            "in_scalars": self._contains(self._scalars(), member),
            "contains_sl": self._contains(member, self._sl()),
        }

    @property
    def dims(self) -> List[int]:
        return [int(b.shape[0]) for b in self.members]

    def dichotomy_violations(self) -> List[int]:
        """Indices of members neither inside the scalars nor containing sl_n."""
        out = []
        for i, b in enumerate(self.members):
            c = self.classify(b)
            if not (c["in_scalars"] or c["contains_sl"]):
                out.append(i)
        return out

    def to_dict(self) -> Dict:
        return {
            "q": self.k.q,
            "n": self.n,
            "members": len(self.members),
            "prime_dims": self.dims,
            "in_regime": self.in_regime,
            "dichotomy_violations": len(self.dichotomy_violations()),
        }


def invariant_subgroups(k: SmallField, n: int) -> SubmoduleLattice:
    """
    The submodule lattice of gl_n(k) under conjugation by SL_n(k), over F_p.

    Cyclic submodules are computed once per SL_n(k)-orbit of vectors (and its
    F_p-multiples); the lattice is their closure under sums. Out of the
    |k| > 9 regime the dichotomy is not asserted and a warning is emitted.
    """
    p = k.p
    d = k.e * n * n
    actions = conjugation_actions(k, n)
    assigned: Set[int] = {0}
    modules: Dict[Tuple, np.ndarray] = {(): np.zeros((0, d), dtype=np.int64)}
    for key in range(1, p ** d):
        if key in assigned:
            continue
        v = _vector(key, p, d)
        M = _spin(v, actions, p)
        modules.setdefault(span_key(M, p), M)
        orbit = {key}
        frontier = [v]
        while frontier:
            nxt = []
            for w in frontier:
                for A in actions:
                    x = (A @ w) % p
                    kx = _key(x, p)
                    if kx not in orbit:
                        orbit.add(kx)
                        nxt.append(x)
            frontier = nxt
        for kx in orbit:
            w = _vector(kx, p, d)
            for c in range(1, p):
                assigned.add(_key((c * w) % p, p))

    found = dict(modules)
    queue = list(found.values())
    while queue:
        X = queue.pop()
        for Y in list(found.values()):
            S, _ = rref_mod_p(np.vstack([X, Y]), p)
            key = span_key(S, p)
            if key not in found:
                found[key] = S
                queue.append(S)
    members = sorted(found.values(), key=lambda b: (b.shape[0], span_key(b, p)))
    lattice = SubmoduleLattice(k, n, members)
    if not lattice.in_regime:
        warnings.warn(f"|k| = {k.q} <= 9: invariant subgroup dichotomy not asserted", RuntimeWarning)
    logger.debug("lattice %s", lattice.to_dict())
    return lattice
