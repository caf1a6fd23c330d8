"""
Congruence filtration of a finite subgroup H of GL_n(k[u]/(u^m)).

Layer 0 is the image of H in GL_n(k). For i >= 1 the layer is the additive
subgroup {X : Id + u^i X + ... in H} of gl_n(k), stored as an F_p-basis of
prime coordinates.
"""
import logging
import warnings
from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, List, Sequence

import numpy as np

from ..algebra.linalg import in_span_mod_p, rref_mod_p
from ..algebra.matrices import Mat
from ..algebra.trunc import TruncRing
from ..errors import ClosureIncompleteError
from .closure import DEFAULT_CLOSURE_CAP, CongruenceClosure, TruncArith, closure, packed_keys
from .orders import REGIME_MIN_FIELD, group_order, sl_order

logger = logging.getLogger(__name__)


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def det_batch(arith: TruncArith, X: np.ndarray) -> np.ndarray:
    """Determinants over k of a batch of n x n code matrices (Leibniz expansion)."""
    k = arith.k
    n = arith.n
    X = X.reshape(-1, n, n)
    mul, add, neg = k.mul_table(), k.add_table(), k.neg_table()
    acc = np.zeros(X.shape[0], dtype=np.int64)
    for p in permutations(range(n)):
        term = np.ones(X.shape[0], dtype=np.int64)
        for i in range(n):
            term = mul[term, X[:, i, p[i]]]
        if _perm_sign(p) < 0:
            term = neg[term]
        acc = add[acc, term]
    return acc


def _prime_vectors(arith: TruncArith, codes: np.ndarray) -> np.ndarray:
    """Field codes (B, n*n) to F_p coordinate rows (B, e*n*n)."""
    k = arith.k
    p, e = k.p, k.e
    cols = []
    for j in range(codes.shape[1]):
        c = codes[:, j].astype(np.int64)
        for _ in range(e):
            cols.append(c % p)
            c = c // p
    return np.stack(cols, axis=1) if cols else np.zeros((codes.shape[0], 0), dtype=np.int64)


def sl_basis_vectors(arith: TruncArith) -> np.ndarray:
    """F_p-basis of sl_n(k) in prime coordinates."""
    k, n = arith.k, arith.n
    rows = []
    for s in range(k.e):
        c = k.p ** s
        for i in range(n):
            for j in range(n):
                if i != j:
                    m = np.zeros((n, n), dtype=np.int64)
                    m[i, j] = c
                    rows.append(m.reshape(-1))
        for i in range(n - 1):
            m = np.zeros((n, n), dtype=np.int64)
            m[i, i] = c
            m[n - 1, n - 1] = k.neg(c)
            rows.append(m.reshape(-1))
    return _prime_vectors(arith, np.array(rows))


@dataclass
class FiltrationProfile:
    """
    Layers of a complete closure.

    Args:
        n: matrix size
        q: residue field size
        m: truncation length
        layer0_order: |H^[0]|
        layer0_contains_sl: SL_n(k) is inside H^[0]
        layers: F_p-bases of H^[i] for i = 1..m-1
        layer1_nonscalar: H^[1] contains a non-scalar matrix
        layer1_contains_sl: sl_n(k) is inside H^[1]
    """
    n: int
    q: int
    m: int
    layer0_order: int
    layer0_contains_sl: bool
    layers: List[np.ndarray] = field(default_factory=list)
    layer1_nonscalar: bool = False
    layer1_contains_sl: bool = False

    @property
    def layer_dims(self) -> List[int]:
        return [int(b.shape[0]) for b in self.layers]

    @property
    def hypotheses(self) -> bool:
        """SL_n(k) in H^[0] and a non-scalar in H^[1]."""
        return self.layer0_contains_sl and self.layer1_nonscalar

    @property
    def layer1_forced(self) -> bool:
        """In the large-field regime the hypotheses force sl_n(k) into H^[1]."""
        if self.q < REGIME_MIN_FIELD or not self.hypotheses:
            return True
        return self.layer1_contains_sl

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "q": self.q,
            "m": self.m,
            "layer0_order": self.layer0_order,
            "layer0_contains_sl": self.layer0_contains_sl,
            "layer_prime_dims": self.layer_dims,
            "layer1_nonscalar": self.layer1_nonscalar,
            "layer1_contains_sl": self.layer1_contains_sl,
        }


def filtration_profile(H: CongruenceClosure) -> FiltrationProfile:
    """
    Raises:
        ClosureIncompleteError: H hit its cap
    """
    if not H.complete:
        raise ClosureIncompleteError("filtration needs a complete closure")
    arith: TruncArith = H.arith
    n, m, q = arith.n, arith.m, arith.q
    E = H.elements.reshape(-1, n, n, m)
    level0 = E[..., 0].reshape(-1, n * n)
    keys, first = np.unique(packed_keys(level0, q), return_index=True)
    images = level0[first]
    dets = det_batch(arith, images)
    sl_count = int(np.count_nonzero(dets == arith.k.one))
    contains_sl = sl_count == group_order(n, q)

    ident = arith.identity().reshape(n, n, m)
    sl_vecs = sl_basis_vectors(arith)
    layers = []
    nonscalar = False
    contains_sl1 = False
    for i in range(1, m):
        mask = np.all(E[..., :i] == ident[None, ..., :i], axis=(1, 2, 3))
        X = E[mask][..., i].reshape(-1, n * n)
        X = X[np.unique(packed_keys(X, q), return_index=True)[1]]
        vecs = _prime_vectors(arith, X)
        basis, _ = rref_mod_p(vecs, arith.k.p)
        layers.append(basis)
        if i == 1:
            off = X.reshape(-1, n, n)
            diag = np.einsum("bii->bi", off)
            offdiag_nonzero = np.any(off * (1 - np.eye(n, dtype=off.dtype)) != 0, axis=(1, 2))
            unequal_diag = np.any(diag != diag[:, :1], axis=1)
            nonscalar = bool(np.any(offdiag_nonzero | unequal_diag))
            contains_sl1 = basis.shape[0] > 0 and all(in_span_mod_p(basis, v, arith.k.p) for v in sl_vecs)
    profile = FiltrationProfile(n, q, m, int(keys.shape[0]), contains_sl, layers, nonscalar, contains_sl1)
    logger.debug("filtration %s", profile.to_dict())
    return profile


@dataclass
class StrongApproxVerdict:
    in_regime: bool
    hypotheses: bool
    full: bool
    order: int
    expected_order: int
    profile: FiltrationProfile

    @property
    def consistent(self) -> bool:
        """Hypotheses and fullness agree (hypotheses imply full; full implies hypotheses)."""
        return self.hypotheses == self.full

    def to_dict(self) -> Dict:
        return {
            "in_regime": self.in_regime,
            "hypotheses": self.hypotheses,
            "full": self.full,
            "consistent": self.consistent,
            "order": self.order,
            "expected_order": self.expected_order,
            "profile": self.profile.to_dict(),
        }


def verify_strong_approx(gens: Sequence[Mat], R: TruncRing, cap: int = DEFAULT_CLOSURE_CAP,
                         progress: bool = False) -> StrongApproxVerdict:
    """
    Check the level-0 / level-1 hypotheses against the exhaustive closure.

    Raises:
        ValueError: a generator is not in SL_n(R)
        ClosureIncompleteError: the closure hit the cap
    """
    for g in gens:
        if g.det() != R.one:
            raise ValueError(f"generator {g.format()} is not in SL_n")
    q = R.k.order
    in_regime = q >= REGIME_MIN_FIELD
    if not in_regime:
        warnings.warn(f"|k| = {q} <= 9: outside the strong approximation regime", RuntimeWarning)
    H = closure(gens, R, cap, progress)
    profile = filtration_profile(H)
    n = gens[0].n
    expected = sl_order(n, q, R.m)
    return StrongApproxVerdict(in_regime, profile.hypotheses, H.order == expected, H.order, expected, profile)
