"""
Breadth-first closure of finite matrix groups with numpy.

A matrix over k[u]/(u^m) is stored as a flat row of field codes of length
n*n*m in (row, column, u-power) order. Right multiplication by a generator is
vectorized over the whole frontier; elements are deduplicated through a
packed integer key (base |k| digits) kept in a sorted array.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np
from tqdm import tqdm

from ..algebra.fields import SmallField
from ..algebra.matrices import Mat
from ..algebra.trunc import TruncRing
from ..errors import NotInvertibleError, RingMismatchError

logger = logging.getLogger(__name__)

DEFAULT_CLOSURE_CAP = 2_000_000


class TruncArith:
    """Batched matrix products over k[u]/(u^m) for a table-backed k."""

    def __init__(self, R: TruncRing, n: int):
        if not isinstance(R.k, SmallField):
            raise RingMismatchError(f"closure needs a table-backed residue field, got {R.k!r}")
        self.R = R
        self.k = R.k
        self.n = n
        self.m = R.m
        self.q = R.k.q
        self.length = n * n * R.m
        self._prime = R.k.e == 1
        if not self._prime:
            self._add = R.k.add_table()
            self._mul = R.k.mul_table()
        self.dtype = np.uint8 if self.q <= 256 else np.uint16

    def identity(self) -> np.ndarray:
        a = np.zeros((self.n, self.n, self.m), dtype=self.dtype)
        for i in range(self.n):
            a[i, i, 0] = 1
        return a.reshape(-1)

    def right_mul(self, X: np.ndarray, g: np.ndarray) -> np.ndarray:
        """X[b] * g for every row b of X."""
        n, m = self.n, self.m
        Xs = X.reshape(-1, n, n, m)
        G = g.reshape(n, n, m)
        if self._prime:
            out = np.zeros(Xs.shape, dtype=np.int64)
            Xi = Xs.astype(np.int64)
            Gi = G.astype(np.int64)
            for s in range(m):
                for r in range(m - s):
                    out[..., s + r] += np.einsum("bik,kj->bij", Xi[..., s], Gi[..., r])
            out %= self.q
        else:
            out = np.zeros(Xs.shape, dtype=np.int64)
            for kk in range(n):
                for s in range(m):
                    left = Xs[:, :, kk, s][:, :, None]
                    for r in range(m - s):
                        prod = self._mul[left, G[kk, :, r][None, None, :]]
                        out[..., s + r] = self._add[out[..., s + r], prod]
        return out.astype(self.dtype).reshape(X.shape[0], -1)

    def to_array(self, M: Mat) -> np.ndarray:
        if M.n != self.n:
            raise ValueError(f"expected {self.n}x{self.n}, got {M.n}x{M.n}")
        a = np.zeros((self.n, self.n, self.m), dtype=self.dtype)
        for i in range(self.n):
            for j in range(self.n):
                for t, c in enumerate(self.R.coeffs(self.R.reduce(tuple(M[i, j])))):
                    a[i, j, t] = self.k.index(c)
        return a.reshape(-1)

    def to_mat(self, row: np.ndarray) -> Mat:
        a = row.reshape(self.n, self.n, self.m)
        R = self.R
        return Mat.from_rows(R, [[R.R.strip([int(c) for c in a[i, j]]) for j in range(self.n)]
                                 for i in range(self.n)])

    def __repr__(self) -> str:
        return f"TruncArith(n={self.n}, {self.R!r})"


class PairArith:
    """Pairs (g1, g2) in GL_n(k1) x GL_n(k2), multiplied componentwise."""

    def __init__(self, k1: SmallField, k2: SmallField, n: int):
        self.a1 = TruncArith(TruncRing(k1, 1), n)
        self.a2 = TruncArith(TruncRing(k2, 1), n)
        self.n = n
        self.q = max(k1.q, k2.q)
        self.half = n * n
        self.length = 2 * self.half
        self.dtype = np.uint8 if self.q <= 256 else np.uint16

    def identity(self) -> np.ndarray:
        return np.concatenate([self.a1.identity(), self.a2.identity()]).astype(self.dtype)

    def right_mul(self, X: np.ndarray, g: np.ndarray) -> np.ndarray:
        h = self.half
        left = self.a1.right_mul(X[:, :h], g[:h])
        right = self.a2.right_mul(X[:, h:], g[h:])
        return np.concatenate([left, right], axis=1).astype(self.dtype)

    def to_array(self, pair) -> np.ndarray:
        """Pair of matrices over k1 and k2 (or their m = 1 truncations)."""
        g1, g2 = pair
        halves = []
        for a, g in ((self.a1, g1), (self.a2, g2)):
            if g.ring == a.k:
                g = g.map(a.R.from_base, a.R)
            halves.append(a.to_array(g))
        return np.concatenate(halves).astype(self.dtype)

    def split(self, rows: np.ndarray):
        return rows[:, :self.half], rows[:, self.half:]


def packed_keys(rows: np.ndarray, q: int) -> np.ndarray:
    """Base-q integer key of each row; rows must fit in 63 bits."""
    length = rows.shape[1]
    if q ** length >= 1 << 63:
        raise ValueError(f"rows of length {length} over {q} symbols do not fit a 64-bit key")
    weights = np.array([q ** i for i in range(length)], dtype=np.int64)
    return rows.astype(np.int64) @ weights


@dataclass
class CongruenceClosure:
    """
    The subgroup generated by ``gens``, or a partial enumeration if ``cap`` was hit.

    Args:
        arith: the batched arithmetic of the ambient group
        gens: generator rows
        elements: enumerated elements, one row each, in BFS order
        complete: False when the cap stopped the search
        cap: the element cap used
    """
    arith: object
    gens: List[np.ndarray]
    elements: np.ndarray
    complete: bool
    cap: int
    levels: List[int] = field(default_factory=list)

    @property
    def order(self) -> Optional[int]:
        return int(self.elements.shape[0]) if self.complete else None

    @property
    def size(self) -> int:
        return int(self.elements.shape[0])

    def keys(self) -> np.ndarray:
        return np.sort(packed_keys(self.elements, self.arith.q))

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "enumerated": self.size,
            "complete": self.complete,
            "cap": self.cap,
            "levels": len(self.levels),
        }

    def __repr__(self) -> str:
        state = f"order={self.order}" if self.complete else f">{self.cap} (cap)"
        return f"CongruenceClosure({state}, gens={len(self.gens)})"


def bfs_closure(arith, gens: Sequence[np.ndarray], cap: int = DEFAULT_CLOSURE_CAP,
                progress: bool = False) -> CongruenceClosure:
    """Closure of the identity under right multiplication by the generators."""
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    gens = [np.asarray(g, dtype=arith.dtype).reshape(-1) for g in gens]
    ident = arith.identity().reshape(1, -1)
    seen = packed_keys(ident, arith.q)
    chunks = [ident]
    frontier = ident
    levels = [1]
    complete = True
    total = 1
    with tqdm(total=cap, disable=not progress, desc="closure", unit="elt") as bar:
        bar.update(1)
        while frontier.shape[0] and gens:
            cand = np.concatenate([arith.right_mul(frontier, g) for g in gens])
            ck = packed_keys(cand, arith.q)
            uk, idx = np.unique(ck, return_index=True)
            fresh = ~np.isin(uk, seen, assume_unique=True)
            new_keys, new = uk[fresh], cand[idx[fresh]]
            if not new.shape[0]:
                break
            if total + new.shape[0] > cap:
                keep = cap - total
                chunks.append(new[:keep])
                total += keep
                complete = False
                bar.update(keep)
                logger.info("closure cap %d reached at level %d", cap, len(levels))
                break
            seen = np.union1d(seen, new_keys)
            chunks.append(new)
            levels.append(int(new.shape[0]))
            total += new.shape[0]
            bar.update(int(new.shape[0]))
            frontier = new
    return CongruenceClosure(arith, gens, np.concatenate(chunks), complete, cap, levels)


def closure(gens: Sequence[Mat], R: TruncRing, cap: int = DEFAULT_CLOSURE_CAP,
            progress: bool = False) -> CongruenceClosure:
    """
    The subgroup of GL_n(R) generated by ``gens``.

    Raises:
        NotInvertibleError: a generator has non-unit determinant
        ValueError: no generators, or sizes differ
    """
    if not gens:
        raise ValueError("closure needs at least one generator")
    n = gens[0].n
    for g in gens:
        if g.ring != R:
            raise RingMismatchError(f"generator over {g.ring!r}, expected {R!r}")
        if not R.is_unit(g.det()):
            raise NotInvertibleError(f"generator {g.format()} is not invertible")
    arith = TruncArith(R, n)
    return bfs_closure(arith, [arith.to_array(g) for g in gens], cap, progress)


# ---------------------------------------------------------------------------
# Standard generator sets
# ---------------------------------------------------------------------------

def elementary(R: TruncRing, n: int, i: int, j: int, c) -> Mat:
    """Id + c E_ij with c in R."""
    rows = [[R.one if a == b else R.zero for b in range(n)] for a in range(n)]
    rows[i][j] = R.add(rows[i][j], c)
    return Mat.from_rows(R, rows)


def sl_generators(R: TruncRing, n: int) -> List[Mat]:
    """Teichmuller lifts of the elementary generators of SL_n(k): E_ij(c), c over an F_p-basis of k."""
    k = R.k
    basis = [k.from_prime_coords([int(t == s) for t in range(k.prime_dim)]) for s in range(k.prime_dim)]
    return [elementary(R, n, i, j, R.from_base(c))
            for i in range(n) for j in range(n) if i != j for c in basis]


def level_one(R: TruncRing, X: Mat) -> Mat:
    """Id + u X for X over k."""
    n = X.n
    u = R.u
    rows = [[R.add(R.one if i == j else R.zero, R.mul(u, R.from_base(X[i, j]))) for j in range(n)]
            for i in range(n)]
    return Mat.from_rows(R, rows)
