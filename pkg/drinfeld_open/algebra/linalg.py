"""
Exact linear algebra over finite fields.

Generic row reduction works over any Field parent. The ``*_mod_p`` helpers run
the same elimination on numpy integer arrays over a prime field; they back the
submodule-lattice and subring computations where many small spans are built.
"""
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .fields import GF
from .rings import Elem, Field, Ring

Vector = List[Elem]


def rref(rows: Sequence[Sequence[Elem]], F: Field) -> Tuple[List[Vector], List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    M = [list(r) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots: List[int] = []
    r = 0
    zero = F.zero
    for c in range(ncols):
        pivot = next((i for i in range(r, len(M)) if M[i][c] != zero), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.mul(inv, x) for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != zero:
                f = M[i][c]
                M[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows: Sequence[Sequence[Elem]], F: Field) -> int:
    return len(rref(rows, F)[1])


def nullspace(M: Sequence[Sequence[Elem]], F: Field, ncols: Optional[int] = None) -> List[Vector]:
    """Basis of {v : M v = 0}."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    R, pivots = rref(M, F)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [F.zero] * ncols
        v[fcol] = F.one
        for row, pc in zip(R, pivots):
            v[pc] = F.neg(row[fcol])
        basis.append(v)
    return basis


def solve(M: Sequence[Sequence[Elem]], b: Sequence[Elem], F: Field) -> Optional[Vector]:
    """One solution x of M x = b, or None when inconsistent."""
    if not M:
        return None
    ncols = len(M[0])
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    R, pivots = rref(aug, F)
    if ncols in pivots:
        return None
    x = [F.zero] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return x


def transpose(rows: Sequence[Sequence[Elem]]) -> List[Vector]:
    return [list(col) for col in zip(*rows)]


class Subspace:
    """
    Incrementally built subspace of F^n kept in echelon form.

    Args:
        F: coefficient field
        n: ambient dimension
    """

    def __init__(self, F: Field, n: int):
        self.F = F
        self.n = n
        self._rows: List[Tuple[int, Vector]] = []

    def reduce(self, v: Sequence[Elem]) -> Vector:
        F = self.F
        v = list(v)
        for pc, row in self._rows:
            c = v[pc]
            if c != F.zero:
                v = [F.sub(a, F.mul(c, b)) for a, b in zip(v, row)]
        return v

    def contains(self, v: Sequence[Elem]) -> bool:
        return all(x == self.F.zero for x in self.reduce(v))

    def add(self, v: Sequence[Elem]) -> bool:
        """Insert v; True when the dimension grew."""
        F = self.F
        w = self.reduce(v)
        pc = next((i for i, x in enumerate(w) if x != F.zero), None)
        if pc is None:
            return False
        inv = F.inv(w[pc])
        w = [F.mul(inv, x) for x in w]
        reduced = []
        for qc, row in self._rows:
            c = row[pc]
            if c != F.zero:
                row = [F.sub(a, F.mul(c, b)) for a, b in zip(row, w)]
            reduced.append((qc, row))
        reduced.append((pc, w))
        self._rows = sorted(reduced, key=lambda t: t[0])
        return True

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def basis(self) -> List[Vector]:
        return [row for _, row in self._rows]

    def __len__(self) -> int:
        return self.dim

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, n={self.n})"


# ---------------------------------------------------------------------------
# numpy kernels over F_p
# ---------------------------------------------------------------------------

def rref_mod_p(A: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form of an integer matrix over F_p."""
    M = np.array(A, dtype=np.int64) % p
    if M.size == 0:
        return M[:0], []
    nrows, ncols = M.shape
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r] = (M[r] * inv) % p
        col = M[:, c].copy()
        col[r] = 0
        M = (M - np.outer(col, M[r])) % p
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank_mod_p(A: np.ndarray, p: int) -> int:
    return len(rref_mod_p(A, p)[1])


def span_key(A: np.ndarray, p: int) -> Tuple[Tuple[int, ...], ...]:
    """Canonical hashable form of the row span of A over F_p."""
    R, _ = rref_mod_p(A, p)
    return tuple(tuple(int(x) for x in row) for row in R)


def in_span_mod_p(basis: np.ndarray, v: np.ndarray, p: int) -> bool:
    if basis.size == 0:
        return not np.any(np.asarray(v) % p)
    return rank_mod_p(np.vstack([basis, v]), p) == rank_mod_p(basis, p)


# ---------------------------------------------------------------------------
# Subrings of finite rings
# ---------------------------------------------------------------------------

def generated_subring(ring: Ring, elements: Iterable[Elem]) -> List[Elem]:
    """
    F_p-basis of the subring of a finite commutative ring generated by 1 and elements.

    The span is closed under products with the basis found so far, so the
    result is the smallest additive group containing 1 and the elements that
    is stable under multiplication.
    """
    p = ring.characteristic
    n = ring.prime_dim
    Fp = GF(p)
    space = Subspace(Fp, n)
    basis: List[Elem] = []
    queue = [ring.one] + list(elements)
    while queue:
        x = queue.pop()
        if space.add([c % p for c in ring.prime_coords(x)]):
            new = [ring.mul(x, b) for b in basis] + [ring.mul(x, x)]
            basis.append(x)
            queue.extend(new)
            if space.dim == n:
                break
    return basis


def generates(ring: Ring, elements: Iterable[Elem]) -> bool:
    """True when 1 and the elements generate the whole ring."""
    return len(generated_subring(ring, elements)) == ring.prime_dim
