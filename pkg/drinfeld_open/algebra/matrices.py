"""
Square matrices over a commutative ring parent.

The characteristic polynomial uses Berkowitz's division-free recursion, so it
is valid over A/pi^i, truncated rings and polynomial rings alike; inverses
come from Cayley-Hamilton and need only a unit determinant.
"""
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

from ..errors import NotInvertibleError, RingMismatchError
from .polys import Poly
from .rings import Elem, Ring


@dataclass(frozen=True)
class Mat:
    """
    An n x n matrix with entries in ``ring``.

    Args:
        ring: entry ring (a Ring parent)
        rows: tuple of n row tuples
    """
    ring: Ring
    rows: Tuple[Tuple[Elem, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square")

    # --- constructors ---------------------------------------------------
    @classmethod
    def from_rows(cls, ring: Ring, rows: Sequence[Sequence[Elem]]) -> "Mat":
        return cls(ring, tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Mat":
        return cls.scalar(ring, n, ring.one)

    @classmethod
    def scalar(cls, ring: Ring, n: int, c: Elem) -> "Mat":
        return cls(ring, tuple(tuple(c if i == j else ring.zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, ring: Ring, n: int) -> "Mat":
        return cls.scalar(ring, n, ring.zero)

    @classmethod
    def diag(cls, ring: Ring, entries: Sequence[Elem]) -> "Mat":
        n = len(entries)
        return cls(ring, tuple(tuple(entries[i] if i == j else ring.zero for j in range(n)) for i in range(n)))

    # --- structure --------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: Tuple[int, int]) -> Elem:
        i, j = ij
        return self.rows[i][j]

    def _check(self, other: "Mat") -> None:
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")
        if other.n != self.n:
            raise ValueError(f"size mismatch {self.n} vs {other.n}")

    # --- arithmetic ---------------------------------------------------------
    def __add__(self, other: "Mat") -> "Mat":
        self._check(other)
        R = self.ring
        return Mat(R, tuple(tuple(R.add(a, b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "Mat") -> "Mat":
        self._check(other)
        R = self.ring
        return Mat(R, tuple(tuple(R.sub(a, b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "Mat":
        return self.map(self.ring.neg)

    def __mul__(self, other: "Mat") -> "Mat":
        self._check(other)
        R = self.ring
        cols = list(zip(*other.rows))
        return Mat(R, tuple(tuple(R.sum(R.mul(a, b) for a, b in zip(row, col)) for col in cols) for row in self.rows))

    def scale(self, c: Elem) -> "Mat":
        R = self.ring
        return self.map(lambda x: R.mul(c, x))

    def __pow__(self, e: int) -> "Mat":
        if e < 0:
            return inverse(self) ** (-e)
        result = Mat.identity(self.ring, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def map(self, fn: Callable[[Elem], Elem], ring: Ring = None) -> "Mat":
        """Entrywise image, optionally into another ring."""
        return Mat(ring or self.ring, tuple(tuple(fn(x) for x in r) for r in self.rows))

    def apply(self, v: Sequence[Elem]) -> List[Elem]:
        R = self.ring
        return [R.sum(R.mul(a, b) for a, b in zip(row, v)) for row in self.rows]

    def transpose(self) -> "Mat":
        return Mat(self.ring, tuple(zip(*self.rows)))

    def trace(self) -> Elem:
        return self.ring.sum(self.rows[i][i] for i in range(self.n))

    def det(self) -> Elem:
        cp = charpoly_mat(self)
        c0 = cp[0] if cp else self.ring.zero
        return c0 if self.n % 2 == 0 else self.ring.neg(c0)

    def is_scalar(self) -> bool:
        z = self.ring.zero
        d = self.rows[0][0] if self.n else z
        return all(self.rows[i][j] == (d if i == j else z) for i in range(self.n) for j in range(self.n))

    def is_identity(self) -> bool:
        return self.is_scalar() and (self.n == 0 or self.rows[0][0] == self.ring.one)

    def to_lists(self) -> List[List[Elem]]:
        return [list(r) for r in self.rows]

    def format(self) -> str:
        return "[" + "; ".join(", ".join(self.ring.format(x) for x in r) for r in self.rows) + "]"

    def __repr__(self) -> str:
        return f"Mat({self.format()})"


def charpoly_mat(M: Mat) -> Poly:
    """
    det(X*Id - M) as a coefficient tuple over M.ring, constant term first.

    Berkowitz: for each leading principal block the Toeplitz column
    [1, -a, -R*C, -R*A*C, ...] is applied to the previous vector.
    """
    R = M.ring
    n = M.n
    A = M.rows
    v = [R.one]
    for k in range(n):
        a = A[k][k]
        row = [A[k][j] for j in range(k)]
        col = [A[i][k] for i in range(k)]
        toeplitz = [R.one, R.neg(a)]
        w = col
        for _ in range(k):
            toeplitz.append(R.neg(R.sum(R.mul(x, y) for x, y in zip(row, w))))
            w = [R.sum(R.mul(A[i][j], w[j]) for j in range(k)) for i in range(k)]
        # v has length k+1; new vector has length k+2
        new = []
        for i in range(k + 2):
            acc = R.zero
            for j in range(min(i, k) + 1):
                if i - j < len(toeplitz):
                    acc = R.add(acc, R.mul(toeplitz[i - j], v[j]))
            new.append(acc)
        v = new
    # v = [1, c_1, ..., c_n] with charpoly X^n + c_1 X^{n-1} + ... + c_n
    coeffs = list(reversed(v))
    while coeffs and coeffs[-1] == R.zero:
        coeffs.pop()
    return tuple(coeffs)


def eval_poly_at_mat(f: Poly, M: Mat) -> Mat:
    """f(M) by Horner, f over M.ring."""
    result = Mat.zeros(M.ring, M.n)
    ident = Mat.identity(M.ring, M.n)
    for c in reversed(f):
        result = result * M + ident.scale(c)
    return result


def companion(R: Ring, f: Poly) -> Mat:
    """Companion matrix of a monic f: ones on the subdiagonal, last column -f_0..-f_{n-1}."""
    n = len(f) - 1
    rows = [[R.zero] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = R.one
    for i in range(n):
        rows[i][n - 1] = R.neg(f[i])
    return Mat.from_rows(R, rows)


def inverse(M: Mat) -> Mat:
    """
    M^{-1} via Cayley-Hamilton: -(M^{n-1} + c_1 M^{n-2} + ... + c_{n-1} Id) / c_n.

    Raises:
        NotInvertibleError: if det M is not a unit
    """
    R = M.ring
    n = M.n
    cp = charpoly_mat(M)
    c_n = cp[0] if cp else R.zero
    if not R.is_unit(c_n):
        raise NotInvertibleError("matrix determinant is not a unit")
    # coefficients high to low: X^n + c_1 X^{n-1} + ... ; cp is low to high
    high = [cp[n - i] if n - i < len(cp) else R.zero for i in range(n)]
    acc = Mat.zeros(R, n)
    ident = Mat.identity(R, n)
    for c in high:
        acc = acc * M + ident.scale(c)
    return acc.scale(R.neg(R.inv(c_n)))
