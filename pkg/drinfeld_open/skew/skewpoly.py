"""
The twisted polynomial ring K{tau}, tau*c = c^q*tau.

A SkewPoly sum c_i tau^i acts on any field containing K as the F_q-linear
map x -> sum c_i x^(q^i). Only right division is provided: it needs no q-th
roots of coefficients.
"""
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from ..algebra.linalg import nullspace, transpose
from ..algebra.quotients import ExtensionField
from ..algebra.rings import Elem, Field
from ..errors import DependencyError, RingMismatchError, ZeroPolynomialError


class SkewRing:
    """
    K{tau} for a field K containing F_q.

    Args:
        K: coefficient field
        q: order of the constant field; tau is the q-power map
    """

    def __init__(self, K: Field, q: int):
        self.K = K
        self.q = q

    def __call__(self, coeffs: Sequence[Elem]) -> "SkewPoly":
        zero = self.K.zero
        c = list(coeffs)
        while c and c[-1] == zero:
            c.pop()
        return SkewPoly(self, tuple(c))

    @property
    def zero(self) -> "SkewPoly":
        return SkewPoly(self, ())

    @property
    def one(self) -> "SkewPoly":
        return SkewPoly(self, (self.K.one,))

    @property
    def tau(self) -> "SkewPoly":
        return SkewPoly(self, (self.K.zero, self.K.one))

    def const(self, c: Elem) -> "SkewPoly":
        return self([c])

    def monomial(self, c: Elem, k: int) -> "SkewPoly":
        return self([self.K.zero] * k + [c])

    def twist(self, c: Elem, i: int) -> Elem:
        """c^(q^i)."""
        if i == 0:
            return c
        return self.K.frob_power(c, self.q ** i)

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewRing) and other.K == self.K and other.q == self.q

    def __hash__(self) -> int:
        return hash(("SkewRing", self.K, self.q))

    def __repr__(self) -> str:
        return f"SkewRing({self.K!r}, q={self.q})"


@dataclass(frozen=True)
class SkewPoly:
    """sum coeffs[i] * tau^i; trailing zeros stripped."""
    ring: SkewRing
    coeffs: Tuple[Elem, ...]

    @property
    def degree(self) -> int:
        """tau-degree; -1 for zero."""
        return len(self.coeffs) - 1

    @property
    def K(self) -> Field:
        return self.ring.K

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Elem:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.K.zero

    @property
    def lead(self) -> Elem:
        return self.coeffs[-1] if self.coeffs else self.K.zero

    def tau_valuation(self) -> Optional[int]:
        """Index of the lowest nonzero coefficient."""
        for i, c in enumerate(self.coeffs):
            if c != self.K.zero:
                return i
        return None

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        return skew_add(self, other)

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return skew_sub(self, other)

    def __neg__(self) -> "SkewPoly":
        return self.ring([self.K.neg(c) for c in self.coeffs])

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        return skew_mul(self, other)

    def scale_left(self, c: Elem) -> "SkewPoly":
        """c * self."""
        return self.ring([self.K.mul(c, a) for a in self.coeffs])

    def map_coeffs(self, fn: Callable[[Elem], Elem], ring: SkewRing) -> "SkewPoly":
        return ring([fn(c) for c in self.coeffs])

    def monic(self) -> "SkewPoly":
        if self.is_zero():
            raise ZeroPolynomialError("zero skew polynomial has no monic associate")
        return self.scale_left(self.K.inv(self.lead))

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        K = self.K
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == K.zero:
                continue
            cs = K.format(c)
            if "+" in cs or " " in cs:
                cs = f"({cs})"
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if not mono:
                terms.append(cs)
            elif c == K.one:
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"SkewPoly({self.format()})"


def _same_ring(a: SkewPoly, b: SkewPoly) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring!r} vs {b.ring!r}")


def skew_add(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    _same_ring(a, b)
    K = a.K
    n = max(len(a.coeffs), len(b.coeffs))
    return a.ring([K.add(a.coeff(i), b.coeff(i)) for i in range(n)])


def skew_sub(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    _same_ring(a, b)
    K = a.K
    n = max(len(a.coeffs), len(b.coeffs))
    return a.ring([K.sub(a.coeff(i), b.coeff(i)) for i in range(n)])


def skew_mul(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    """(sum a_i tau^i)(sum b_j tau^j) = sum a_i b_j^(q^i) tau^(i+j)."""
    _same_ring(a, b)
    if a.is_zero() or b.is_zero():
        return a.ring.zero
    K = a.K
    S = a.ring
    out = [K.zero] * (len(a.coeffs) + len(b.coeffs) - 1)
    twisted = list(b.coeffs)
    for i, ai in enumerate(a.coeffs):
        if i:
            twisted = [S.twist(c, 1) for c in twisted]
        if ai == K.zero:
            continue
        for j, bj in enumerate(twisted):
            if bj != K.zero:
                out[i + j] = K.add(out[i + j], K.mul(ai, bj))
    return S(out)


def right_divmod(a: SkewPoly, b: SkewPoly) -> Tuple[SkewPoly, SkewPoly]:
    """
    (quotient, remainder) with a = quotient * b + remainder, deg remainder < deg b.

    Raises:
        ZeroPolynomialError: if b = 0
    """
    _same_ring(a, b)
    if b.is_zero():
        raise ZeroPolynomialError("skew division by zero")
    S = a.ring
    K = a.K
    db = b.degree
    rem = list(a.coeffs)
    quo = [K.zero] * max(len(rem) - db, 0)
    lead_b = b.lead
    for d in range(len(rem) - 1, db - 1, -1):
        c = rem[d]
        if c == K.zero:
            continue
        k = d - db
        c = K.div(c, S.twist(lead_b, k))
        quo[k] = c
        # subtract (c tau^k) * b
        for j, bj in enumerate(b.coeffs):
            if bj != K.zero:
                rem[k + j] = K.sub(rem[k + j], K.mul(c, S.twist(bj, k)))
    return S(quo), S(rem[:db])


def right_gcd(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    """Monic generator of the left ideal K{tau}a + K{tau}b."""
    _same_ring(a, b)
    while not b.is_zero():
        a, b = b, right_divmod(a, b)[1]
    return a.monic() if not a.is_zero() else a


def _coeff_map(a: SkewPoly, ext: Field, embed: Optional[Callable[[Elem], Elem]]) -> List[Elem]:
    if embed is None:
        if ext != a.K:
            raise RingMismatchError(f"no embedding given from {a.K!r} into {ext!r}")
        return list(a.coeffs)
    return [embed(c) for c in a.coeffs]


def eval_additive(a: SkewPoly, x: Elem, ext: Optional[Field] = None,
                  embed: Optional[Callable[[Elem], Elem]] = None) -> Elem:
    """
    sum c_i x^(q^i) for x in ext.

    Args:
        a: skew polynomial over K
        x: element of ext
        ext: field containing x (defaults to K)
        embed: embedding K -> ext, required when ext differs from K
    """
    ext = ext or a.K
    cs = _coeff_map(a, ext, embed)
    q = a.ring.q
    acc = ext.zero
    y = x
    for i, c in enumerate(cs):
        if i:
            y = ext.frob_power(y, q)
        if c != ext.zero:
            acc = ext.add(acc, ext.mul(c, y))
    return acc


def as_matrix(a: SkewPoly, ext: ExtensionField,
              embed: Optional[Callable[[Elem], Elem]] = None) -> List[List[Elem]]:
    """
    Matrix over F_q of x -> a(x) on ext, in the power basis of ext.

    ext must be an extension of F_q itself, i.e. ext.q equals the twist q.
    """
    if ext.q != a.ring.q:
        raise RingMismatchError(f"{ext!r} is not a vector space over F_{a.ring.q}")
    cs = _coeff_map(a, ext, embed)
    n = ext.n
    cols = []
    for k in range(n):
        y = ext.R.monomial(ext.base.one, k)
        acc = ext.zero
        for i, c in enumerate(cs):
            if i:
                y = ext.qth_power(y)
            if c != ext.zero:
                acc = ext.add(acc, ext.mul(c, y))
        cols.append(ext.coeffs(acc))
    return transpose(cols)


def kernel_basis(a: SkewPoly, ext: ExtensionField,
                 embed: Optional[Callable[[Elem], Elem]] = None) -> List[Elem]:
    """
    F_q-basis of {x in ext : a(x) = 0}, the null space of the matrix of a.

    Raises:
        ZeroPolynomialError: if a = 0
    """
    if a.is_zero():
        raise ZeroPolynomialError("kernel of the zero skew polynomial")
    M = as_matrix(a, ext, embed)
    return [ext.from_coeffs(v) for v in nullspace(M, ext.base, ext.n)]


def annihilator_of_subspace(W: Sequence[Elem], ext: ExtensionField) -> SkewPoly:
    """
    Monic f over ext of tau-degree len(W) whose kernel is span_{F_q}(W).

    f_0 = 1 and f_{j+1} = (tau - f_j(w)^(q-1)) f_j.

    Raises:
        DependencyError: if W is F_q-dependent
    """
    S = SkewRing(ext, ext.q)
    f = S.one
    for j, w in enumerate(W):
        v = eval_additive(f, w, ext)
        if v == ext.zero:
            raise DependencyError(f"element {j} lies in the span of the previous ones")
        c = ext.pow(v, ext.q - 1)
        f = skew_mul(S([ext.neg(c), ext.one]), f)
    return f
