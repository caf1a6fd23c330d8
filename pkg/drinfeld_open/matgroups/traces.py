"""
Adjoint traces and the trace criteria for level-2 and level-3 generation.
"""
from dataclasses import dataclass
from typing import Dict, Iterable, Sequence

from ..algebra.fields import SmallField
from ..algebra.linalg import generated_subring
from ..algebra.matrices import Mat, inverse
from ..algebra.rings import Elem, Ring
from ..algebra.trunc import TruncRing
from ..errors import NotInvertibleError, RingMismatchError


def tr_ad(g: Mat) -> Elem:
    """Tr Ad(g) = sum of a_i / a_j over eigenvalue pairs = Tr(g) Tr(g^-1)."""
    R = g.ring
    return R.mul(g.trace(), inverse(g).trace())


def tr_ad_from_charpoly(cp: Sequence[Elem], R: Ring) -> Elem:
    """
    Tr Ad from X^n + b_1 X^(n-1) + ... + b_n as b_1 b_(n-1) / b_n, with b_0 = 1.

    Raises:
        NotInvertibleError: b_n is not a unit
    """
    n = len(cp) - 1
    if n < 1:
        raise ValueError("characteristic polynomial must have degree >= 1")
    beta = lambda i: cp[n - i]  # noqa: E731
    if not R.is_unit(beta(n)):
        raise NotInvertibleError("constant term of the characteristic polynomial is not a unit")
    return R.mul(R.mul(beta(1), beta(n - 1)), R.inv(beta(n)))


def char2_trad_identity(g: Mat) -> bool:
    """Tr Ad(g) = Tr(g)^2 det(g)^-1 for g in GL_2 over a ring of characteristic 2."""
    R = g.ring
    if R.characteristic != 2 or g.n != 2:
        raise ValueError("identity holds for 2 x 2 matrices in characteristic 2")
    t = g.trace()
    return tr_ad(g) == R.mul(R.mul(t, t), R.inv(g.det()))


def _require_trunc(R: Ring) -> TruncRing:
    if not isinstance(R, TruncRing):
        raise RingMismatchError(f"trace criteria work over k[u]/(u^m), got {R!r}")
    return R


def trace_criterion_1(samples: Iterable[Elem], R: TruncRing) -> bool:
    """True iff the samples generate k[u]/(u^m) as a ring (m >= 2)."""
    R = _require_trunc(R)
    if R.m < 2:
        raise ValueError("trace criterion needs truncation length >= 2")
    samples = list(samples)
    if not samples:
        return False
    return len(generated_subring(R, samples)) == R.prime_dim


def is_square_truncation(R: TruncRing, x: Elem) -> bool:
    """In characteristic 2, the squares of k[u]/(u^3) are exactly a + b u^2."""
    return R.coeff(x, 1) == R.k.zero


def trace_criterion_2(samples: Iterable[Elem], R: TruncRing) -> bool:
    """
    True iff the samples generate the subring of squares k + k u^2 of k[u]/(u^3).

    Samples with a nonzero u coefficient are not squares; such input is
    rejected (False).
    """
    R = _require_trunc(R)
    if R.characteristic != 2 or R.m != 3:
        raise ValueError("second trace criterion is stated for characteristic 2 at m = 3")
    samples = list(samples)
    if not samples or not all(is_square_truncation(R, x) for x in samples):
        return False
    return len(generated_subring(R, samples)) == 2 * R.k.prime_dim


# ---------------------------------------------------------------------------
# Characteristic-2 scalar ladder
# ---------------------------------------------------------------------------

def scalar_layer_square_map(R: TruncRing, x: Elem, g2: Mat = None) -> Dict[str, Elem]:
    """
    For g = diag(1+ux, (1+ux)^-1) g2 with g2 in SL_2, g2 = Id mod u^2:
    the level-1 scalar class of g is x and Tr((1+ux) g - Id) = x^2 u^2 mod u^3.

    Returns the level-1 class, the u^2 coefficient of the trace, and the
    reference value x^2.
    """
    if R.characteristic != 2 or R.m != 3:
        raise ValueError("scalar ladder is built over k[u]/(u^3) in characteristic 2")
    k = R.k
    if g2 is None:
        g2 = Mat.from_rows(R, [[R.one, R.mul(R.u, R.u)], [R.zero, R.one]])
    if g2.det() != R.one or any(R.coeff(R.sub(g2[i, j], R.one if i == j else R.zero), t) != k.zero
                                for i in range(2) for j in range(2) for t in range(2)):
        raise ValueError("g2 must lie in SL_2 and be the identity modulo u^2")
    s = R.add(R.one, R.mul(R.u, R.from_base(x)))
    g = Mat.diag(R, [s, R.inv(s)]) * g2
    tilde = g.scale(s)
    trace = R.sub(tilde.trace(), R.from_int(2))
    level1 = R.coeff(R.sub(g[0, 0], R.one), 1)
    return {"class": level1, "trace_u2": R.coeff(trace, 2), "square": k.mul(x, x),
            "trace_low": [R.coeff(trace, 0), R.coeff(trace, 1)]}


def square_map_is_bijective(k: SmallField) -> bool:
    """x -> x^2 on k, the connecting map of the scalar ladder, via explicit matrices."""
    R = TruncRing(k, 3)
    images = set()
    for x in k.elements():
        out = scalar_layer_square_map(R, x)
        if out["class"] != x or out["trace_u2"] != out["square"] or any(c != k.zero for c in out["trace_low"]):
            return False
        images.add(out["trace_u2"])
    return len(images) == k.order


@dataclass(frozen=True)
class LadderElement:
    """h = gamma * g2 * (1 + u x) in GL_2(k[u]/(u^3)) with gamma over k and g2 = Id mod u^2."""
    gamma: Mat
    g2: Mat
    x: Elem

    def matrix(self) -> Mat:
        R = self.g2.ring
        s = R.add(R.one, R.mul(R.u, self.x))
        return (self.gamma * self.g2).scale(s)

    def __mul__(self, other: "LadderElement") -> "LadderElement":
        """(gamma' g2' s')(gamma g2 s) = (gamma' gamma)(gamma^-1 g2' gamma g2)(s' s)."""
        R = self.g2.ring
        gi = inverse(other.gamma)
        g2 = gi * self.g2 * other.gamma * other.g2
        # (1 + u x')(1 + u x) = 1 + u (x + x' + u x x')
        y = R.add(R.add(self.x, other.x), R.mul(R.u, R.mul(self.x, other.x)))
        return LadderElement(self.gamma * other.gamma, g2, y)


def trace_homomorphism(h: LadderElement) -> Elem:
    """f(h) = Tr(g2 - Id) mod u^3, an element of u^2 k."""
    R = h.g2.ring
    return R.sub(h.g2.trace(), R.from_int(2))


def lift_constant(R: TruncRing, gamma: Mat) -> Mat:
    """Teichmuller lift of a matrix over k."""
    return gamma.map(R.from_base, R)
