"""
Drinfeld F_q[T]-modules given by the image of T in K{tau}.

K is either a finite extension of F_q (an ExtensionField over GF(q), degree 1
allowed) or a rational function field F_q(s) for families.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

from ..algebra.fields import GF
from ..algebra.polys import Poly, PolyRing
from ..algebra.quotients import ExtensionField, build_extension
from ..algebra.ratfunc import PrimeOfA, RationalFunctionField
from ..algebra.rings import Elem, Field
from ..errors import InvariantViolation, RingMismatchError
from ..skew.skewpoly import SkewPoly, SkewRing


@dataclass(frozen=True)
class DrinfeldModule:
    """
    phi: A = F_q[T] -> K{tau}, determined by phi_T = sum phiT[i] tau^i.

    Args:
        K: base field (ExtensionField over GF(q) or RationalFunctionField over GF(q))
        phiT: coefficients of phi_T, constant first, last one nonzero
        name: label carried into reports
    """
    K: Field
    phiT: Tuple[Elem, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not isinstance(self.K, (ExtensionField, RationalFunctionField)):
            raise RingMismatchError(f"unsupported base field {self.K!r}")
        coeffs = list(self.phiT)
        while coeffs and coeffs[-1] == self.K.zero:
            coeffs.pop()
        if len(coeffs) < 2:
            raise ValueError("phi_T must have tau-degree >= 1")
        object.__setattr__(self, "phiT", tuple(coeffs))

    @classmethod
    def over_finite(cls, q: int, m: int, phiT, name: str = "") -> "DrinfeldModule":
        """Module over F_{q^m} = build_extension(q, m); phiT entries are field elements."""
        return cls(build_extension(q, m), tuple(phiT), name)

    # --- structure -------------------------------------------------------
    @property
    def q(self) -> int:
        return self.K.base.order

    @property
    def A(self) -> PolyRing:
        return PolyRing(GF(self.q), "T")

    @property
    def rank(self) -> int:
        return len(self.phiT) - 1

    @property
    def is_finite(self) -> bool:
        return isinstance(self.K, ExtensionField)

    @property
    def m(self) -> int:
        """[K : F_q] for a finite base."""
        if not self.is_finite:
            raise RingMismatchError("base field is not finite")
        return self.K.n

    @property
    def gamma(self) -> Elem:
        """gamma(T), the constant coefficient of phi_T."""
        return self.phiT[0]

    @property
    def skew_ring(self) -> SkewRing:
        return SkewRing(self.K, self.q)

    @property
    def phi_T(self) -> SkewPoly:
        return self.skew_ring(self.phiT)

    def format(self) -> str:
        return self.phi_T.format()

    def __repr__(self) -> str:
        label = f"{self.name}: " if self.name else ""
        return f"DrinfeldModule({label}phi_T = {self.format()} over {self.K!r})"


def phi_of(phi: DrinfeldModule, a: Poly) -> SkewPoly:
    """
    phi_a for a in F_q[T], by Horner in T.

    Returns:
        SkewPoly over phi.K of tau-degree rank * deg(a)
    """
    S = phi.skew_ring
    K = phi.K
    T = phi.phi_T
    acc = S.zero
    for c in reversed(a):
        acc = acc * T
        if c != K.base.zero:
            acc = acc + S.const(K.from_base(c))
    return acc


def characteristic(phi: DrinfeldModule) -> Optional[PrimeOfA]:
    """
    The prime p_0 = ker(a -> gamma(a)), or None in generic characteristic.

    Over a finite base this is the minimal polynomial of gamma(T) over F_q;
    over F_q(s) it exists only when gamma(T) is a constant.
    """
    A = phi.A
    K = phi.K
    g = phi.gamma
    if isinstance(K, RationalFunctionField):
        if not (K.is_polynomial(g) and len(g.num) <= 1):
            return None
        c = g.num[0] if g.num else K.base.zero
        return PrimeOfA(A, (K.base.neg(c), K.base.one))
    return PrimeOfA(A, minimal_polynomial(K, g))


def minimal_polynomial(K: ExtensionField, x: Elem) -> Poly:
    """Minimal polynomial over the base field, as the product over the Frobenius orbit."""
    orbit = [x]
    y = K.qth_power(x)
    while y != x:
        orbit.append(y)
        y = K.qth_power(y)
    RK = PolyRing(K, "X")
    f = RK.one
    for c in orbit:
        f = RK.mul(f, (K.neg(c), K.one))
    return tuple(K.to_base(c) for c in f)


def height(phi: DrinfeldModule) -> int:
    """
    tau-valuation of phi_{pi_0} divided by deg(pi_0).

    Raises:
        InvariantViolation: generic characteristic, or a non-integral quotient
    """
    p0 = characteristic(phi)
    if p0 is None:
        raise InvariantViolation("height is only defined in special characteristic")
    v = phi_of(phi, p0.pi).tau_valuation()
    h = Fraction(v, p0.deg)
    if h.denominator != 1:
        raise InvariantViolation(f"tau-valuation {v} of phi_pi0 not divisible by deg pi0 = {p0.deg}")
    return int(h)


@lru_cache(maxsize=256)
def phi_powers(phi: DrinfeldModule, n: int) -> Tuple[SkewPoly, ...]:
    """phi_{T^0}, ..., phi_{T^(n-1)}."""
    out = [phi.skew_ring.one]
    for _ in range(1, n):
        out.append(out[-1] * phi.phi_T)
    return tuple(out)


def require_finite(phi: DrinfeldModule) -> None:
    if not phi.is_finite:
        raise RingMismatchError("operation needs a module over a finite field")
