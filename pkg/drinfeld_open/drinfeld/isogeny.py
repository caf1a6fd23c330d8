"""
Isogenies cut out by finite subgroups of torsion stable under endomorphisms.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..algebra.linalg import Subspace
from ..algebra.polys import Poly
from ..algebra.quotients import Embedding, ExtensionField
from ..algebra.rings import Elem
from ..errors import CharacteristicPrimeError, InvariantViolation, RingMismatchError
from ..skew.skewpoly import SkewPoly, SkewRing, annihilator_of_subspace, eval_additive, right_divmod, skew_mul
from .module import DrinfeldModule, phi_of, require_finite
from .torsion import kernel_of


@dataclass
class IsogenyResult:
    """
    f: phi -> phi' with f phi_a = phi'_a f.

    Args:
        f: the isogeny, over the base field when it descends
        target: the module phi'
        kernel: F_q-basis of ker f inside the torsion field
    """
    f: SkewPoly
    target: DrinfeldModule
    kernel: List[Elem]

    @property
    def degree(self) -> int:
        return self.f.degree


def isogeny_from_endomorphism(phi: DrinfeldModule, s: Sequence[SkewPoly], a: Poly,
                              samples: Optional[Sequence[Poly]] = None,
                              cap: Optional[int] = None) -> IsogenyResult:
    """
    The isogeny with kernel H = sum of s'(phi[a]) over s' in s.

    H is closed under phi_T and every s' before its annihilator f is built;
    phi'_T is the exact right quotient of f phi_T by f.

    Args:
        phi: module over a finite field
        s: endomorphisms of phi (SkewPolys commuting with phi_T)
        a: nonzero element of A with phi_a separable
        samples: elements a'' of A on which f phi_a'' = phi'_a'' f is asserted
        cap: torsion field cap

    Raises:
        CharacteristicPrimeError: phi_a is inseparable
        ValueError: some s' is not an endomorphism
        InvariantViolation: the quotient is not exact or the relation fails
    """
    require_finite(phi)
    T = phi.phi_T
    for e in s:
        if e * T != T * e:
            raise ValueError(f"{e.format()} does not commute with phi_T")
    if phi_of(phi, a).coeff(0) == phi.K.zero:
        raise CharacteristicPrimeError("kernel of phi_a is not etale")

    L, emb, V = kernel_of(phi, a, cap)
    space = Subspace(L.base, L.n)
    H: List[Elem] = []
    queue = [eval_additive(e, v, L, emb) for e in s for v in V]
    while queue:
        x = queue.pop(0)
        if space.add(L.coeffs(x)):
            H.append(x)
            queue.append(eval_additive(T, x, L, emb))
            queue.extend(eval_additive(e, x, L, emb) for e in s)

    f = annihilator_of_subspace(H, L)
    SL = SkewRing(L, phi.q)
    lifted_T = T.map_coeffs(emb, SL)
    quo, rem = right_divmod(skew_mul(f, lifted_T), f)
    if not rem.is_zero():
        raise InvariantViolation("f phi_T is not right divisible by f")

    target, f_out = _descend(phi, L, emb, quo, f)
    for b in samples if samples is not None else [a]:
        lhs = skew_mul(f, phi_of(phi, b).map_coeffs(emb, SL))
        rhs = skew_mul(phi_of(DrinfeldModule(L, quo.coeffs), b), f)
        if lhs != rhs:
            raise InvariantViolation(f"f phi_b != phi'_b f for b = {phi.A.format(b)}")
    return IsogenyResult(f_out, target, H)


def _descend(phi: DrinfeldModule, L: ExtensionField, emb: Embedding, phi_T_prime: SkewPoly,
             f: SkewPoly) -> Tuple[DrinfeldModule, SkewPoly]:
    """Move phi'_T and f back to the base field of phi when their coefficients lie there."""
    try:
        back = [emb.preimage(c) for c in phi_T_prime.coeffs]
        f_back = [emb.preimage(c) for c in f.coeffs]
    except RingMismatchError:
        return DrinfeldModule(L, phi_T_prime.coeffs, phi.name + "'"), f
    return DrinfeldModule(phi.K, tuple(back), phi.name + "'"), phi.skew_ring(f_back)
