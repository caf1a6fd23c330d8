"""
Families of Drinfeld modules over F_q(s) and their specializations s -> alpha.
"""
from dataclasses import dataclass
from typing import Iterator, List, Union

from ..algebra.quotients import ExtensionField, build_extension
from ..algebra.ratfunc import RationalFunctionField
from ..algebra.rings import Elem
from .module import DrinfeldModule


@dataclass(frozen=True)
class Place:
    """
    A closed point of the s-line: alpha in F_{q^k}, up to Frobenius conjugacy.

    Args:
        q: constant field size
        k: degree of the field alpha is taken in
        alpha: element of build_extension(q, k)
    """
    q: int
    k: int
    alpha: Elem

    @property
    def field(self) -> ExtensionField:
        return build_extension(self.q, self.k)

    @property
    def degree(self) -> int:
        """[F_q(alpha) : F_q], the degree of the closed point."""
        F = self.field
        d = 1
        y = F.qth_power(self.alpha)
        while y != self.alpha:
            y = F.qth_power(y)
            d += 1
        return d

    @property
    def label(self) -> str:
        """"k:expr", the form parse_place reads."""
        return f"{self.k}:{self.field.format(self.alpha).replace(' ', '')}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class BadReduction:
    """Leading coefficient of phi_T vanishes at the place."""
    place: Place
    reason: str

    def to_dict(self) -> dict:
        return {"place": self.place.label, "status": "bad_reduction", "reason": self.reason}


def specialize(phi: DrinfeldModule, place: Place) -> Union[DrinfeldModule, BadReduction]:
    """
    Substitute s -> alpha in every coefficient of phi_T.

    Returns:
        the reduced module over build_extension(q, k), or a BadReduction
        record when the rank drops

    Raises:
        ValueError: if phi is not a family over F_q(s) with integral coefficients
    """
    K = phi.K
    if not isinstance(K, RationalFunctionField):
        raise ValueError("specialize needs a family over F_q(s)")
    if not all(K.is_polynomial(c) for c in phi.phiT):
        raise ValueError("family coefficients must be polynomial in s")
    L = place.field
    coeffs = [K.A.eval_in(c.num, place.alpha, L) for c in phi.phiT]
    if coeffs[-1] == L.zero:
        return BadReduction(place, f"leading coefficient {K.format(phi.phiT[-1])} vanishes")
    return DrinfeldModule(L, tuple(coeffs), phi.name)


def is_isotrivial(phi: DrinfeldModule) -> bool:
    """True when every coefficient of phi_T is a constant of F_q(s)."""
    K = phi.K
    if not isinstance(K, RationalFunctionField):
        return True
    return all(K.is_polynomial(c) and len(c.num) <= 1 for c in phi.phiT)


def places_of_degree(q: int, k: int) -> Iterator[Place]:
    """
    One place per Frobenius orbit of elements of exact degree k.

    The representative is the orbit member of least code; order is by code.
    """
    L = build_extension(q, k)
    for code in range(L.order):
        a = L.element(code)
        orbit = [a]
        y = L.qth_power(a)
        while y != a:
            orbit.append(y)
            y = L.qth_power(y)
        if len(orbit) == k and min(L.index(x) for x in orbit) == code:
            yield Place(q, k, a)


def places_up_to(q: int, bound: int) -> List[Place]:
    """All places of degree <= bound, by degree then code."""
    out: List[Place] = []
    for k in range(1, bound + 1):
        out.extend(places_of_degree(q, k))
    return out
