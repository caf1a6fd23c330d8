"""
Truncated power series rings k[u]/(u^m) over a finite field k.
"""
from typing import List, Optional, Sequence

from .polys import Poly, PolyRing
from .quotients import QuotientRing
from .rings import Elem, Field


class TruncRing(QuotientRing):
    """
    k[u]/(u^m), a length-m quotient of k[[u]].

    Args:
        k: residue field
        m: truncation length, m >= 1
    """

    def __init__(self, k: Field, m: int):
        if m < 1:
            raise ValueError(f"truncation length must be >= 1, got {m}")
        R = PolyRing(k, "u")
        super().__init__(R, R.monomial(k.one, m))
        self.k = k
        self.m = m

    def valuation(self, a: Poly) -> Optional[int]:
        """Index of the first nonzero coefficient; None for 0."""
        for i, c in enumerate(a):
            if c != self.k.zero:
                return i
        return None

    def residue(self, a: Poly) -> Elem:
        return a[0] if a else self.k.zero

    def teichmuller(self, c: Elem) -> Poly:
        return self.from_base(c)

    def coeff(self, a: Poly, i: int) -> Elem:
        return a[i] if i < len(a) else self.k.zero

    @property
    def u(self) -> Poly:
        return self.reduce(self.R.gen)

    def is_unit(self, a: Poly) -> bool:
        return self.residue(a) != self.k.zero

    def truncate(self, a: Poly, m: int) -> Poly:
        """Image in k[u]/(u^m) for m <= self.m."""
        return self.R.strip(a[:m])

    def from_digits(self, digits: Sequence[Elem]) -> Poly:
        return self.R.from_coeffs(list(digits)[:self.m])

    def digits(self, a: Poly) -> List[Elem]:
        return self.coeffs(a)

    def __repr__(self) -> str:
        return f"TruncRing({self.k!r}, m={self.m})"
