"""
A = F_q[T], its primes, and the fraction field F = F_q(T).

Valuations are normalized with v_pi(pi) = 1 at a finite prime and
v_inf(T) = -1 at infinity.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import List, NamedTuple, Optional, Tuple, Union

from ..errors import NotInvertibleError, ZeroPolynomialError
from .fields import GF
from .polys import Poly, PolyRing, factor_unipoly, is_irreducible
from .quotients import ExtensionField, QuotientRing
from .rings import Elem, Field


class _Infinity:
    """The place at infinity of F_q(T)."""

    def __repr__(self) -> str:
        return "inf"

    def __reduce__(self):
        return "INFINITY"


INFINITY = _Infinity()


class Frac(NamedTuple):
    """num/den with den monic and gcd(num, den) = 1."""
    num: Poly
    den: Poly


def poly_ring(q: int, var: str = "T") -> PolyRing:
    return PolyRing(GF(q), var)


@dataclass(frozen=True)
class PrimeOfA:
    """
    A maximal ideal (pi) of A = F_q[T], pi monic irreducible.

    Args:
        A: the polynomial ring F_q[T]
        pi: monic irreducible generator
    """
    A: PolyRing
    pi: Poly

    def __post_init__(self):
        if not self.A.is_monic(self.pi) or not is_irreducible(self.A, self.pi):
            raise ValueError(f"{self.A.format(self.pi)} is not monic irreducible")

    @property
    def deg(self) -> int:
        return len(self.pi) - 1

    @property
    def q(self) -> int:
        return self.A.base.order

    @property
    def norm(self) -> int:
        """|k_p| = q^deg(pi)."""
        return self.q ** self.deg

    def residue_field(self) -> ExtensionField:
        return _residue_field(self.A, self.pi)

    def quotient(self, i: int) -> QuotientRing:
        """A/pi^i; for i = 1 this is the residue field."""
        if i == 1:
            return self.residue_field()
        return _quotient(self.A, self.pi, i)

    def power(self, i: int) -> Poly:
        return self.A.pow(self.pi, i)

    def reduce(self, x: Union[Poly, Frac], i: int = 1) -> Poly:
        """Image of an element of A, or of F integral at pi, in A/pi^i."""
        R = self.quotient(i)
        if isinstance(x, Frac):
            den = R.reduce(x.den)
            if not R.is_unit(den):
                raise NotInvertibleError(f"{self.format()} divides the denominator of {format_frac(self.A, x)}")
            return R.mul(R.reduce(x.num), R.inv(den))
        return R.reduce(x)

    def format(self) -> str:
        return self.A.format(self.pi)

    def sort_key(self):
        return self.A.sort_key(self.pi)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"PrimeOfA({self.format()})"


@lru_cache(maxsize=None)
def _residue_field(A: PolyRing, pi: Poly) -> ExtensionField:
    return ExtensionField(A.base, pi, A.var)


@lru_cache(maxsize=None)
def _quotient(A: PolyRing, pi: Poly, i: int) -> QuotientRing:
    return QuotientRing(PolyRing(A.base, A.var), A.pow(pi, i))


@lru_cache(maxsize=None)
def primes_of_degree(A: PolyRing, d: int) -> Tuple[PrimeOfA, ...]:
    """Monic irreducibles of degree exactly d, lexicographically."""
    return tuple(
        PrimeOfA(A, f) for f in A.monics(d)
        if d == 1 or (f[0] != A.base.zero and is_irreducible(A, f))
    )


def enumerate_primes(A: PolyRing, bound: int) -> List[PrimeOfA]:
    """All monic irreducibles of degree <= bound, by degree then lexicographically."""
    out: List[PrimeOfA] = []
    for d in range(1, bound + 1):
        out.extend(primes_of_degree(A, d))
    return out


def ord_at(A: PolyRing, f: Poly, pi: Poly) -> int:
    if not f:
        raise ZeroPolynomialError("valuation of 0")
    k = 0
    while True:
        q, r = A.divmod(f, pi)
        if r:
            return k
        f = q
        k += 1


def valuation(A: PolyRing, x: Union[Poly, Frac], place) -> Optional[int]:
    """v_place(x); None for x = 0."""
    num, den = (x.num, x.den) if isinstance(x, Frac) else (x, A.one)
    if not num:
        return None
    if place is INFINITY:
        return A.deg(den) - A.deg(num)
    return ord_at(A, num, place.pi) - ord_at(A, den, place.pi)


def format_frac(A: PolyRing, x: Frac) -> str:
    if x.den == A.one:
        return A.format(x.num)
    return f"({A.format(x.num)})/({A.format(x.den)})"


class RationalFunctionField(Field):
    """
    F_q(var) with elements Frac(num, den).

    Args:
        A: the polynomial ring F_q[var]
    """

    def __init__(self, A: PolyRing):
        self.A = A
        self.base = A.base
        self.characteristic = A.characteristic

    def make(self, num: Poly, den: Poly) -> Frac:
        A = self.A
        if not den:
            raise NotInvertibleError("zero denominator")
        if not num:
            return Frac((), A.one)
        g = A.gcd(num, den)
        if g != A.one:
            num, den = A.quo(num, g), A.quo(den, g)
        c = A.lead(den)
        if c != self.base.one:
            inv = self.base.inv(c)
            num, den = A.scale(inv, num), A.scale(inv, den)
        return Frac(num, den)

    @property
    def zero(self) -> Frac:
        return Frac((), self.A.one)

    @property
    def one(self) -> Frac:
        return Frac(self.A.one, self.A.one)

    def from_poly(self, f: Poly) -> Frac:
        return Frac(f, self.A.one)

    def from_base(self, c: Elem) -> Frac:
        return Frac(self.A.const(c), self.A.one)

    def from_int(self, n: int) -> Frac:
        return self.from_poly(self.A.from_int(n))

    def add(self, a: Frac, b: Frac) -> Frac:
        A = self.A
        if a.den == b.den:
            return self.make(A.add(a.num, b.num), a.den)
        return self.make(A.add(A.mul(a.num, b.den), A.mul(b.num, a.den)), A.mul(a.den, b.den))

    def neg(self, a: Frac) -> Frac:
        return Frac(self.A.neg(a.num), a.den)

    def mul(self, a: Frac, b: Frac) -> Frac:
        A = self.A
        return self.make(A.mul(a.num, b.num), A.mul(a.den, b.den))

    def inv(self, a: Frac) -> Frac:
        if not a.num:
            raise NotInvertibleError("0 has no inverse")
        return self.make(a.den, a.num)

    def is_zero(self, a: Frac) -> bool:
        return not a.num

    def is_polynomial(self, a: Frac) -> bool:
        return a.den == self.A.one

    def frob_power(self, a: Frac, power: int) -> Frac:
        return Frac(self.A.pow(a.num, power), self.A.pow(a.den, power))

    def eval_at(self, a: Frac, x: Elem, target: Field) -> Elem:
        """Substitute var -> x in a field containing F_q; raises if the denominator vanishes."""
        den = self.A.eval_in(a.den, x, target)
        if den == target.zero:
            raise NotInvertibleError(f"denominator of {self.format(a)} vanishes")
        return target.div(self.A.eval_in(a.num, x, target), den)

    def valuation(self, a: Frac, place) -> Optional[int]:
        return valuation(self.A, a, place)

    def is_square(self, a: Frac) -> bool:
        return is_square(self.A, a)

    def format(self, a: Frac) -> str:
        return format_frac(self.A, a)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalFunctionField) and other.A == self.A

    def __hash__(self) -> int:
        return hash(("RationalFunctionField", self.A))

    def __repr__(self) -> str:
        return f"RationalFunctionField(F_{self.base.order}({self.A.var}))"


# ---------------------------------------------------------------------------
# pi-adic expansions
# ---------------------------------------------------------------------------

def teichmuller_lift(prime: PrimeOfA, d: Poly, m: int) -> Poly:
    """The Teichmuller representative of d in k_p inside A/pi^m."""
    if not d:
        return ()
    R = prime.quotient(m)
    return R.pow(R.reduce(d), prime.norm ** m)


def pi_adic_expansion(x: Union[Poly, Frac], prime: PrimeOfA, m: int) -> List[Poly]:
    """
    First m digits of x in k_p[[u]] with u = pi.

    Digits are taken against Teichmuller representatives, so the map
    A_(p) -> k_p[u]/(u^m) is a ring isomorphism onto the truncation.

    Returns:
        m residue-field elements d_0, ..., d_{m-1}
    """
    A = prime.A
    cur = prime.reduce(x, m)
    digits = []
    for j in range(m):
        level = m - j
        d = A.rem(cur, prime.pi)
        digits.append(d)
        if j == m - 1:
            break
        diff = A.rem(A.sub(cur, teichmuller_lift(prime, d, level)), prime.power(level))
        cur = A.exact_div(diff, prime.pi)
    return digits


def is_square(A: PolyRing, x: Frac) -> bool:
    """Whether x is a square in F_q(T)."""
    if not x.num:
        return True
    if A.characteristic == 2:
        return all(c == A.base.zero for part in x for c in part[1::2])
    f = A.mul(x.num, x.den)
    if not A.base.is_square(A.lead(f)):
        return False
    return all(k % 2 == 0 for _, k in factor_unipoly(A, f))
