"""
Parent-object protocol shared by every ring in the package.

Elements are plain hashable Python values (ints, tuples); all arithmetic goes
through the parent, e.g. ``F.mul(a, b)``. Parents compare structurally, which
is what the Mat and SkewPoly wrappers use to reject mixed-ring operations.
"""
import random
from typing import Any, Iterable, Iterator, List, Tuple

from ..errors import NotInvertibleError, NotPrimePowerError

Elem = Any


def is_prime(n: int) -> bool:
    """Deterministic trial division; orders in this package are small."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> Tuple[int, int]:
    """
    Split q = p^e.

    Raises:
        NotPrimePowerError: if q is not a prime power
    """
    if not isinstance(q, int) or q < 2:
        raise NotPrimePowerError(f"{q!r} is not a prime power")
    p = 2
    while p * p <= q and q % p != 0:
        p += 1
    if q % p != 0:
        p = q
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1 or not is_prime(p):
        raise NotPrimePowerError(f"{q} is not a prime power")
    return p, e


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except NotPrimePowerError:
        return False
    return True


class Ring:
    """Commutative ring with identity. Subclasses fill in the arithmetic."""

    characteristic: int = 0

    @property
    def zero(self) -> Elem:
        raise NotImplementedError

    @property
    def one(self) -> Elem:
        raise NotImplementedError

    def add(self, a: Elem, b: Elem) -> Elem:
        raise NotImplementedError

    def neg(self, a: Elem) -> Elem:
        raise NotImplementedError

    def mul(self, a: Elem, b: Elem) -> Elem:
        raise NotImplementedError

    def sub(self, a: Elem, b: Elem) -> Elem:
        return self.add(a, self.neg(b))

    def is_zero(self, a: Elem) -> bool:
        return a == self.zero

    def is_one(self, a: Elem) -> bool:
        return a == self.one

    def is_unit(self, a: Elem) -> bool:
        raise NotImplementedError

    def inv(self, a: Elem) -> Elem:
        raise NotInvertibleError(f"{type(self).__name__} has no generic inverse")

    def div(self, a: Elem, b: Elem) -> Elem:
        return self.mul(a, self.inv(b))

    def from_int(self, n: int) -> Elem:
        """The image of the integer n under Z -> R."""
        result = self.zero
        base = self.one
        if n < 0:
            base = self.neg(base)
            n = -n
        if self.characteristic:
            n %= self.characteristic
        while n:
            if n & 1:
                result = self.add(result, base)
            base = self.add(base, base)
            n >>= 1
        return result

    def pow(self, a: Elem, e: int) -> Elem:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def frob_power(self, a: Elem, power: int) -> Elem:
        """a^power where power is a power of the characteristic."""
        return self.pow(a, power)

    def sum(self, items: Iterable[Elem]) -> Elem:
        total = self.zero
        for x in items:
            total = self.add(total, x)
        return total

    def prod(self, items: Iterable[Elem]) -> Elem:
        total = self.one
        for x in items:
            total = self.mul(total, x)
        return total

    def scale_int(self, n: int, a: Elem) -> Elem:
        return self.mul(self.from_int(n), a)

    def format(self, a: Elem) -> str:
        return repr(a)

    # finite rings --------------------------------------------------------
    @property
    def order(self) -> int:
        raise NotImplementedError

    def elements(self) -> Iterator[Elem]:
        raise NotImplementedError

    def prime_coords(self, a: Elem) -> List[int]:
        """Coordinates of a over the prime field (finite rings only)."""
        raise NotImplementedError

    def from_prime_coords(self, v: Iterable[int]) -> Elem:
        raise NotImplementedError

    @property
    def prime_dim(self) -> int:
        raise NotImplementedError


class Field(Ring):
    """A field: every nonzero element is a unit."""

    def is_unit(self, a: Elem) -> bool:
        return not self.is_zero(a)

    def random_element(self, rng: random.Random) -> Elem:
        raise NotImplementedError

    def index(self, a: Elem) -> int:
        """Integer code of a finite-field element (0 <= code < order)."""
        raise NotImplementedError

    def element(self, code: int) -> Elem:
        raise NotImplementedError

    def elements(self) -> Iterator[Elem]:
        for code in range(self.order):
            yield self.element(code)

    def pth_root(self, a: Elem) -> Elem:
        """Inverse of the absolute Frobenius (finite fields are perfect)."""
        return self.pow(a, self.order // self.characteristic)


class ProductRing(Ring):
    """R1 x R2 with componentwise operations; elements are pairs."""

    def __init__(self, R1: Ring, R2: Ring):
        if R1.characteristic != R2.characteristic:
            raise NotPrimePowerError("factors of a product ring must share the characteristic")
        self.R1 = R1
        self.R2 = R2
        self.characteristic = R1.characteristic

    @property
    def zero(self) -> Tuple[Elem, Elem]:
        return (self.R1.zero, self.R2.zero)

    @property
    def one(self) -> Tuple[Elem, Elem]:
        return (self.R1.one, self.R2.one)

    def add(self, a, b):
        return (self.R1.add(a[0], b[0]), self.R2.add(a[1], b[1]))

    def neg(self, a):
        return (self.R1.neg(a[0]), self.R2.neg(a[1]))

    def mul(self, a, b):
        return (self.R1.mul(a[0], b[0]), self.R2.mul(a[1], b[1]))

    def is_unit(self, a) -> bool:
        return self.R1.is_unit(a[0]) and self.R2.is_unit(a[1])

    @property
    def order(self) -> int:
        return self.R1.order * self.R2.order

    def prime_coords(self, a) -> List[int]:
        return list(self.R1.prime_coords(a[0])) + list(self.R2.prime_coords(a[1]))

    @property
    def prime_dim(self) -> int:
        return self.R1.prime_dim + self.R2.prime_dim

    def __repr__(self) -> str:
        return f"ProductRing({self.R1!r}, {self.R2!r})"
