"""
Quotients of a polynomial ring by a monic modulus.

QuotientRing covers A/pi^i and k[u]/(u^m); ExtensionField is the case of an
irreducible modulus. ``build_extension(q, k)`` fixes one extension of each
degree (first monic irreducible in lexicographic order); two independently
built extensions are related only through an explicit Embedding.
"""
import random
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional

from ..errors import NotInvertibleError, RingMismatchError
from .fields import GF
from .linalg import solve, transpose
from .polys import Poly, PolyRing, first_irreducible, roots
from .rings import Elem, Field, Ring


class QuotientRing(Ring):
    """
    R/(modulus) for R a polynomial ring over a finite field.

    Elements are reduced polynomials (tuples, constant first).
    """

    def __init__(self, R: PolyRing, modulus: Poly):
        self.R = R
        self.base = R.base
        self.modulus = R.monic(modulus)
        self.n = R.deg(self.modulus)
        self.characteristic = R.characteristic

    def reduce(self, f: Poly) -> Poly:
        if len(f) <= self.n:
            return f
        return self.R.rem(f, self.modulus)

    @property
    def zero(self) -> Poly:
        return ()

    @property
    def one(self) -> Poly:
        return self.reduce(self.R.one)

    def add(self, a: Poly, b: Poly) -> Poly:
        return self.R.add(a, b)

    def neg(self, a: Poly) -> Poly:
        return self.R.neg(a)

    def sub(self, a: Poly, b: Poly) -> Poly:
        return self.R.sub(a, b)

    def mul(self, a: Poly, b: Poly) -> Poly:
        return self.reduce(self.R.mul(a, b))

    def scale(self, c: Elem, a: Poly) -> Poly:
        return self.R.scale(c, a)

    def from_int(self, n: int) -> Poly:
        return self.reduce(self.R.from_int(n))

    def from_base(self, c: Elem) -> Poly:
        return self.reduce(self.R.const(c))

    def is_unit(self, a: Poly) -> bool:
        return bool(a) and self.R.gcd(a, self.modulus) == self.R.one

    def inv(self, a: Poly) -> Poly:
        d, s, _ = self.R.xgcd(a, self.modulus)
        if d != self.R.one:
            raise NotInvertibleError(f"{self.format(a)} is not a unit modulo {self.R.format(self.modulus)}")
        return self.reduce(s)

    def lift(self, a: Poly) -> Poly:
        return a

    # --- finite ring structure -----------------------------------------
    @property
    def order(self) -> int:
        return self.base.order ** self.n

    def index(self, a: Poly) -> int:
        return self.R.code(a)

    def element(self, code: int) -> Poly:
        return self.R.from_code(code)

    def elements(self) -> Iterator[Poly]:
        for code in range(self.order):
            yield self.element(code)

    def coeffs(self, a: Poly) -> List[Elem]:
        """Base-field coordinates, padded to the degree of the modulus."""
        return list(a) + [self.base.zero] * (self.n - len(a))

    def from_coeffs(self, v: Iterable[Elem]) -> Poly:
        return self.R.from_coeffs(list(v))

    def prime_coords(self, a: Poly) -> List[int]:
        out: List[int] = []
        for c in self.coeffs(a):
            out.extend(self.base.prime_coords(c))
        return out

    def from_prime_coords(self, v: Iterable[int]) -> Poly:
        v = list(v)
        k = self.base.prime_dim
        return self.R.from_coeffs([self.base.from_prime_coords(v[i * k:(i + 1) * k]) for i in range(self.n)])

    @property
    def prime_dim(self) -> int:
        return self.n * self.base.prime_dim

    def format(self, a: Poly, var: Optional[str] = None) -> str:
        return self.R.format(a, var)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuotientRing)
            and type(other) is type(self)
            and other.R == self.R
            and other.modulus == self.modulus
        )

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.R, self.modulus))

    def __repr__(self) -> str:
        return f"QuotientRing({self.R!r} / ({self.R.format(self.modulus)}))"


class ExtensionField(QuotientRing, Field):
    """
    base[var]/(modulus) with modulus irreducible.

    The q-power map (q = |base|) is base-linear and kept as the images of the
    power basis, so Frobenius twists cost one matrix-vector product.
    """

    def __init__(self, base: Field, modulus: Poly, var: str = "z"):
        super().__init__(PolyRing(base, var), modulus)
        self.degree = self.n
        self.q = base.order
        self._frob_images = self._frobenius_images()

    def _frobenius_images(self) -> List[Poly]:
        R = self.R
        if self.n <= 1:
            return [self.one] if self.n == 1 else []
        theta_q = R.powmod(R.gen, self.q, self.modulus)
        images = [self.one]
        for _ in range(1, self.n):
            images.append(self.mul(images[-1], theta_q))
        return images

    def qth_power(self, a: Poly) -> Poly:
        """a^q where q is the order of the base field."""
        if len(a) <= 1:
            return a
        R = self.R
        acc: Poly = ()
        for c, img in zip(a, self._frob_images):
            if c != self.base.zero:
                acc = R.add(acc, R.scale(c, img))
        return acc

    def frob_power(self, a: Poly, power: int) -> Poly:
        k = _log_exact(power, self.q)
        if k is None:
            return self.pow(a, power)
        for _ in range(k % max(self.n, 1)):
            a = self.qth_power(a)
        return a

    def pow(self, a: Poly, e: int) -> Poly:
        if not a:
            if e < 0:
                raise NotInvertibleError("0 has no inverse")
            return self.one if e == 0 else ()
        if e < 0:
            a, e = self.inv(a), -e
        if e >= self.order - 1:
            e %= self.order - 1
        return super().pow(a, e)

    def inv(self, a: Poly) -> Poly:
        if not a:
            raise NotInvertibleError("0 has no inverse")
        return super().inv(a)

    def is_unit(self, a: Poly) -> bool:
        return bool(a)

    def random_element(self, rng: random.Random) -> Poly:
        return self.element(rng.randrange(self.order))

    def pth_root(self, a: Poly) -> Poly:
        return self.pow(a, self.order // self.characteristic)

    def is_square(self, a: Poly) -> bool:
        if not a or self.characteristic == 2:
            return True
        return self.pow(a, (self.order - 1) // 2) == self.one

    def in_base(self, a: Poly) -> bool:
        return len(a) <= 1

    def to_base(self, a: Poly) -> Elem:
        if len(a) > 1:
            raise RingMismatchError(f"{self.format(a)} does not lie in {self.base!r}")
        return a[0] if a else self.base.zero

    @property
    def generator(self) -> Poly:
        return self.reduce(self.R.gen)

    def __repr__(self) -> str:
        return f"ExtensionField({self.base!r}[{self.R.var}]/({self.R.format(self.modulus)}))"


def _log_exact(n: int, b: int) -> Optional[int]:
    k = 0
    while n > 1 and n % b == 0:
        n //= b
        k += 1
    return k if n == 1 else None


@lru_cache(maxsize=None)
def build_extension(q: int, k: int) -> ExtensionField:
    """
    F_{q^k} as base[z]/(f) with f the first monic irreducible of degree k over F_q.

    Raises:
        NotPrimePowerError: if q is not a prime power
    """
    if k < 1:
        raise ValueError(f"extension degree must be positive, got {k}")
    F = GF(q)
    return ExtensionField(F, first_irreducible(F, k))


class Embedding:
    """
    A field embedding src -> dst fixing the common base field.

    Args:
        src: source extension
        dst: target extension, same base field
        image: image of the generator of src (a root of its modulus in dst)
    """

    def __init__(self, src: ExtensionField, dst: ExtensionField, image: Poly):
        self.src = src
        self.dst = dst
        self.image = image
        powers = [dst.one]
        for _ in range(1, src.n):
            powers.append(dst.mul(powers[-1], image))
        self._powers = powers

    def __call__(self, a: Poly) -> Poly:
        R = self.dst.R
        acc: Poly = ()
        for c, pw in zip(a, self._powers):
            if c != self.src.base.zero:
                acc = R.add(acc, R.scale(c, pw))
        return acc

    def preimage(self, b: Poly) -> Poly:
        """The src element mapping to b; raises if b is outside the image."""
        cols = [self.dst.coeffs(pw) for pw in self._powers]
        x = solve(transpose(cols), self.dst.coeffs(b), self.src.base)
        if x is None:
            raise RingMismatchError(f"{self.dst.format(b)} is not in the image of {self.src!r}")
        return self.src.from_coeffs(x)

    def __repr__(self) -> str:
        return f"Embedding({self.src!r} -> {self.dst!r}, z -> {self.dst.format(self.image)})"


@lru_cache(maxsize=None)
def find_embedding(src: ExtensionField, dst: ExtensionField, seed: int = 0) -> Embedding:
    """
    The embedding sending the generator of src to the least root (by code) of its modulus in dst.

    Raises:
        RingMismatchError: different base fields, or [dst:base] not divisible by [src:base]
    """
    if src.base != dst.base:
        raise RingMismatchError(f"{src!r} and {dst!r} have different base fields")
    if dst.n % src.n:
        raise RingMismatchError(f"{src!r} does not embed in {dst!r}")
    if src == dst:
        return Embedding(src, dst, dst.generator)
    mod = src.modulus
    if src.n == 1:
        return Embedding(src, dst, dst.from_base(src.base.neg(mod[0])))
    lifted = tuple(dst.from_base(c) for c in mod)
    found = roots(PolyRing(dst), lifted, seed=seed)
    if not found:
        raise RingMismatchError(f"modulus of {src!r} has no root in {dst!r}")
    return Embedding(src, dst, found[0])