"""
Table-backed finite fields of small order.

A SmallField of order q = p^e stores its elements as ints 0..q-1: the base-p
digits of the code are the coordinates in the power basis of the field's
defining polynomial over F_p (first monic irreducible of degree e in
lexicographic order). Multiplication uses exp/log tables of a primitive
element, so every element operation is a table lookup.
"""
import random
from math import gcd
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Tuple

import numpy as np

from ..errors import NotInvertibleError, NotPrimePowerError
from .rings import Field, prime_power

MAX_TABLE_ORDER = 1 << 16
ADD_TABLE_ORDER = 1024


def _digits(n: int, p: int, e: int) -> List[int]:
    out = []
    for _ in range(e):
        out.append(n % p)
        n //= p
    return out


def _undigits(ds: Iterable[int], p: int) -> int:
    n, scale = 0, 1
    for d in ds:
        n += (d % p) * scale
        scale *= p
    return n


def _poly_mod_p(a: List[int], m: List[int], p: int) -> List[int]:
    """Remainder of a modulo the monic polynomial m over F_p (lists, constant first)."""
    a = a[:]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return [x % p for x in a[:dm]] + [0] * max(0, dm - len(a))


def _has_factor_of_degree_at_most(f: List[int], p: int, bound: int) -> bool:
    """Trial division by every monic polynomial of degree 1..bound over F_p."""
    for d in range(1, bound + 1):
        for code in range(p ** d):
            g = _digits(code, p, d) + [1]
            if not any(_poly_mod_p(f, g, p)):
                return True
    return False


@lru_cache(maxsize=None)
def prime_field_modulus(p: int, e: int) -> Tuple[int, ...]:
    """First monic irreducible of degree e over F_p in lexicographic order."""
    if e == 1:
        return (0, 1)
    for code in range(p ** e):
        f = _digits(code, p, e) + [1]
        if f[0] == 0:
            continue
        if not _has_factor_of_degree_at_most(f, p, e // 2):
            return tuple(f)
    raise NotPrimePowerError(f"no irreducible of degree {e} over F_{p}")


class SmallField(Field):
    """
    The finite field F_q with integer-coded elements.

    Args:
        q: field order, a prime power not exceeding MAX_TABLE_ORDER
    """

    def __init__(self, q: int):
        p, e = prime_power(q)
        if q > MAX_TABLE_ORDER:
            raise NotPrimePowerError(f"F_{q} is too large for table arithmetic")
        self.q = q
        self.p = p
        self.e = e
        self.characteristic = p
        self.modulus = prime_field_modulus(p, e)
        self._prime = e == 1
        self._build_tables()

    # --- construction -------------------------------------------------
    def _slow_mul(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        da, db = _digits(a, p, e), _digits(b, p, e)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return _undigits(_poly_mod_p(prod, list(self.modulus), p), p)

    def _build_tables(self) -> None:
        q = self.q
        if self._prime:
            gen = next(g for g in range(1, q) if self._order_mod_p(g) == q - 1) if q > 2 else 1
            mul = lambda a, b: (a * b) % q  # noqa: E731
        else:
            mul = self._slow_mul
            gen = None
        exp = [0] * (q - 1)
        log = [0] * q
        candidates = [gen] if gen is not None else range(2, q)
        for g in candidates:
            x = 1
            seen = 0
            for k in range(q - 1):
                exp[k] = x
                log[x] = k
                x = mul(x, g)
                seen += 1
                if x == 1 and k < q - 2:
                    break
            if seen == q - 1 and x == 1:
                gen = g
                break
        self.generator = gen if q > 2 else 1
        self._exp = exp
        self._log = log
        self._neg = [_undigits([-d for d in _digits(a, self.p, self.e)], self.p) for a in range(q)]
        if not self._prime and self.p != 2 and q <= ADD_TABLE_ORDER:
            self._add_table = [[self._digit_add(a, b) for b in range(q)] for a in range(q)]
        else:
            self._add_table = None

    def _order_mod_p(self, g: int) -> int:
        x, k = g % self.q, 1
        while x != 1:
            x = (x * g) % self.q
            k += 1
        return k

    def _digit_add(self, a: int, b: int) -> int:
        p = self.p
        return _undigits([x + y for x, y in zip(_digits(a, p, self.e), _digits(b, p, self.e))], p)

    # --- ring protocol --------------------------------------------------
    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def order(self) -> int:
        return self.q

    def add(self, a: int, b: int) -> int:
        if self._prime:
            return (a + b) % self.q
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        if self._prime:
            return (a - b) % self.q
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if self._prime:
            return (a * b) % self.q
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise NotInvertibleError(f"0 has no inverse in F_{self.q}")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise NotInvertibleError(f"0 has no inverse in F_{self.q}")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def frob_power(self, a: int, power: int) -> int:
        return self.pow(a, power)

    def from_int(self, n: int) -> int:
        return n % self.p

    def log(self, a: int) -> int:
        """Discrete log base the table generator."""
        if a == 0:
            raise NotInvertibleError("log of 0")
        return self._log[a]

    def exp(self, k: int) -> int:
        return self._exp[k % (self.q - 1)]

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise NotInvertibleError("order of 0")
        k = self._log[a]
        return (self.q - 1) // gcd(self.q - 1, k)

    # --- finite field extras --------------------------------------------
    def index(self, a: int) -> int:
        return a

    def element(self, code: int) -> int:
        return code

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    def random_element(self, rng: random.Random) -> int:
        return rng.randrange(self.q)

    def prime_coords(self, a: int) -> List[int]:
        return _digits(a, self.p, self.e)

    def from_prime_coords(self, v: Iterable[int]) -> int:
        return _undigits(v, self.p)

    @property
    def prime_dim(self) -> int:
        return self.e

    def is_square(self, a: int) -> bool:
        if a == 0 or self.p == 2:
            return True
        return self._log[a] % 2 == 0

    def sqrt(self, a: int) -> int:
        """A square root of a square; in characteristic 2 the unique one."""
        if a == 0:
            return 0
        if self.p == 2:
            return self.pth_root(a)
        k = self._log[a]
        if k % 2:
            raise NotInvertibleError(f"{a} is not a square in F_{self.q}")
        return self._exp[k // 2]

    def add_table(self) -> np.ndarray:
        """q x q numpy addition table (cached)."""
        cached = getattr(self, "_np_add", None)
        if cached is None:
            r = np.arange(self.q)
            cached = np.array([[self.add(int(a), int(b)) for b in r] for a in r], dtype=np.int32)
            self._np_add = cached
        return cached

    def mul_table(self) -> np.ndarray:
        cached = getattr(self, "_np_mul", None)
        if cached is None:
            r = np.arange(self.q)
            cached = np.array([[self.mul(int(a), int(b)) for b in r] for a in r], dtype=np.int32)
            self._np_mul = cached
        return cached

    def neg_table(self) -> np.ndarray:
        return np.array(self._neg, dtype=np.int32)

    def format(self, a: int) -> str:
        return str(a)

    def __eq__(self, other) -> bool:
        return isinstance(other, SmallField) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("SmallField", self.q))

    def __repr__(self) -> str:
        return f"SmallField(F_{self.q})"


@lru_cache(maxsize=None)
def GF(q: int) -> SmallField:
    """Cached SmallField constructor; fields are immutable so sharing is safe."""
    return SmallField(q)


def subfield_codes(F: SmallField, order: int) -> List[int]:
    """Codes of the unique subfield of F with the given order."""
    return [a for a in F.elements() if F.pow(a, order) == a]


def embed_small(src: SmallField, dst: SmallField) -> Dict[int, int]:
    """
    Explicit embedding src -> dst between independently built small fields.

    The generator image is the least code in dst that is a root of the
    defining polynomial of src over the prime field.

    Returns:
        dict mapping every src code to its dst code
    """
    if src.p != dst.p or dst.e % src.e:
        raise NotPrimePowerError(f"F_{src.q} does not embed in F_{dst.q}")
    if src.e == 1:
        return {a: a for a in src.elements()}
    m = src.modulus
    root = None
    for z in dst.elements():
        acc = 0
        for c in reversed(m):
            acc = dst.add(dst.mul(acc, z), dst.from_int(c))
        if acc == 0:
            root = z
            break
    table = {}
    for a in src.elements():
        acc = 0
        for c in reversed(src.prime_coords(a)):
            acc = dst.add(dst.mul(acc, root), dst.from_int(c))
        table[a] = acc
    return table
