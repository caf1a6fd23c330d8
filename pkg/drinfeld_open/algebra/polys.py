"""
Univariate polynomials over a finite field, and their factorization.

Polynomials are tuples of base-field elements, constant term first, with
trailing zeros stripped (the zero polynomial is ``()``). Over prime fields the
inner loops run on plain ints modulo p.

Factorization is squarefree decomposition, distinct-degree splitting and
equal-degree splitting (Cantor-Zassenhaus, trace map in characteristic 2),
driven by a seeded ``random.Random`` so results are reproducible.
"""
import random
from functools import lru_cache
from math import gcd as int_gcd
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from ..errors import NotInvertibleError, ZeroPolynomialError
from .fields import SmallField
from .rings import Elem, Field, Ring

Poly = Tuple[Elem, ...]


class PolyRing(Ring):
    """
    The polynomial ring base[var].

    Args:
        base: coefficient field
        var: variable name used when formatting
    """

    def __init__(self, base: Field, var: str = "T"):
        self.base = base
        self.var = var
        self.characteristic = base.characteristic
        self._p = base.q if isinstance(base, SmallField) and base.e == 1 else 0

    # --- construction -------------------------------------------------
    def strip(self, coeffs: Sequence[Elem]) -> Poly:
        zero = self.base.zero
        n = len(coeffs)
        while n and coeffs[n - 1] == zero:
            n -= 1
        return tuple(coeffs[:n])

    def from_coeffs(self, coeffs: Sequence[Elem]) -> Poly:
        return self.strip(tuple(coeffs))

    def const(self, c: Elem) -> Poly:
        return self.strip((c,))

    def monomial(self, c: Elem, k: int) -> Poly:
        if c == self.base.zero:
            return ()
        return tuple([self.base.zero] * k + [c])

    @property
    def gen(self) -> Poly:
        return (self.base.zero, self.base.one)

    @property
    def zero(self) -> Poly:
        return ()

    @property
    def one(self) -> Poly:
        return (self.base.one,)

    def from_int(self, n: int) -> Poly:
        return self.const(self.base.from_int(n))

    # --- basic queries ------------------------------------------------
    @staticmethod
    def deg(f: Poly) -> int:
        """Degree, with deg(0) = -1."""
        return len(f) - 1

    def lead(self, f: Poly) -> Elem:
        return f[-1] if f else self.base.zero

    def coeff(self, f: Poly, i: int) -> Elem:
        return f[i] if 0 <= i < len(f) else self.base.zero

    def is_unit(self, f: Poly) -> bool:
        return len(f) == 1

    def is_monic(self, f: Poly) -> bool:
        return bool(f) and f[-1] == self.base.one

    # --- arithmetic ---------------------------------------------------
    def add(self, f: Poly, g: Poly) -> Poly:
        if len(f) < len(g):
            f, g = g, f
        if self._p:
            p = self._p
            out = list(f)
            for i, c in enumerate(g):
                out[i] = (out[i] + c) % p
            return self.strip(out)
        add = self.base.add
        out = list(f)
        for i, c in enumerate(g):
            out[i] = add(out[i], c)
        return self.strip(out)

    def neg(self, f: Poly) -> Poly:
        if self._p:
            return tuple((-c) % self._p for c in f)
        return tuple(self.base.neg(c) for c in f)

    def sub(self, f: Poly, g: Poly) -> Poly:
        return self.add(f, self.neg(g))

    def mul(self, f: Poly, g: Poly) -> Poly:
        if not f or not g:
            return ()
        if self._p:
            p = self._p
            out = [0] * (len(f) + len(g) - 1)
            for i, a in enumerate(f):
                if a:
                    for j, b in enumerate(g):
                        out[i + j] += a * b
            return self.strip([c % p for c in out])
        F = self.base
        zero = F.zero
        out = [zero] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a == zero:
                continue
            for j, b in enumerate(g):
                if b != zero:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return self.strip(out)

    def scale(self, c: Elem, f: Poly) -> Poly:
        if self._p:
            return self.strip([(c * a) % self._p for a in f])
        return self.strip([self.base.mul(c, a) for a in f])

    def shift(self, f: Poly, k: int) -> Poly:
        """f * var^k."""
        if not f:
            return ()
        return tuple([self.base.zero] * k) + f

    def inv(self, f: Poly) -> Poly:
        if len(f) != 1:
            raise NotInvertibleError(f"{self.format(f)} is not a unit in {self!r}")
        return (self.base.inv(f[0]),)

    def divmod(self, f: Poly, g: Poly) -> Tuple[Poly, Poly]:
        """Euclidean division f = q*g + r with deg r < deg g."""
        if not g:
            raise ZeroPolynomialError("polynomial division by zero")
        dg = len(g) - 1
        if len(f) <= dg:
            return (), f
        F = self.base
        r = list(f)
        q = [F.zero] * (len(f) - dg)
        lead_inv = F.inv(g[-1])
        p = self._p
        for i in range(len(f) - 1, dg - 1, -1):
            c = r[i]
            if c == F.zero:
                continue
            c = (c * lead_inv) % p if p else F.mul(c, lead_inv)
            q[i - dg] = c
            if p:
                for j in range(dg + 1):
                    r[i - dg + j] = (r[i - dg + j] - c * g[j]) % p
            else:
                for j in range(dg + 1):
                    r[i - dg + j] = F.sub(r[i - dg + j], F.mul(c, g[j]))
        return self.strip(q), self.strip(r[:dg])

    def rem(self, f: Poly, g: Poly) -> Poly:
        return self.divmod(f, g)[1]

    def quo(self, f: Poly, g: Poly) -> Poly:
        return self.divmod(f, g)[0]

    def exact_div(self, f: Poly, g: Poly) -> Poly:
        q, r = self.divmod(f, g)
        if r:
            raise NotInvertibleError(f"{self.format(g)} does not divide {self.format(f)}")
        return q

    def divides(self, g: Poly, f: Poly) -> bool:
        return not self.rem(f, g)

    def monic(self, f: Poly) -> Poly:
        if not f:
            raise ZeroPolynomialError("the zero polynomial has no monic associate")
        if f[-1] == self.base.one:
            return f
        return self.scale(self.base.inv(f[-1]), f)

    def gcd(self, f: Poly, g: Poly) -> Poly:
        """Monic gcd; gcd(0, 0) = 0."""
        while g:
            f, g = g, self.rem(f, g)
        return self.monic(f) if f else ()

    def xgcd(self, f: Poly, g: Poly) -> Tuple[Poly, Poly, Poly]:
        """(d, s, t) with s*f + t*g = d = gcd(f, g) monic."""
        r0, r1 = f, g
        s0, s1 = self.one, ()
        t0, t1 = (), self.one
        while r1:
            q, r = self.divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, self.sub(s0, self.mul(q, s1))
            t0, t1 = t1, self.sub(t0, self.mul(q, t1))
        if not r0:
            return (), s0, t0
        c = self.base.inv(r0[-1])
        return self.scale(c, r0), self.scale(c, s0), self.scale(c, t0)

    def powmod(self, f: Poly, e: int, m: Poly) -> Poly:
        result = self.rem(self.one, m)
        f = self.rem(f, m)
        while e:
            if e & 1:
                result = self.rem(self.mul(result, f), m)
            e >>= 1
            if e:
                f = self.rem(self.mul(f, f), m)
        return result

    def derivative(self, f: Poly) -> Poly:
        F = self.base
        return self.strip([F.mul(F.from_int(i), f[i]) for i in range(1, len(f))])

    def pth_root(self, f: Poly) -> Poly:
        """g with g^p = f, for f with zero derivative."""
        p = self.characteristic
        F = self.base
        return self.strip([F.pth_root(f[i]) for i in range(0, len(f), p)])

    def eval(self, f: Poly, x: Elem) -> Elem:
        F = self.base
        acc = F.zero
        for c in reversed(f):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def eval_in(self, f: Poly, x: Elem, target: Ring, embed: Optional[Callable[[Elem], Elem]] = None) -> Elem:
        """Evaluate f at x in another ring, mapping coefficients through embed."""
        acc = target.zero
        for c in reversed(f):
            cc = embed(c) if embed is not None else target.from_base(c)
            acc = target.add(target.mul(acc, x), cc)
        return acc

    def map_coeffs(self, f: Poly, fn: Callable[[Elem], Elem]) -> Poly:
        return self.strip([fn(c) for c in f])

    # --- ordering and enumeration ---------------------------------------
    def code(self, f: Poly) -> int:
        """Integer code sum(index(c_i) * Q^i); orders polynomials of equal degree lexicographically."""
        Q = self.base.order
        n = 0
        for c in reversed(f):
            n = n * Q + self.base.index(c)
        return n

    def sort_key(self, f: Poly) -> Tuple[int, int]:
        return len(f) - 1, self.code(f)

    def from_code(self, code: int) -> Poly:
        Q = self.base.order
        out = []
        while code:
            out.append(self.base.element(code % Q))
            code //= Q
        return self.strip(out)

    def monics(self, d: int) -> Iterator[Poly]:
        """All monic polynomials of degree d in lexicographic order."""
        Q = self.base.order
        one = self.base.one
        for code in range(Q ** d):
            lower = [self.base.element((code // Q ** i) % Q) for i in range(d)]
            yield tuple(lower + [one])

    def random(self, max_deg: int, rng: random.Random) -> Poly:
        return self.strip([self.base.random_element(rng) for _ in range(max_deg + 1)])

    # --- presentation ---------------------------------------------------
    def format(self, f: Poly, var: Optional[str] = None) -> str:
        var = var or self.var
        if not f:
            return "0"
        terms = []
        F = self.base
        for k in range(len(f) - 1, -1, -1):
            c = f[k]
            if c == F.zero:
                continue
            cs = F.format(c)
            if " " in cs or "+" in cs:
                cs = f"({cs})"
            if k == 0:
                terms.append(cs)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                terms.append(mono if c == F.one else f"{cs}*{mono}")
        return " + ".join(terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyRing) and other.base == self.base

    def __hash__(self) -> int:
        return hash(("PolyRing", self.base))

    def __repr__(self) -> str:
        return f"PolyRing({self.base!r}, '{self.var}')"


# ---------------------------------------------------------------------------
# Factorization
# ---------------------------------------------------------------------------

def squarefree_decomposition(R: PolyRing, f: Poly) -> List[Tuple[Poly, int]]:
    """Pairs (g_i, i) with f = prod g_i^i, g_i squarefree and pairwise coprime; f monic."""
    p = R.characteristic
    out: List[Tuple[Poly, int]] = []
    if R.deg(f) < 1:
        return out
    fp = R.derivative(f)
    if not fp:
        return [(g, k * p) for g, k in squarefree_decomposition(R, R.pth_root(f))]
    c = R.gcd(f, fp)
    w = R.quo(f, c)
    i = 1
    while w != R.one:
        y = R.gcd(w, c)
        z = R.quo(w, y)
        if R.deg(z) > 0:
            out.append((R.monic(z), i))
        i += 1
        w = y
        c = R.quo(c, y)
    if R.deg(c) > 0:
        out.extend((g, k * p) for g, k in squarefree_decomposition(R, R.pth_root(c)))
    return out


def distinct_degree(R: PolyRing, f: Poly) -> List[Tuple[Poly, int]]:
    """Split a squarefree monic f into products of irreducibles of equal degree d."""
    Q = R.base.order
    x = R.gen
    out = []
    g = f
    h = R.rem(x, g)
    d = 0
    while R.deg(g) >= 2 * (d + 1):
        d += 1
        h = R.powmod(h, Q, g)
        gd = R.gcd(g, R.sub(h, x))
        if gd != R.one:
            out.append((gd, d))
            g = R.quo(g, gd)
            h = R.rem(h, g)
    if R.deg(g) > 0:
        out.append((g, R.deg(g)))
    return out


def equal_degree(R: PolyRing, f: Poly, d: int, rng: random.Random) -> List[Poly]:
    """Irreducible factors of f, all of which have degree d."""
    n = R.deg(f)
    if n == d:
        return [f]
    Q = R.base.order
    char = R.characteristic
    while True:
        a = R.random(n - 1, rng)
        if R.deg(a) < 1:
            continue
        if char == 2:
            e = Q.bit_length() - 1
            t = a
            b = a
            for _ in range(e * d - 1):
                t = R.rem(R.mul(t, t), f)
                b = R.add(b, t)
        else:
            b = R.sub(R.powmod(a, (Q ** d - 1) // 2, f), R.one)
        g = R.gcd(f, b)
        if 0 < R.deg(g) < n:
            return equal_degree(R, g, d, rng) + equal_degree(R, R.quo(f, g), d, rng)


def factor_unipoly(R: PolyRing, f: Poly, seed: int = 0) -> List[Tuple[Poly, int]]:
    """
    Factor f into monic irreducibles.

    Args:
        R: polynomial ring over a finite field
        f: nonzero polynomial
        seed: seed of the splitting stream

    Returns:
        (irreducible, multiplicity) pairs sorted by degree then lexicographically;
        their product is f divided by its leading coefficient.
    """
    if not f:
        raise ZeroPolynomialError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    f = R.monic(f)
    factors = {}
    for g, k in squarefree_decomposition(R, f):
        for h, d in distinct_degree(R, g):
            for irr in equal_degree(R, h, d, rng):
                factors[irr] = factors.get(irr, 0) + k
    return sorted(factors.items(), key=lambda item: R.sort_key(item[0]))


def roots(R: PolyRing, f: Poly, multiplicity: bool = False, seed: int = 0) -> List[Elem]:
    """Roots of f in the base field, sorted by element code."""
    out = []
    for g, k in factor_unipoly(R, f, seed):
        if R.deg(g) == 1:
            r = R.base.neg(g[0])
            out.extend([r] * (k if multiplicity else 1))
    return sorted(out, key=R.base.index)


def splitting_degree(R: PolyRing, f: Poly, seed: int = 0) -> int:
    """Degree over the base field of the splitting field of f."""
    d = 1
    for g, _ in factor_unipoly(R, f, seed):
        k = R.deg(g)
        d = d * k // int_gcd(d, k)
    return d


def is_irreducible(R: PolyRing, f: Poly) -> bool:
    """Ben-Or test: no factor of degree <= deg(f)/2."""
    n = R.deg(f)
    if n < 1:
        return False
    if n == 1:
        return True
    f = R.monic(f)
    if f[0] == R.base.zero:
        return False
    Q = R.base.order
    x = R.gen
    h = R.rem(x, f)
    for _ in range(n // 2):
        h = R.powmod(h, Q, f)
        if R.gcd(f, R.sub(h, x)) != R.one:
            return False
    return True


@lru_cache(maxsize=None)
def first_irreducible(base: Field, k: int) -> Poly:
    """The lexicographically first monic irreducible of degree k over base."""
    R = PolyRing(base)
    if k == 1:
        return R.gen
    for f in R.monics(k):
        if f[0] != base.zero and is_irreducible(R, f):
            return f
    raise ZeroPolynomialError(f"no irreducible of degree {k} over {base!r}")
