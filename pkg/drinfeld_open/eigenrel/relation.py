"""
The eigenvalue relation polynomial f on GL_n.

For eigenvalues a_1..a_n, f is the product over tuples of distinct indices of

    (a_i - a_j), (a_i a_j - a_k^2), (a_i a_j - a_k a_l), (a_i a_j a_k - a_l a_m a_o).

It is symmetric, hence a polynomial in the coefficients b_1..b_n of the
characteristic polynomial X^n + b_1 X^(n-1) + ... + b_n, and vanishes exactly
when one of the four relations holds.
"""
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import sympy

from ..algebra.fields import SmallField
from ..algebra.matrices import Mat, charpoly_mat
from ..algebra.polys import Poly, PolyRing, roots, splitting_degree
from ..algebra.quotients import ExtensionField, build_extension, find_embedding
from ..algebra.rings import Elem, Field, Ring
from ..errors import InvariantViolation, NotInvertibleError, RingMismatchError

FLAGS = ("a", "b", "c", "d")


@dataclass
class EigenRelReport:
    """
    Value of f on one characteristic polynomial.

    Args:
        n: matrix size
        value: f in the base field
        flags: for each raised condition, the index tuple realizing it
        roots: eigenvalues with multiplicity, in the splitting field
    """
    n: int
    value: Elem
    flags: Dict[str, Tuple[int, ...]] = field(default_factory=dict)
    roots: List[Elem] = field(default_factory=list)

    @property
    def is_zero(self) -> bool:
        return bool(self.flags)

    def to_dict(self, F: Optional[Ring] = None) -> Dict:
        return {
            "n": self.n,
            "value": F.format(self.value) if F is not None else str(self.value),
            "flags": {k: list(v) for k, v in self.flags.items()},
        }


def _splitting_field(F: Field, cp: Poly) -> Tuple[ExtensionField, Callable[[Elem], Elem]]:
    """A flat extension containing the roots of cp, with the embedding of F."""
    d = splitting_degree(PolyRing(F), cp)
    if isinstance(F, SmallField):
        L = build_extension(F.order, d)
        return L, L.from_base
    if isinstance(F, ExtensionField) and isinstance(F.base, SmallField):
        L = build_extension(F.base.order, F.n * d)
        return L, find_embedding(F, L)
    raise RingMismatchError(f"f_value needs a finite field, got {F!r}")


def _to_base(F: Field, L: ExtensionField, embed, x: Elem) -> Elem:
    if isinstance(F, SmallField):
        return L.to_base(x)
    return embed.preimage(x)


def f_value(cp: Sequence[Elem], F: Field) -> EigenRelReport:
    """
    f evaluated on a monic characteristic polynomial over a finite field.

    The roots are found in one flat splitting extension and the four product
    families are evaluated directly; the value is mapped back to F.

    Args:
        cp: coefficients over F, constant first, monic
        F: a SmallField or an ExtensionField over one (e.g. a residue field A/p)

    Raises:
        NotInvertibleError: zero constant term
        InvariantViolation: cp does not split with n roots, or f falls outside F
    """
    cp = tuple(cp)
    n = len(cp) - 1
    if n < 1:
        raise ValueError("characteristic polynomial must have degree >= 1")
    if cp[0] == F.zero:
        raise NotInvertibleError("constant term is zero: not the charpoly of an invertible matrix")
    if n == 1:
        return EigenRelReport(1, F.one, {}, [F.neg(cp[0])])
    L, embed = _splitting_field(F, cp)
    RL = PolyRing(L)
    lifted = RL.from_coeffs([embed(c) for c in cp])
    alphas = roots(RL, lifted, multiplicity=True)
    if len(alphas) != n:
        raise InvariantViolation(f"found {len(alphas)} roots of a degree-{n} polynomial")

    flags: Dict[str, Tuple[int, ...]] = {}
    value = L.one
    mul, sub = L.mul, L.sub

    def factors():
        for ij in permutations(range(n), 2):
            yield "a", ij, sub(alphas[ij[0]], alphas[ij[1]])
        for ijk in permutations(range(n), 3):
            i, j, k = ijk
            yield "b", ijk, sub(mul(alphas[i], alphas[j]), mul(alphas[k], alphas[k]))
        for t in permutations(range(n), 4):
            i, j, k, l = t
            yield "c", t, sub(mul(alphas[i], alphas[j]), mul(alphas[k], alphas[l]))
        for t in permutations(range(n), 6):
            lhs = mul(mul(alphas[t[0]], alphas[t[1]]), alphas[t[2]])
            rhs = mul(mul(alphas[t[3]], alphas[t[4]]), alphas[t[5]])
            yield "d", t, sub(lhs, rhs)

    for flag, idx, x in factors():
        if x == L.zero:
            flags.setdefault(flag, idx)
            value = L.zero
        elif value != L.zero:
            value = mul(value, x)
    return EigenRelReport(n, _to_base(F, L, embed, value), flags, alphas)


def f_of_matrix(g: Mat) -> EigenRelReport:
    """f(g) = f_value(charpoly of g)."""
    return f_value(charpoly_mat(g), g.ring)


# ---------------------------------------------------------------------------
# Symbolic form
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def symbolic_f(n: int) -> sympy.Expr:
    """
    f as an integer polynomial in b_1..b_n (sympy symbols ``b1``..``bn``).

    Raises:
        ValueError: n outside {2, 3}
    """
    if n not in (2, 3):
        raise ValueError(f"symbolic form available for n = 2, 3; got {n}")
    a = sympy.symbols(f"a1:{n + 1}")
    b = sympy.symbols(f"b1:{n + 1}")
    expr = sympy.Integer(1)
    for i, j in permutations(range(n), 2):
        expr *= a[i] - a[j]
    for i, j, k in permutations(range(n), 3):
        expr *= a[i] * a[j] - a[k] ** 2
    sym, rem, defs = sympy.polys.polyfuncs.symmetrize(sympy.expand(expr), *a, formal=True)
    if rem != 0:
        raise InvariantViolation("eigenvalue relation is not symmetric")
    subs = {s: (-1) ** (i + 1) * b[i] for i, (s, _) in enumerate(defs)}
    return sympy.expand(sym.subs(subs))


@lru_cache(maxsize=None)
def _symbolic_terms(n: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    b = sympy.symbols(f"b1:{n + 1}")
    poly = sympy.Poly(symbolic_f(n), *b)
    return tuple((tuple(int(e) for e in mon), int(c)) for mon, c in poly.terms())


def eval_symbolic_f(cp: Sequence[Elem], R: Ring) -> Elem:
    """symbolic_f evaluated at the coefficients of cp in any commutative ring R."""
    n = len(cp) - 1
    betas = [cp[n - i] for i in range(1, n + 1)]
    acc = R.zero
    for mon, c in _symbolic_terms(n):
        term = R.from_int(c)
        for beta, e in zip(betas, mon):
            if e:
                term = R.mul(term, R.pow(beta, e))
        acc = R.add(acc, term)
    return acc


# ---------------------------------------------------------------------------
# Nonvanishing of g -> f(g^N)
# ---------------------------------------------------------------------------

@dataclass
class NonvanishingResult:
    """Witness g with f(g^N) != 0, or None when the budget ran out."""
    witness: Optional[Mat]
    value: Optional[Elem]
    tries: int

    @property
    def found(self) -> bool:
        return self.witness is not None


def random_gl_sampler(F: Field, n: int) -> Callable[[random.Random], Mat]:
    def sample(rng: random.Random) -> Mat:
        rows = [[F.random_element(rng) for _ in range(n)] for _ in range(n)]
        return Mat.from_rows(F, rows)
    return sample


def nonvanishing_search(sampler: Callable[[random.Random], Mat], N: int, budget: int,
                        seed: int = 0) -> NonvanishingResult:
    """
    Sample up to ``budget`` matrices and return the first g with f(g^N) != 0.

    Singular samples count against the budget. Exhaustion is a report, not an error.
    """
    if N < 1:
        raise ValueError(f"exponent must be >= 1, got {N}")
    rng = random.Random(seed)
    for t in range(1, budget + 1):
        g = sampler(rng)
        if g.det() == g.ring.zero:
            continue
        rep = f_of_matrix(g ** N)
        if not rep.is_zero:
            return NonvanishingResult(g, rep.value, t)
    return NonvanishingResult(None, None, budget)


def diagonal_scan(F: Field, n: int, N: int) -> Optional[Mat]:
    """Exhaustive search over invertible diagonal matrices for f(g^N) != 0."""
    units = [x for x in F.elements() if x != F.zero]

    def rec(prefix: List[Elem]) -> Optional[Mat]:
        if len(prefix) == n:
            g = Mat.diag(F, prefix)
            return g if not f_of_matrix(g ** N).is_zero else None
        for x in units:
            found = rec(prefix + [x])
            if found is not None:
                return found
        return None

    return rec([])
