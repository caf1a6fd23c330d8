"""
Torsion points and Frobenius matrices of Drinfeld modules over finite fields.

The field generated by phi[a] is found exactly: the left module
kappa{tau}/kappa{tau}phi_a is dual to phi[a], so the degree of the torsion
field over kappa is the least j with tau^(m*j) = 1 modulo the left ideal.
All torsion is then computed in one flat extension build_extension(q, m*j).
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Optional, Tuple

from ..algebra.linalg import Subspace, solve, transpose
from ..algebra.matrices import Mat, charpoly_mat
from ..algebra.polys import Poly
from ..algebra.quotients import Embedding, ExtensionField, build_extension, find_embedding
from ..algebra.ratfunc import PrimeOfA
from ..algebra.rings import Elem
from ..errors import (
    CharacteristicPrimeError,
    ExtensionCapError,
    InvariantViolation,
)
from ..skew.skewpoly import eval_additive, kernel_basis, right_divmod
from .module import DrinfeldModule, characteristic, phi_of, require_finite

DEFAULT_CAP = 64


def torsion_cap(phi: DrinfeldModule) -> int:
    """
    Default cap on [kappa(phi[p]) : F_q]: m times q^r - 1, the largest element
    order in GL_r(F_q), so every degree-one prime fits; never below DEFAULT_CAP.
    """
    require_finite(phi)
    return max(DEFAULT_CAP, phi.m * (phi.q ** phi.rank - 1))


@lru_cache(maxsize=512)
def torsion_field_degree(phi: DrinfeldModule, a: Poly, cap: Optional[int] = None) -> int:
    """
    [kappa(phi[a]) : kappa] for phi_a separable.

    Iterates R_{k+1} = tau^m R_k mod phi_a (right remainder) from R_0 = 1
    until R_k = 1 again. cap=None uses torsion_cap(phi).

    Raises:
        CharacteristicPrimeError: phi_a has zero constant term
        ExtensionCapError: m * j would exceed cap
    """
    require_finite(phi)
    if cap is None:
        cap = torsion_cap(phi)
    fa = phi_of(phi, a)
    if fa.coeff(0) == phi.K.zero:
        raise CharacteristicPrimeError(f"phi_a is inseparable for a = {phi.A.format(a)}")
    S = phi.skew_ring
    K = phi.K
    m = phi.m
    one = S.one
    if fa.degree == 0:
        return 1
    R = one
    j = 0
    while True:
        j += 1
        if m * j > cap:
            raise ExtensionCapError(
                f"torsion field of {phi.A.format(a)} has degree > {cap} over F_{phi.q}"
            )
        # c^(q^m) = c on kappa, so tau^m * R is a shift
        R = S([K.zero] * m + list(R.coeffs))
        R = right_divmod(R, fa)[1]
        if R == one:
            return j


def kernel_of(phi: DrinfeldModule, a: Poly, cap: Optional[int] = None) -> Tuple[ExtensionField, Embedding, List[Elem]]:
    """
    phi[a] inside its field of definition.

    Returns:
        (L, embedding kappa -> L, F_q-basis of phi[a] in L)
    """
    j = torsion_field_degree(phi, a, cap)
    L = build_extension(phi.q, phi.m * j)
    emb = find_embedding(phi.K, L)
    fa = phi_of(phi, a)
    basis = kernel_basis(fa, L, emb)
    expected = fa.degree
    if len(basis) != expected:
        raise InvariantViolation(
            f"phi[{phi.A.format(a)}] has F_q-dimension {len(basis)}, expected {expected}"
        )
    return L, emb, basis


@dataclass
class TorsionBasis:
    """
    A free A/p^i-basis of phi[p^i].

    Args:
        phi: the module
        prime: p
        level: i
        ext: field containing phi[p^i]
        embed: kappa -> ext
        basis: r generators b_0..b_{r-1}
    """
    phi: DrinfeldModule
    prime: PrimeOfA
    level: int
    ext: ExtensionField
    embed: Callable[[Elem], Elem]
    basis: List[Elem]

    def act(self, a: Poly, x: Elem) -> Elem:
        """a . x = phi_a(x)."""
        return eval_additive(phi_of(self.phi, a), x, self.ext, self.embed)

    def spanning_vectors(self) -> List[Elem]:
        """
        phi_{T^l}(b_k) for k < r, l < i*deg(p), ordered k-major; an F_q-basis of phi[p^i].
        """
        phiT = self.phi.phi_T
        span = self.level * self.prime.deg
        out = []
        for b in self.basis:
            y = b
            for l in range(span):
                if l:
                    y = eval_additive(phiT, y, self.ext, self.embed)
                out.append(y)
        return out

    def coordinates(self, x: Elem) -> List[Poly]:
        """Coefficients of x in A/p^i with respect to the basis."""
        return self.coordinate_solver()(x)

    def coordinate_solver(self) -> Callable[[Elem], List[Poly]]:
        """A function x -> coordinates(x) sharing one basis matrix."""
        L = self.ext
        cols = [L.coeffs(v) for v in self.spanning_vectors()]
        M = transpose(cols)
        R = self.prime.quotient(self.level)
        span = self.level * self.prime.deg
        A = self.phi.A

        def solve_one(x: Elem) -> List[Poly]:
            c = solve(M, L.coeffs(x), L.base)
            if c is None:
                raise InvariantViolation(f"{L.format(x)} is not in phi[p^{self.level}]")
            return [R.reduce(A.from_coeffs(c[k * span:(k + 1) * span])) for k in range(len(self.basis))]

        return solve_one


def torsion_basis(phi: DrinfeldModule, prime: PrimeOfA, i: int = 1, cap: Optional[int] = None) -> TorsionBasis:
    """
    A free A/p^i-basis of phi[p^i] of size r, with the field containing it.

    Raises:
        CharacteristicPrimeError: p is the characteristic of phi
        ExtensionCapError: the torsion field exceeds cap
    """
    require_finite(phi)
    p0 = characteristic(phi)
    if p0.pi == prime.pi:
        raise CharacteristicPrimeError(f"{prime.format()} is the characteristic of the module")
    A = phi.A
    L, emb, V = kernel_of(phi, prime.power(i), cap)
    F = L.base
    n = L.n
    fpi = phi_of(phi, prime.pi)
    phiT = phi.phi_T

    # greedy basis of V / pi V over k_p (Nakayama)
    space = Subspace(F, n)
    for v in V:
        space.add(L.coeffs(eval_additive(fpi, v, L, emb)))
    basis: List[Elem] = []
    for v in V:
        if len(basis) == phi.rank:
            break
        if space.contains(L.coeffs(v)):
            continue
        basis.append(v)
        y = v
        for l in range(prime.deg):
            if l:
                y = eval_additive(phiT, y, L, emb)
            space.add(L.coeffs(y))
    if len(basis) != phi.rank or space.dim != len(V):
        raise InvariantViolation(
            f"phi[{A.format(prime.power(i))}] is not free of rank {phi.rank} over A/p^{i}"
        )
    return TorsionBasis(phi, prime, i, L, emb, basis)


def frobenius_matrix_mod(phi: DrinfeldModule, prime: PrimeOfA, i: int = 1,
                         cap: Optional[int] = None) -> Mat:
    """
    Matrix over A/p^i of x -> x^(q^m) on torsion_basis(phi, prime, i); column k is the image of b_k.
    """
    tb = torsion_basis(phi, prime, i, cap)
    L = tb.ext
    m = phi.m
    solve_one = tb.coordinate_solver()
    cols = []
    for b in tb.basis:
        y = b
        for _ in range(m):
            y = L.qth_power(y)
        cols.append(solve_one(y))
    return Mat.from_rows(prime.quotient(i), transpose(cols))


def frobenius_charpoly_mod(phi: DrinfeldModule, prime: PrimeOfA, i: int = 1,
                           cap: Optional[int] = None) -> Tuple[Poly, ...]:
    """Characteristic polynomial of Frobenius on phi[p^i], coefficients in A/p^i, constant first."""
    return charpoly_mat(frobenius_matrix_mod(phi, prime, i, cap))
