"""
Endomorphisms of Drinfeld modules over finite fields, as linear algebra over F_q.
"""
from typing import List

from ..algebra.linalg import nullspace, solve, transpose
from ..algebra.polys import Poly, factor_unipoly
from ..errors import InvariantViolation
from ..skew.skewpoly import SkewPoly
from .module import DrinfeldModule, characteristic, phi_powers, require_finite


def _flatten(phi: DrinfeldModule, u: SkewPoly, length: int) -> List:
    """F_q-coordinates of the first ``length`` tau-coefficients of u."""
    K = phi.K
    out = []
    for i in range(length):
        out.extend(K.coeffs(u.coeff(i)))
    return out


def endomorphisms_up_to(phi: DrinfeldModule, D: int) -> List[SkewPoly]:
    """
    F_q-basis of {u : deg_tau(u) <= D, u phi_T = phi_T u}.

    u -> u phi_T - phi_T u is F_q-linear in the D+1 coefficients of u, so the
    basis is a null space over F_q.
    """
    require_finite(phi)
    if D < 0:
        raise ValueError(f"degree bound must be >= 0, got {D}")
    K = phi.K
    S = phi.skew_ring
    T = phi.phi_T
    length = D + phi.rank + 1
    cols = []
    unknowns = []
    for k in range(D + 1):
        for l in range(K.n):
            u = S.monomial(K.R.monomial(K.base.one, l), k)
            unknowns.append((k, l))
            cols.append(_flatten(phi, u * T - T * u, length))
    M = transpose(cols)
    out = []
    for v in nullspace(M, K.base, len(unknowns)):
        coeffs = [[K.base.zero] * K.n for _ in range(D + 1)]
        for (k, l), c in zip(unknowns, v):
            coeffs[k][l] = c
        out.append(S([K.from_coeffs(c) for c in coeffs]))
    return out


def frobenius_as_element(phi: DrinfeldModule) -> Poly:
    """
    The a' in F_q[T] with phi_{a'} = tau^m, for rank 1.

    Also checks that a' is a unit times a power of pi_0 with deg(a') = m.

    Raises:
        ValueError: rank is not 1
        InvariantViolation: no solution, or a' has a prime factor other than pi_0
    """
    require_finite(phi)
    if phi.rank != 1:
        raise ValueError(f"frobenius_as_element needs rank 1, got {phi.rank}")
    A = phi.A
    K = phi.K
    m = phi.m
    S = phi.skew_ring
    length = m + 1
    powers = phi_powers(phi, m + 1)
    M = transpose([_flatten(phi, u, length) for u in powers])
    target = _flatten(phi, S.monomial(K.one, m), length)
    a = solve(M, target, K.base)
    if a is None:
        raise InvariantViolation("tau^m is not in the image of A")
    a_prime = A.from_coeffs(a)
    p0 = characteristic(phi)
    factors = factor_unipoly(A, a_prime)
    if [f for f, _ in factors] != [p0.pi] or factors[0][1] * p0.deg != m:
        raise InvariantViolation(f"(a') = ({A.format(a_prime)}) is not (pi_0)^j with j*deg(pi_0) = m")
    return a_prime
