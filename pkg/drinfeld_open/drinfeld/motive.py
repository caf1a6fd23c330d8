"""
The motive M = kappa{tau} of a Drinfeld module over a finite field kappa.

M is free over kappa[T] with basis 1, tau, ..., tau^(r-1), where T acts by
right multiplication with phi_T. Left multiplication by tau is sigma-semilinear
with matrix C; tau^m is kappa[T]-linear with matrix C sigma(C) ... sigma^(m-1)(C)
and its characteristic polynomial is the Frobenius polynomial.
"""
from typing import Tuple

from ..algebra.matrices import Mat, charpoly_mat
from ..algebra.polys import Poly, PolyRing
from ..errors import InvariantViolation
from .module import DrinfeldModule, require_finite


def tau_matrix(phi: DrinfeldModule) -> Mat:
    """
    Matrix of tau on the basis 1, tau, ..., tau^(r-1), entries in kappa[T].

    tau * tau^i = tau^(i+1) for i < r-1, and
    tau^r = g_r^-1 (T - g_0) - sum_{0<i<r} g_r^-1 g_i tau^i.
    """
    require_finite(phi)
    K = phi.K
    R = PolyRing(K, "T")
    r = phi.rank
    g = phi.phiT
    inv_lead = K.inv(g[r])
    rows = [[R.zero] * r for _ in range(r)]
    for i in range(r - 1):
        rows[i + 1][i] = R.one
    rows[0][r - 1] = R.from_coeffs([K.neg(K.mul(inv_lead, g[0])), inv_lead])
    for i in range(1, r):
        rows[i][r - 1] = R.const(K.neg(K.mul(inv_lead, g[i])))
    return Mat.from_rows(R, rows)


def frobenius_on_motive(phi: DrinfeldModule) -> Mat:
    """Matrix of tau^m, the product C sigma(C) ... sigma^(m-1)(C)."""
    C = tau_matrix(phi)
    K = phi.K
    R = C.ring
    F = C
    twisted = C
    for _ in range(1, phi.m):
        twisted = twisted.map(lambda f: R.map_coeffs(f, K.qth_power))
        F = F * twisted
    return F


def motive_charpoly(phi: DrinfeldModule) -> Tuple[Poly, ...]:
    """
    Frobenius polynomial by the motive method, coefficients in F_q[T], constant first.

    Raises:
        InvariantViolation: a coefficient does not descend from kappa[T] to F_q[T]
    """
    K = phi.K
    A = phi.A
    cp = charpoly_mat(frobenius_on_motive(phi))
    out = []
    for j, c in enumerate(cp):
        if not all(K.in_base(x) for x in c):
            raise InvariantViolation(f"coefficient of X^{j} does not lie in F_q[T]")
        out.append(A.from_coeffs([K.to_base(x) for x in c]))
    return tuple(out)
