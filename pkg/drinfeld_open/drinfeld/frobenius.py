"""
Frobenius characteristic polynomials of Drinfeld modules over finite fields.

Two independent computations are provided: the motive method (one exact
characteristic polynomial over kappa[T]) and the torsion method (Frobenius
matrices on phi[p^i] for several prime powers, glued by CRT under the degree
bound deg c_{n-j} <= floor(j*m/n)). ``charpoly_frobenius(method="both")``
runs both and insists they agree.
"""
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..algebra.matrices import Mat, charpoly_mat, companion, eval_poly_at_mat
from ..algebra.newton import newton_polygon, root_valuations
from ..algebra.polys import Poly, PolyRing
from ..algebra.ratfunc import INFINITY, PrimeOfA, primes_of_degree
from ..errors import CharacteristicPrimeError, ExtensionCapError, InvariantViolation
from .module import DrinfeldModule, characteristic, require_finite
from .motive import motive_charpoly
from .torsion import frobenius_charpoly_mod, frobenius_matrix_mod, torsion_field_degree

METHODS = ("motive", "torsion", "both")
# sweeps and the command line
DEFAULT_METHOD = "motive"


@dataclass
class FrobeniusData:
    """
    f_x = det(X - Frob_x) for one place x, coefficients in A = F_q[T].

    Args:
        place: label of the place
        deg: deg(x) = [kappa_x : F_q]
        A: the ring F_q[T]
        coeffs: f_x coefficients, constant first, monic of degree n
        p0: characteristic prime of the module
        method: which computation produced f_x
        moduli: (prime, level) pairs used by the torsion method
    """
    place: str
    deg: int
    A: PolyRing
    coeffs: Tuple[Poly, ...]
    p0: PrimeOfA
    method: str = DEFAULT_METHOD
    moduli: List[Tuple[str, int]] = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    def format(self, var: str = "X") -> str:
        return format_charpoly(self.A, self.coeffs, var)

    def to_dict(self) -> Dict:
        return {
            "place": self.place,
            "deg": self.deg,
            "f": self.format(),
            "coeffs": [self.A.format(c) for c in self.coeffs],
            "p0": self.p0.format(),
            "method": self.method,
        }

    def __repr__(self) -> str:
        return f"FrobeniusData({self.place}: {self.format()})"


def format_charpoly(A: PolyRing, coeffs: Sequence[Poly], var: str = "X") -> str:
    """Render sum coeffs[i] X^i with A-coefficients, highest power first."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        cs = A.format(c)
        if " " in cs:
            cs = f"({cs})"
        if k == 0:
            terms.append(cs)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            terms.append(mono if c == A.one else f"{cs}*{mono}")
    return " + ".join(terms) if terms else "0"


def degree_bounds(n: int, m: int) -> List[int]:
    """Bound on deg_T of the coefficient of X^i, i = 0..n-1: floor((n-i)*m/n)."""
    return [((n - i) * m) // n for i in range(n)]


# ---------------------------------------------------------------------------
# Torsion method
# ---------------------------------------------------------------------------

def crt_candidates(A: PolyRing, p0: PrimeOfA, max_weight: int) -> Iterator[Tuple[PrimeOfA, int]]:
    """(prime, level) pairs by weight level*deg, then degree, then lexicographically; p0 skipped."""
    for w in range(1, max_weight + 1):
        for d in range(1, w + 1):
            if w % d:
                continue
            for prime in primes_of_degree(A, d):
                if prime.pi != p0.pi:
                    yield prime, w // d


def crt_combine(A: PolyRing, r1: Poly, M1: Poly, r2: Poly, M2: Poly) -> Tuple[Poly, Poly]:
    """The residue modulo M1*M2 restricting to r1 mod M1 and r2 mod M2; M1, M2 coprime."""
    d, s, t = A.xgcd(M1, M2)
    if d != A.one:
        raise InvariantViolation("CRT moduli are not coprime")
    M = A.mul(M1, M2)
    x = A.add(A.mul(A.mul(r1, t), M2), A.mul(A.mul(r2, s), M1))
    return A.rem(x, M), M


def crt_modulus_needed(n: int, m: int) -> int:
    """
    Degree of the CRT modulus that pins down f_x.

    The constant term is eps * p_0^(m/deg p_0) with eps in F_q^*, so only eps
    has to be read off; the other coefficients need one more than their degree bound.
    """
    return 1 + max(degree_bounds(n, m)[1:], default=0)


def crt_schedule(phi: DrinfeldModule, cap: Optional[int] = None) -> List[Tuple[PrimeOfA, int, int]]:
    """
    (prime, level, field degree) triples, cheapest torsion field first, whose
    weights reach crt_modulus_needed.

    Only candidates of weight <= the needed degree are examined, so the scan is
    finite. A prime chosen at two levels keeps the higher one.

    Raises:
        ExtensionCapError: the candidates within the cap do not reach the needed degree
    """
    require_finite(phi)
    A = phi.A
    m = phi.m
    p0 = characteristic(phi)
    need = crt_modulus_needed(phi.rank, m)
    ranked = []
    skipped = 0
    for prime, level in crt_candidates(A, p0, need):
        try:
            j = torsion_field_degree(phi, prime.power(level), cap)
        except ExtensionCapError:
            skipped += 1
            continue
        ranked.append((m * j, -level * prime.deg, prime.deg, A.code(prime.pi), prime, level))
    if skipped:
        warnings.warn(f"{skipped} CRT candidates skipped: torsion field over the cap", RuntimeWarning)
    ranked.sort(key=lambda t: t[:4])

    chosen: Dict[Poly, Tuple[PrimeOfA, int, int]] = {}
    total = 0
    for field_deg, _, _, _, prime, level in ranked:
        if total >= need:
            break
        old = chosen.get(prime.pi)
        if old is not None and old[1] >= level:
            continue
        total += (level - (old[1] if old else 0)) * prime.deg
        chosen[prime.pi] = (prime, level, field_deg)
    if total < need:
        raise ExtensionCapError(
            f"CRT modulus reaches degree {total} within the torsion cap, need {need} "
            f"({skipped} candidates over the cap)"
        )
    return sorted(chosen.values(), key=lambda t: (t[0].deg, A.code(t[0].pi)))


def torsion_charpoly(phi: DrinfeldModule, cap: Optional[int] = None) -> Tuple[Tuple[Poly, ...], List[Tuple[str, int]]]:
    """
    f_x reconstructed from Frobenius on phi[p^i] for the prime powers of crt_schedule.

    cap=None sizes the torsion field cap to the module (torsion_cap).

    Returns:
        (coefficients, [(prime, level) used])

    Raises:
        ExtensionCapError: no schedule within the cap reaches the needed modulus
        InvariantViolation: the glued coefficients break the degree bound or the
            constant term is not a unit times p_0^(m/deg p_0)
    """
    require_finite(phi)
    A = phi.A
    n = phi.rank
    m = phi.m
    p0 = characteristic(phi)
    schedule = crt_schedule(phi, cap)
    residues = [(prime, level, frobenius_charpoly_mod(phi, prime, level, cap)) for prime, level, _ in schedule]

    bounds = degree_bounds(n, m)
    coeffs: List[Poly] = []
    M: Poly = A.one
    for i in range(n):
        x: Poly = ()
        M = A.one
        for prime, level, cp in residues:
            ri = cp[i] if i < len(cp) else ()
            x, M = crt_combine(A, x, M, ri, prime.power(level))
        if i > 0 and A.deg(x) > bounds[i]:
            raise InvariantViolation(
                f"coefficient of X^{i} has degree {A.deg(x)} > bound {bounds[i]}"
            )
        coeffs.append(x)

    # c_0 = eps * p_0^(m/deg p_0); eps is c_0 / p_0^(m/deg p_0) modulo M
    norm = p0.power(m // p0.deg)
    _, s, _ = A.xgcd(A.rem(norm, M), M)
    eps = A.rem(A.mul(coeffs[0], s), M)
    if A.deg(eps) != 0:
        raise InvariantViolation(
            f"constant term {A.format(coeffs[0])} mod {A.format(M)} is not a unit times {A.format(norm)}"
        )
    coeffs[0] = A.mul(eps, norm)
    coeffs.append(A.one)
    return tuple(coeffs), [(prime.format(), level) for prime, level, _ in residues]


def charpoly_frobenius(phi: DrinfeldModule, method: str = "both", cap: Optional[int] = None,
                       place: Optional[str] = None) -> FrobeniusData:
    """
    The Frobenius polynomial f_x of phi over its finite base field.

    Args:
        phi: module over F_{q^m}
        method: "motive", "torsion" or "both" (cross-validated)
        cap: degree cap for torsion fields over F_q; None sizes it to the module
        place: label recorded in the result

    Raises:
        InvariantViolation: the two methods disagree
    """
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    require_finite(phi)
    A = phi.A
    p0 = characteristic(phi)
    moduli: List[Tuple[str, int]] = []
    if method in ("motive", "both"):
        coeffs = motive_charpoly(phi)
    if method in ("torsion", "both"):
        by_torsion, moduli = torsion_charpoly(phi, cap)
        if method == "both" and by_torsion != coeffs:
            raise InvariantViolation(
                f"motive {format_charpoly(A, coeffs)} != torsion {format_charpoly(A, by_torsion)}"
            )
        coeffs = by_torsion
    label = place if place is not None else f"{phi.m}:{phi.name or 'kappa'}"
    return FrobeniusData(label, phi.m, A, coeffs, p0, method, moduli)


# ---------------------------------------------------------------------------
# Newton polygons
# ---------------------------------------------------------------------------

@dataclass
class NewtonReport:
    """Outcome of the slope checks at p_0, at infinity and at auxiliary primes."""
    n_x: int = 0
    p0_valuations: List[Fraction] = field(default_factory=list)
    inf_valuations: List[Fraction] = field(default_factory=list)
    aux: Dict[str, bool] = field(default_factory=dict)
    degree_bounds_ok: bool = True
    problems: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def to_dict(self) -> Dict:
        return {
            "n_x": self.n_x,
            "p0": [str(v) for v in self.p0_valuations],
            "inf": [str(v) for v in self.inf_valuations],
            "aux": dict(self.aux),
            "degree_bounds_ok": self.degree_bounds_ok,
            "ok": self.ok,
        }


def newton_check(fd: FrobeniusData, aux_primes: Optional[Sequence[PrimeOfA]] = None,
                 strict: bool = True) -> NewtonReport:
    """
    Check the root valuations of f_x.

    At primes other than p_0 and infinity every root is a unit; at infinity
    every root has valuation -deg(x)/n; at p_0, n_x roots have valuation
    deg(x)/(n_x*deg(pi_0)) and the others 0.

    Args:
        fd: Frobenius data
        aux_primes: finite primes to test for slope 0 (default: three smallest primes != p_0)
        strict: raise on any violation instead of only reporting it

    Raises:
        InvariantViolation: in strict mode, when a check fails
    """
    A = fd.A
    n = fd.n
    m = fd.deg
    report = NewtonReport()
    if not fd.coeffs[0]:
        report.problems.append("f_x(0) = 0")
    else:
        vals = root_valuations(newton_polygon(A, fd.coeffs, fd.p0))
        report.p0_valuations = vals
        positive = [v for v in vals if v > 0]
        report.n_x = len(positive)
        if not 1 <= report.n_x <= n:
            report.problems.append(f"n_x = {report.n_x} outside 1..{n}")
        else:
            expected = Fraction(m, report.n_x * fd.p0.deg)
            if any(v != expected for v in positive) or any(v != 0 for v in vals if v <= 0):
                report.problems.append(f"valuations at p0 {[str(v) for v in vals]}, expected {expected}")

        inf_vals = root_valuations(newton_polygon(A, fd.coeffs, INFINITY))
        report.inf_valuations = inf_vals
        if any(v != Fraction(-m, n) for v in inf_vals):
            report.problems.append(f"valuations at infinity {[str(v) for v in inf_vals]}, expected {Fraction(-m, n)}")

        if aux_primes is None:
            aux_primes = default_aux_primes(A, fd.p0)
        for prime in aux_primes:
            ok = all(v == 0 for v in root_valuations(newton_polygon(A, fd.coeffs, prime)))
            report.aux[prime.format()] = ok
            if not ok:
                report.problems.append(f"nonzero slope at {prime.format()}")

    for i, (c, b) in enumerate(zip(fd.coeffs, degree_bounds(n, m))):
        if A.deg(c) > b:
            report.degree_bounds_ok = False
            report.problems.append(f"deg of X^{i} coefficient {A.deg(c)} > {b}")

    if strict and report.problems:
        raise InvariantViolation(f"{fd.place}: " + "; ".join(report.problems))
    return report


def default_aux_primes(A: PolyRing, p0: PrimeOfA, count: int = 3) -> List[PrimeOfA]:
    out: List[PrimeOfA] = []
    d = 1
    while len(out) < count:
        out.extend(p for p in primes_of_degree(A, d) if p.pi != p0.pi)
        d += 1
    return out[:count]


# ---------------------------------------------------------------------------
# Derived quantities
# ---------------------------------------------------------------------------

def charpoly_power(A: PolyRing, coeffs: Sequence[Poly], c: int) -> Tuple[Poly, ...]:
    """Characteristic polynomial of Frob^c from that of Frob: charpoly of companion(f)^c over A."""
    if c < 1:
        raise ValueError(f"exponent must be >= 1, got {c}")
    if c == 1:
        return tuple(coeffs)
    return charpoly_mat(companion(A, tuple(coeffs)) ** c)


def frobenius_trace(fd: FrobeniusData) -> Poly:
    """a_x = -(coefficient of X^(n-1))."""
    return fd.A.neg(fd.coeffs[fd.n - 1])


def frobenius_norm(fd: FrobeniusData) -> Poly:
    """(-1)^n f_x(0); for rank 2 this is b_x in X^2 - a_x X + b_x."""
    c0 = fd.coeffs[0]
    return c0 if fd.n % 2 == 0 else fd.A.neg(c0)


def rank2_ab(fd: FrobeniusData) -> Tuple[Poly, Poly]:
    """(a_x, b_x) with f_x = X^2 - a_x X + b_x."""
    if fd.n != 2:
        raise ValueError(f"rank2_ab needs n = 2, got {fd.n}")
    return frobenius_trace(fd), frobenius_norm(fd)


def check_at_torsion(fd: FrobeniusData, phi: DrinfeldModule, prime: PrimeOfA, level: int = 1,
                     cap: Optional[int] = None) -> bool:
    """f_x reduced mod p^level annihilates the Frobenius matrix on phi[p^level]."""
    if prime.pi == fd.p0.pi:
        raise CharacteristicPrimeError(f"{prime.format()} is the characteristic prime")
    M = frobenius_matrix_mod(phi, prime, level, cap)
    R = M.ring
    f = tuple(R.reduce(c) for c in fd.coeffs)
    return eval_poly_at_mat(f, M) == Mat.zeros(R, M.n)
