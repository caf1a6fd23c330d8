"""
Criteria on the ring of adjoint traces.

A TraceSample is tr_ad(Frob_x) for one place x, an element of F = F_q(T)
whose denominator is a power of pi_0. The criteria reduce samples modulo a
prime p != p_0 (or expand them p-adically) and ask which rings they
generate.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence

from ..algebra.linalg import generates
from ..algebra.polys import Poly, PolyRing
from ..algebra.ratfunc import Frac, PrimeOfA, RationalFunctionField, format_frac, is_square, ord_at, pi_adic_expansion
from ..algebra.rings import ProductRing
from ..algebra.trunc import TruncRing
from ..drinfeld.frobenius import FrobeniusData, charpoly_power
from ..eigenrel.relation import eval_symbolic_f, f_value
from ..errors import CharacteristicPrimeError, InvariantViolation
from ..matgroups.traces import tr_ad_from_charpoly, trace_criterion_1, trace_criterion_2

logger = logging.getLogger(__name__)

TRAD_F, TRAD_F2, TRAD_UNDETERMINED = "F", "F2", "undetermined"
DEPTH2_MODES = ("full", "squares")


@dataclass(frozen=True)
class TraceSample:
    """
    Args:
        place: place label
        deg: degree of the place
        value: tr_ad(Frob_place) in F_q(T)
        p0: characteristic prime; value has only pi_0 in its denominator
    """
    place: str
    deg: int
    value: Frac
    p0: PrimeOfA

    def format(self) -> str:
        return format_frac(self.p0.A, self.value)

    def to_dict(self) -> Dict:
        return {"place": self.place, "deg": self.deg, "trad": self.format()}


def _require_pi0_power(A: PolyRing, value: Frac, p0: PrimeOfA) -> None:
    den = value.den
    if den == A.one:
        return
    k = ord_at(A, den, p0.pi)
    if den != A.pow(p0.pi, k):
        raise InvariantViolation(
            f"tr_ad = {format_frac(A, value)} has a denominator that is not a power of {p0.format()}"
        )


def trad_of(fd: FrobeniusData) -> TraceSample:
    """
    tr_ad(Frob_x) = b_1 b_(n-1) / b_n from f_x.

    Raises:
        InvariantViolation: the denominator is not a power of pi_0
    """
    A = fd.A
    F = RationalFunctionField(A)
    value = tr_ad_from_charpoly([F.from_poly(c) for c in fd.coeffs], F)
    _require_pi0_power(A, value, fd.p0)
    return TraceSample(fd.place, fd.deg, value, fd.p0)


def _check_prime(samples: Sequence[TraceSample], prime: PrimeOfA) -> None:
    for s in samples:
        if s.p0.pi == prime.pi:
            raise CharacteristicPrimeError(f"{prime.format()} is the characteristic prime")


def residues(samples: Sequence[TraceSample], prime: PrimeOfA) -> List[Poly]:
    """Images of the samples in k_p."""
    _check_prime(samples, prime)
    return [prime.reduce(s.value) for s in samples]


def residual_trace_surjectivity(samples: Iterable[TraceSample], prime: PrimeOfA) -> bool:
    """True iff the images of the samples generate k_p as a ring."""
    samples = list(samples)
    return generates(prime.residue_field(), residues(samples, prime))


def pairwise_trace_surjectivity(samples: Iterable[TraceSample], p1: PrimeOfA, p2: PrimeOfA) -> bool:
    """
    True iff the images (x mod p1, x mod p2) generate k_p1 x k_p2.

    Fails in particular when every image lies on the graph of an isomorphism
    k_p1 -> k_p2.
    """
    if p1.pi == p2.pi:
        raise ValueError(f"pairwise criterion needs two distinct primes, got {p1.format()} twice")
    samples = list(samples)
    ring = ProductRing(p1.residue_field(), p2.residue_field())
    images = list(zip(residues(samples, p1), residues(samples, p2)))
    return generates(ring, images)


def expansions(samples: Sequence[TraceSample], prime: PrimeOfA, m: int) -> List[Poly]:
    """p-adic expansions of the samples in k_p[u]/(u^m)."""
    _check_prime(samples, prime)
    R = TruncRing(prime.residue_field(), m)
    return [R.from_digits(pi_adic_expansion(s.value, prime, m)) for s in samples]


def depth2_generation(samples: Iterable[TraceSample], prime: PrimeOfA, mode: str = "full") -> bool:
    """
    full: expansions to k_p[u]/(u^2) generate it.
    squares: expansions to k_p[u]/(u^3) generate k_p + k_p u^2 (characteristic 2).
    """
    if mode not in DEPTH2_MODES:
        raise ValueError(f"mode must be one of {DEPTH2_MODES}, got {mode!r}")
    samples = list(samples)
    m = 2 if mode == "full" else 3
    R = TruncRing(prime.residue_field(), m)
    exps = expansions(samples, prime, m)
    if mode == "full":
        return trace_criterion_1(exps, R)
    return trace_criterion_2(exps, R)


def even_degree_samples(samples: Iterable[TraceSample]) -> List[TraceSample]:
    """Samples at places of even degree, those that survive the constant-field quadratic extension."""
    return [s for s in samples if s.deg % 2 == 0]


def trad_field_detect(samples: Iterable[TraceSample]) -> str:
    """"F2" when every sample is a square in F, "F" on the first non-square, "undetermined" if empty."""
    samples = list(samples)
    if not samples:
        return TRAD_UNDETERMINED
    for s in samples:
        if not is_square(s.p0.A, s.value):
            return TRAD_F
    return TRAD_F2


# ---------------------------------------------------------------------------
# Nonvanishing of the eigenvalue relation at Frobenius powers
# ---------------------------------------------------------------------------

@dataclass
class FWitness:
    """
    Args:
        place: the place x
        value: f(Frob_x^c) in A (None for n > 3, where only residues are computed)
        residue: its image in k_p
    """
    place: str
    value: Optional[Poly]
    residue: Poly


def f_in_A(fd: FrobeniusData, c: int = 1) -> Optional[Poly]:
    """f(Frob_x^c) as an element of A for n <= 3; None otherwise."""
    n = fd.n
    if n == 1:
        return fd.A.one
    if n not in (2, 3):
        return None
    return eval_symbolic_f(charpoly_power(fd.A, fd.coeffs, c), fd.A)


def f_mod(fd: FrobeniusData, c: int, prime: PrimeOfA) -> Poly:
    """f(Frob_x^c mod p) computed from the roots in a splitting field of k_p."""
    k = prime.residue_field()
    cp = [prime.reduce(a) for a in charpoly_power(fd.A, fd.coeffs, c)]
    return f_value(cp, k).value


def check_p_independence(fd: FrobeniusData, c: int, primes: Iterable[PrimeOfA]) -> Dict[str, bool]:
    """For each prime p != p_0: the reduction of f(Frob_x^c) in A equals f of the reduced charpoly."""
    a = f_in_A(fd, c)
    out = {}
    for prime in primes:
        if prime.pi == fd.p0.pi:
            continue
        expected = f_mod(fd, c, prime)
        out[prime.format()] = a is None or prime.reduce(a) == expected
    return out


def f_nonvanishing_scan(data: Iterable[FrobeniusData], c: int, prime: PrimeOfA) -> Optional[FWitness]:
    """
    First place x with f(Frob_x^c) != 0 in k_p.

    For n <= 3 the value is computed once in A and reduced; it must agree
    with f evaluated on the reduced charpoly.

    Raises:
        InvariantViolation: the two computations disagree
    """
    if c < 1:
        raise ValueError(f"exponent must be >= 1, got {c}")
    k = prime.residue_field()
    for fd in data:
        if prime.pi == fd.p0.pi:
            raise CharacteristicPrimeError(f"{prime.format()} is the characteristic prime")
        a = f_in_A(fd, c)
        residue = f_mod(fd, c, prime) if fd.n > 1 else k.one
        if a is not None and prime.reduce(a) != residue:
            raise InvariantViolation(
                f"{fd.place}: f in A reduces to {k.format(prime.reduce(a))}, "
                f"f mod {prime.format()} is {k.format(residue)}"
            )
        if residue != k.zero:
            return FWitness(fd.place, a, residue)
    return None
