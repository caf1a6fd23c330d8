"""
Certification pipeline: sweep a family, build trace samples, and label each prime.

The report certifies the checkable hypotheses of the surjectivity criteria
(residual generation, depth-2 generation, a nonvanishing witness for the
eigenvalue relation); it never computes a Galois image.
"""
import logging
import warnings
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from ..algebra.ratfunc import PrimeOfA, enumerate_primes
from ..drinfeld.frobenius import DEFAULT_METHOD
from ..drinfeld.module import DrinfeldModule, characteristic
from ..logs import RunLog
from ..matgroups.orders import REGIME_MIN_FIELD
from ..metrics.tracker import SweepTracker
from .criteria import (
    TRAD_F2,
    TraceSample,
    check_p_independence,
    depth2_generation,
    even_degree_samples,
    f_nonvanishing_scan,
    pairwise_trace_surjectivity,
    residual_trace_surjectivity,
    trad_field_detect,
    trad_of,
)
from .sweep import SweepResult, collect_frobenius

logger = logging.getLogger(__name__)

CERTIFIED, EVIDENCE, EXCLUDED = "CERTIFIED", "EVIDENCE", "EXCLUDED"
ROUTE_FULL, ROUTE_SQUARES = "trace_criterion_1", "trace_criterion_2"


@dataclass
class CertifyOptions:
    """
    Args:
        mode: depth-2 criterion, "full" or "squares"
        exponent: c in f(Frob_x^c)
        exclusions: prime labels excluded by the user
        method: charpoly method of the sweep
        cap: torsion field degree cap
        seed: recorded in the report header
        progress: tqdm bar over the sweep
    """
    mode: str = "full"
    exponent: int = 1
    exclusions: Sequence[str] = ()
    method: str = DEFAULT_METHOD
    cap: Optional[int] = None
    seed: int = 0
    progress: bool = False


@dataclass
class PrimeEntry:
    prime: PrimeOfA
    status: str = EVIDENCE
    residual: bool = False
    depth2: bool = False
    f_witness: Optional[str] = None
    f_value: Optional[str] = None
    route: Optional[str] = None
    reason: str = ""

    def to_dict(self) -> Dict:
        return {
            "pi": self.prime.format(),
            "deg": self.prime.deg,
            "status": self.status,
            "residual": self.residual,
            "depth2": self.depth2,
            "f_witness": self.f_witness,
        }


@dataclass
class PairEntry:
    p1: PrimeOfA
    p2: PrimeOfA
    pairwise: bool

    def to_dict(self) -> Dict:
        return {"p1": self.p1.format(), "p2": self.p2.format(), "pairwise": self.pairwise}


@dataclass
class CertificateReport:
    """
    Args:
        family: family name or phi_T
        sweep: place sweep summary
        trad_field: "F", "F2" or "undetermined"
        primes: one entry per prime of degree <= prime_deg
        pairs: pairwise entries over non-excluded primes
        meta: seed, bounds, routes, anomalies; kept out of the schema keys
    """
    family: str
    sweep: Dict
    trad_field: str
    primes: List[PrimeEntry] = field(default_factory=list)
    pairs: List[PairEntry] = field(default_factory=list)
    meta: Dict = field(default_factory=dict)

    def entry(self, label: str) -> PrimeEntry:
        for e in self.primes:
            if e.prime.format() == label:
                return e
        raise KeyError(label)

    @property
    def certified(self) -> List[str]:
        return [e.prime.format() for e in self.primes if e.status == CERTIFIED]

    def to_dict(self) -> Dict:
        return {
            "family": self.family,
            "sweep": dict(self.sweep),
            "trad_field": self.trad_field,
            "primes": [e.to_dict() for e in self.primes],
            "pairs": [p.to_dict() for p in self.pairs],
            "meta": self.meta,
        }

    def __repr__(self) -> str:
        counts = {s: sum(e.status == s for e in self.primes) for s in (CERTIFIED, EVIDENCE, EXCLUDED)}
        return f"CertificateReport({self.family}, {counts})"


def exclusion_reason(prime: PrimeOfA, p0: PrimeOfA, exclusions: Sequence[str]) -> str:
    """Why a prime is EXCLUDED, or "" if it is not."""
    if prime.pi == p0.pi:
        return "characteristic prime"
    if prime.norm < REGIME_MIN_FIELD:
        return f"|k_p| = {prime.norm} <= {REGIME_MIN_FIELD - 1}"
    if prime.format() in exclusions:
        return "user exclusion"
    return ""


def _squares_applicable(phi: DrinfeldModule, trad_field: str) -> bool:
    return phi.q % 2 == 0 and phi.rank == 2 and trad_field == TRAD_F2


def certify(phi: DrinfeldModule, prime_deg: int, place_deg: int,
            options: Optional[CertifyOptions] = None, tracker: Optional[SweepTracker] = None,
            log: Optional[RunLog] = None) -> CertificateReport:
    """
    Run the sweep and every criterion, then label the primes of degree <= prime_deg
    (none when prime_deg = 0).

    A prime is EXCLUDED iff it is p_0, |k_p| <= 9, or user-excluded. It is
    CERTIFIED when residual generation, depth-2 generation and an f-witness
    all hold, and EVIDENCE otherwise. Anomalies are recorded in meta.

    Raises:
        ValueError: generic characteristic, or a negative bound
    """
    options = options or CertifyOptions()
    if prime_deg < 0:
        raise ValueError(f"prime degree bound must be >= 0, got {prime_deg}")
    p0 = characteristic(phi)
    if p0 is None:
        raise ValueError("certification needs a family of special characteristic")
    anomalies: List[str] = []
    sweep: SweepResult = collect_frobenius(phi, place_deg, options.method, options.cap,
                                           tracker, log, options.progress)
    for bad in sweep.bad:
        anomalies.append(f"bad reduction at {bad.place.label}")
    samples: List[TraceSample] = [trad_of(fd) for fd in sweep.data]
    trad_field = trad_field_detect(samples)

    mode = options.mode
    if mode == "squares" and not _squares_applicable(phi, trad_field):
        anomalies.append(f"squares mode needs q even, rank 2 and trace field F2; got q={phi.q}, "
                         f"rank {phi.rank}, {trad_field}; using full")
        mode = "full"
    depth_samples = even_degree_samples(samples) if mode == "squares" else samples
    route = ROUTE_SQUARES if mode == "squares" else ROUTE_FULL

    report = CertificateReport(phi.name or phi.format(), sweep.to_dict(), trad_field)
    primes = enumerate_primes(phi.A, prime_deg)
    active: List[PrimeOfA] = []
    witnesses: Dict[str, str] = {}
    for prime in primes:
        entry = PrimeEntry(prime)
        entry.reason = exclusion_reason(prime, p0, options.exclusions)
        if prime.pi == p0.pi:
            entry.status = EXCLUDED
            report.primes.append(entry)
            continue
        entry.residual = residual_trace_surjectivity(samples, prime)
        entry.depth2 = depth2_generation(depth_samples, prime, mode)
        witness = f_nonvanishing_scan(sweep.data, options.exponent, prime)
        if witness is not None:
            entry.f_witness = witness.place
            entry.f_value = prime.A.format(witness.value) if witness.value is not None else None
            witnesses[prime.format()] = witness.place
        if entry.reason:
            entry.status = EXCLUDED
        else:
            active.append(prime)
            if entry.residual and entry.depth2 and entry.f_witness is not None:
                entry.status = CERTIFIED
                entry.route = route
        report.primes.append(entry)
        if log is not None:
            log.event("certify.prime", {**entry.to_dict(), "route": entry.route, "reason": entry.reason})

    for i, p1 in enumerate(active):
        for p2 in active[i + 1:]:
            report.pairs.append(PairEntry(p1, p2, pairwise_trace_surjectivity(samples, p1, p2)))
    for pair in report.pairs:
        if pair.pairwise and not (report.entry(pair.p1.format()).residual and report.entry(pair.p2.format()).residual):
            anomalies.append(f"pairwise surjective at ({pair.p1.format()}, {pair.p2.format()}) "
                             "without both residual criteria")

    by_place = {fd.place: fd for fd in sweep.data}
    for place in sorted(set(witnesses.values())):
        checks = check_p_independence(by_place[place], options.exponent, primes)
        for p, ok in checks.items():
            if not ok:
                anomalies.append(f"f at {place} is not p-independent at {p}")

    for a in anomalies:
        warnings.warn(a, RuntimeWarning)
    report.meta = {
        "seed": options.seed,
        "prime_degree_bound": prime_deg,
        "place_degree_bound": place_deg,
        "mode": mode,
        "exponent": options.exponent,
        "p0": p0.format(),
        "routes": {e.prime.format(): e.route for e in report.primes if e.route},
        "excluded": {e.prime.format(): e.reason for e in report.primes if e.status == EXCLUDED},
        "f_values": {e.prime.format(): e.f_value for e in report.primes if e.f_value is not None},
        "anomalies": anomalies,
    }
    if log is not None:
        log.info("certify", f"{len(report.certified)} certified of {len(report.primes)} primes")
    logger.debug("certify %r", report)
    return report
