"""
Place sweep: Frobenius polynomials of a family over F_q(s) at every closed point of bounded degree.
"""
import logging
import time
import warnings
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional

from tqdm import tqdm

from ..drinfeld.family import BadReduction, is_isotrivial, places_up_to, specialize
from ..drinfeld.frobenius import DEFAULT_METHOD, FrobeniusData, NewtonReport, charpoly_frobenius, newton_check
from ..drinfeld.module import DrinfeldModule
from ..logs import RunLog
from ..metrics.tracker import SweepTracker

logger = logging.getLogger(__name__)


@dataclass
class SweepResult:
    """
    Args:
        bound: place degree bound
        data: FrobeniusData per good place, in place order
        newton: the Newton report of each datum
        bad: bad-reduction records
    """
    bound: int
    data: List[FrobeniusData] = field(default_factory=list)
    newton: List[NewtonReport] = field(default_factory=list)
    bad: List[BadReduction] = field(default_factory=list)

    def __iter__(self) -> Iterator[FrobeniusData]:
        return iter(self.data)

    def __len__(self) -> int:
        return len(self.data)

    def to_dict(self) -> Dict:
        return {
            "place_degree_bound": self.bound,
            "places_good": len(self.data),
            "places_bad": len(self.bad),
        }


def collect_frobenius(phi: DrinfeldModule, bound: int, method: str = DEFAULT_METHOD,
                      cap: Optional[int] = None, tracker: Optional[SweepTracker] = None,
                      log: Optional[RunLog] = None, progress: bool = False) -> SweepResult:
    """
    Specialize the family at one place per Frobenius orbit of degree <= bound
    and compute f_x there.

    Bad places are skipped and counted; every datum passes newton_check.

    Raises:
        ValueError: bound < 1, or phi is not an integral family over F_q(s)
        InvariantViolation: a datum fails the Newton checks
    """
    if bound < 1:
        raise ValueError(f"place degree bound must be >= 1, got {bound}")
    if is_isotrivial(phi):
        warnings.warn(f"family {phi.name or phi.format()} is isotrivial", RuntimeWarning)
    result = SweepResult(bound)
    places = places_up_to(phi.q, bound)
    for place in tqdm(places, desc="sweep", unit="place", disable=not progress):
        start = time.perf_counter()
        reduced = specialize(phi, place)
        if isinstance(reduced, BadReduction):
            result.bad.append(reduced)
            if tracker is not None:
                tracker.record_place(place.label, place.degree, None, "bad_reduction",
                                     time.perf_counter() - start, None, False)
            if log is not None:
                log.event("sweep.bad", reduced.to_dict())
            continue
        fd = charpoly_frobenius(reduced, method, cap, place=place.label)
        report = newton_check(fd)
        result.data.append(fd)
        result.newton.append(report)
        elapsed = time.perf_counter() - start
        if tracker is not None:
            tracker.record_place(place.label, place.degree, fd.n, method, elapsed, report.n_x, True)
        if log is not None:
            log.event("sweep.place", {"place": place.label, "f": fd.format(), "n_x": report.n_x})
    logger.debug("sweep bound %d: %d good, %d bad", bound, len(result.data), len(result.bad))
    if log is not None:
        log.info("sweep", f"{len(result.data) + len(result.bad)} places, {len(result.bad)} bad")
    return result
