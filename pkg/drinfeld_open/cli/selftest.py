"""
Acceptance checks run by ``selftest``. Each check returns (ok, detail).
"""
import os
import random
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from ..algebra.fields import GF
from ..algebra.matrices import Mat
from ..algebra.polys import PolyRing
from ..algebra.quotients import build_extension
from ..algebra.trunc import TruncRing
from ..drinfeld.endomorphisms import frobenius_as_element
from ..drinfeld.frobenius import charpoly_frobenius, newton_check
from ..drinfeld.io import read_module
from ..drinfeld.module import DrinfeldModule
from ..eigenrel.relation import eval_symbolic_f, f_value
from ..matgroups.closure import elementary, level_one, sl_generators
from ..matgroups.filtration import verify_strong_approx
from ..matgroups.goursat import FULL, GRAPH, frobenius_twist, goursat_analyze
from ..matgroups.lie import bracket_span, invariant_subgroups
from ..matgroups.orders import exhaustive_sl_count, field_bound_check, group_order
from ..matgroups.traces import char2_trad_identity
from ..rootsys.orbits import verify_main_theorem
from ..surjcert.certify import EXCLUDED, CertifyOptions, certify
from ..surjcert.report import report_to_json

REFERENCE_FAMILY = os.path.join(os.path.dirname(os.path.dirname(__file__)), "data", "reference_family.json")

# largest torsion field degree m * (q^r - 1) in the cross-validation set
CROSSVAL_FIELD_BOUND = 64


@dataclass
class SelftestSettings:
    """
    Args:
        crossval_degree: largest base degree m in the charpoly cross-validation
        eigenrel_budget: random F_13 charpolys in the eigenvalue relation check
    """
    crossval_degree: int = 4
    eigenrel_budget: int = 500


Check = Callable[[int, SelftestSettings], Tuple[bool, str]]


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float
    slow: bool = False

    def to_dict(self) -> Dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail,
                "seconds": round(self.seconds, 2), "slow": self.slow}


def crossval_modules(seed: int = 0, max_degree: int = 4) -> List[DrinfeldModule]:
    """
    Random modules for q in {2,3,4,5}, rank 1..3 and base degree 1..max_degree,
    skipping those with m * (q^rank - 1) > CROSSVAL_FIELD_BOUND (37 modules at the default).
    """
    rng = random.Random(seed)
    out = []
    for q in (2, 3, 4, 5):
        for rank in (1, 2, 3):
            for m in range(1, max_degree + 1):
                if m * (q ** rank - 1) > CROSSVAL_FIELD_BOUND:
                    continue
                K = build_extension(q, m)
                coeffs = [K.random_element(rng) for _ in range(rank)]
                lead = K.zero
                while lead == K.zero:
                    lead = K.random_element(rng)
                out.append(DrinfeldModule(K, tuple(coeffs) + (lead,), f"q{q}r{rank}m{m}"))
    return out


def check_charpoly_crossval(seed: int, settings: SelftestSettings) -> Tuple[bool, str]:
    mods = crossval_modules(seed, settings.crossval_degree)
    for phi in mods:
        fd = charpoly_frobenius(phi, "both")
        newton_check(fd)
    return True, f"{len(mods)} modules agree, Newton checks pass"


def check_rank1_frobenius(seed: int, settings: SelftestSettings) -> Tuple[bool, str]:
    count = 0
    for q in (2, 3):
        for m in range(1, 6):
            K = build_extension(q, m)
            phi = DrinfeldModule(K, (K.zero, K.one))
            A = phi.A
            if frobenius_as_element(phi) != A.monomial(A.base.one, m):
                return False, f"q={q}, m={m}"
            count += 1
    return True, f"{count} cases a' = T^m"


def check_eigenrel(seed: int, settings: SelftestSettings) -> Tuple[bool, str]:
    F5 = GF(5)
    cases = 0
    for b0 in range(1, 5):
        for b1 in range(5):
            cp = (b0, b1, 1)
            rep = f_value(cp, F5)
            if rep.value != eval_symbolic_f(cp, F5) or rep.is_zero != (rep.value == 0):
                return False, f"F_5 charpoly {cp}"
            cases += 1
    F13 = GF(13)
    rng = random.Random(seed)
    for _ in range(settings.eigenrel_budget):
        cp = (rng.randrange(1, 13), rng.randrange(13), rng.randrange(13), 1)
        rep = f_value(cp, F13)
        if rep.value != eval_symbolic_f(cp, F13) or rep.is_zero != (rep.value == 0):
            return False, f"F_13 charpoly {cp}"
        cases += 1
    return True, f"{cases} charpolys"


def check_rootsys(seed: int, settings: SelftestSettings) -> Tuple[bool, str]:
    table = verify_main_theorem(radius=3)
    return table.ok, f"{len(table.rows)} systems, radius 3"


def strong_approx_pair(q: int):
    R = TruncRing(GF(q), 2)
    base = sl_generators(R, 2)
    k = R.k
    X = Mat.diag(k, [k.one, k.neg(k.one)])
    return R, base + [level_one(R, X)], base


def check_strong_approx(seed: int, settings: SelftestSettings) -> Tuple[bool, str]:
    details = []
    for q in (11, 13):
        R, good, bad = strong_approx_pair(q)
        v_good = verify_strong_approx(good, R, cap=6_000_000)
        v_bad = verify_strong_approx(bad, R, cap=6_000_000)
        if not (v_good.full and v_good.consistent) or v_bad.full:
            return False, f"F_{q}: {v_good.order} / {v_bad.order}"
        details.append(f"F_{q}: {v_good.order}")
    return True, ", ".join(details)


def check_brackets(seed: int, settings: SelftestSettings) -> Tuple[bool, str]:
    for p, n in ((3, 2), (2, 3), (5, 2), (3, 3)):
        if bracket_span(n, GF(p)) != n * n - 1:
            return False, f"(p, n) = ({p}, {n})"
    if bracket_span(2, GF(2)) != 1:
        return False, "(2, 2) not degenerate"
    return True, "full spans, (2,2) -> 1"


def check_invariant_subgroups(seed: int, settings: SelftestSettings) -> Tuple[bool, str]:
    for q in (11, 13):
        lattice = invariant_subgroups(GF(q), 2)
        if lattice.dims != [0, 1, 3, 4] or lattice.dichotomy_violations():
            return False, f"F_{q}: dims {lattice.dims}"
    return True, "{0, scalars, sl_2, gl_2}"


def check_char2_identity(seed: int, settings: SelftestSettings) -> Tuple[bool, str]:
    k = GF(4)
    count = 0
    for a in range(4):
        for b in range(4):
            for c in range(4):
                for d in range(4):
                    g = Mat.from_rows(k, [[a, b], [c, d]])
                    if g.det() == k.zero:
                        continue
                    if not char2_trad_identity(g):
                        return False, g.format()
                    count += 1
    return count == 180, f"{count} elements of GL_2(F_4)"


def check_orders(seed: int, settings: SelftestSettings) -> Tuple[bool, str]:
    for q in (2, 3, 4, 5):
        if group_order(2, q) != exhaustive_sl_count(2, q):
            return False, f"q = {q}"
    for n in (2, 3):
        verdict = field_bound_check(n)
        if not verdict.ok:
            return False, f"field bound n = {n}: {verdict.failures[0]}"
    return True, "SL_2 orders, field bound n <= 3"


def check_trace_pipeline(seed: int, settings: SelftestSettings) -> Tuple[bool, str]:
    phi = read_module(REFERENCE_FAMILY)
    options = CertifyOptions(seed=seed)
    report = certify(phi, 3, 4, options)
    again = certify(phi, 3, 4, options)
    if report_to_json(report) != report_to_json(again):
        return False, "report not reproducible"
    active = [e for e in report.primes if e.status != EXCLUDED]
    for e in active:
        if not e.residual or e.f_witness is None:
            return False, f"{e.prime.format()}: residual {e.residual}, witness {e.f_witness}"
    if report.meta["anomalies"]:
        return False, report.meta["anomalies"][0]
    if not report.certified or len(report.certified) != len(active):
        return False, f"certified {report.certified} of {len(active)} active primes"
    return True, f"{len(active)} primes checked, {len(report.certified)} certified"


def check_goursat(seed: int, settings: SelftestSettings) -> Tuple[bool, str]:
    k = GF(9)
    basis = [k.one, k.from_prime_coords([0, 1])]
    gens = [elementary(k, 2, i, j, c) for i, j in ((0, 1), (1, 0)) for c in basis]
    ident = Mat.identity(k, 2)
    full = goursat_analyze([(g, ident) for g in gens] + [(ident, g) for g in gens], k, k)
    diag = goursat_analyze([(g, g) for g in gens], k, k)
    twisted = goursat_analyze([(g, frobenius_twist(g, 1)) for g in gens], k, k)
    ok = (full.kind == FULL and diag.kind == GRAPH and diag.frobenius_power == 0
          and twisted.kind == GRAPH and twisted.frobenius_power == 1)
    return ok, f"{full.kind} / {diag.kind} j={diag.frobenius_power} / {twisted.kind} j={twisted.frobenius_power}"


CHECKS: List[Tuple[str, Check, bool]] = [
    ("charpoly cross-validation", check_charpoly_crossval, False),
    ("rank-1 Frobenius element", check_rank1_frobenius, False),
    ("eigenvalue relation", check_eigenrel, False),
    ("root systems", check_rootsys, False),
    ("strong approximation m=2", check_strong_approx, True),
    ("bracket degeneracy", check_brackets, False),
    ("invariant subgroups", check_invariant_subgroups, True),
    ("char-2 trace identity", check_char2_identity, False),
    ("order formulas", check_orders, False),
    ("trace-ring pipeline", check_trace_pipeline, False),
    ("Goursat detector", check_goursat, False),
]


def run_selftest(seed: int = 0, quick: bool = False,
                 settings: Optional[SelftestSettings] = None) -> List[CheckResult]:
    """Run every check (skipping slow ones when ``quick``); exceptions count as failures."""
    settings = settings or SelftestSettings()
    results = []
    for name, fn, slow in CHECKS:
        if quick and slow:
            continue
        start = time.perf_counter()
        try:
            ok, detail = fn(seed, settings)
        except Exception as exc:  # noqa: BLE001
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(ok), detail, time.perf_counter() - start, slow))
    return results
