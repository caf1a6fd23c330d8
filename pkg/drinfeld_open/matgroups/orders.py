"""
Orders of SL_n and SU_n over finite fields and of SL_n over truncated rings.
"""
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterable, List, Optional

from ..algebra.fields import GF
from ..algebra.matrices import Mat
from ..algebra.rings import is_prime_power

# |k| from which the large-field statements are asserted
REGIME_MIN_FIELD = 10


def group_order(n: int, q: int, twisted: bool = False) -> int:
    """
    q^(n(n-1)/2) * prod_{i=2..n} (q^i - e^i) with e = 1 (SL_n) or -1 (SU_n).
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    eps = -1 if twisted else 1
    order = q ** (n * (n - 1) // 2)
    for i in range(2, n + 1):
        order *= q ** i - eps ** i
    return order


def sl_order(n: int, q: int, m: int = 1) -> int:
    """|SL_n(k[u]/(u^m))| for |k| = q."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return group_order(n, q) * q ** ((n * n - 1) * (m - 1))


def exhaustive_sl_count(n: int, q: int) -> int:
    """Count n x n matrices over F_q with determinant 1 by brute force."""
    F = GF(q)
    count = 0
    for entries in product(range(q), repeat=n * n):
        M = Mat.from_rows(F, [entries[i * n:(i + 1) * n] for i in range(n)])
        if M.det() == F.one:
            count += 1
    return count


@dataclass
class FieldBoundVerdict:
    n: int
    checked: int = 0
    failures: List[Dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict:
        return {"n": self.n, "checked": self.checked, "ok": self.ok, "failures": self.failures}


def field_bound_check(n: int, q_range: Optional[Iterable[int]] = None) -> FieldBoundVerdict:
    """
    For q' >= 2q in the range, every order over F_q' exceeds every order over F_q.

    Pairs with q' < 2q are not part of the inequality and are skipped.
    """
    qs = sorted(q for q in (q_range if q_range is not None else range(2, 17)) if is_prime_power(q))
    verdict = FieldBoundVerdict(n)
    for q in qs:
        for q2 in qs:
            if q2 < 2 * q:
                continue
            for t1 in (False, True):
                for t2 in (False, True):
                    verdict.checked += 1
                    small, big = group_order(n, q, t1), group_order(n, q2, t2)
                    if big <= small:
                        verdict.failures.append({"q": q, "q_prime": q2, "twisted": [t1, t2],
                                                 "orders": [small, big]})
    return verdict
