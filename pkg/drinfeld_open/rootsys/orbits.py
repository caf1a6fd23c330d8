"""
Weyl orbits, the spanning / no-additive-relation conditions, and an
exhaustive check of the type-A classification over a box of sample weights.
"""
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Set, Tuple

from ..errors import ClosureIncompleteError
from .systems import CATALOG, RootSystem, Vec, add, dot, root_system

DEFAULT_ORBIT_CAP = 10_000


@dataclass(frozen=True)
class WeightOrbit:
    """
    A W-orbit S in E.

    Args:
        system: the ambient root system
        base: the canonical form of the starting weight
        elements: S in lexicographic order
    """
    system: RootSystem
    base: Vec
    elements: Tuple[Vec, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, v: Vec) -> bool:
        return self.system.canonical(v) in set(self.elements)


class Conditions(NamedTuple):
    a: bool
    b: bool
    c: bool


def weyl_orbit(sys: RootSystem, lam: Sequence, cap: int = DEFAULT_ORBIT_CAP) -> WeightOrbit:
    """
    Closure of {lam} under the simple reflections.

    Raises:
        ClosureIncompleteError: more than ``cap`` elements
    """
    start = sys.canonical(tuple(Fraction(x) for x in lam))
    if len(start) != sys.dim:
        raise ValueError(f"weight has {len(start)} coordinates, {sys.label} needs {sys.dim}")
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for alpha in sys.simple:
                w = sys.reflection(v, alpha)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        if len(seen) > cap:
            raise ClosureIncompleteError(f"orbit of {start} in {sys.label} exceeds {cap} elements")
        frontier = nxt
    return WeightOrbit(sys, start, tuple(sorted(seen)))


def _rank(vectors: Iterable[Vec]) -> int:
    rows = [list(v) for v in vectors]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def spans(orbit: WeightOrbit) -> bool:
    return _rank(orbit.elements) == orbit.system.rank


def two_two_relation(orbit: WeightOrbit) -> Optional[Tuple[Vec, Vec, Vec, Vec]]:
    """
    Distinct l1..l4 in S with l1 + l2 = l3 + l4, or None.

    Two different unordered pairs with the same sum are automatically disjoint.
    """
    sums: Dict[Vec, Tuple[Vec, Vec]] = {}
    for u, v in combinations(orbit.elements, 2):
        s = add(u, v)
        if s in sums:
            x, y = sums[s]
            return u, v, x, y
        sums[s] = (u, v)
    return None


def three_three_relation(orbit: WeightOrbit) -> Optional[Tuple[Vec, ...]]:
    """Distinct l1..l6 in S with l1 + l2 + l3 = l4 + l5 + l6, or None."""
    groups: Dict[Vec, List[Tuple[Vec, Vec, Vec]]] = defaultdict(list)
    for t in combinations(orbit.elements, 3):
        s = add(add(t[0], t[1]), t[2])
        for other in groups[s]:
            if not set(other) & set(t):
                return t + other
        groups[s].append(t)
    return None


def check_conditions(orbit: WeightOrbit) -> Conditions:
    """(a) S spans E; (b) no 2+2 relation; (c) no 3+3 relation, over distinct elements."""
    return Conditions(
        spans(orbit),
        two_two_relation(orbit) is None,
        three_three_relation(orbit) is None,
    )


def orthogonal_pair_property(orbit: WeightOrbit) -> List[Tuple[Vec, Vec, Vec]]:
    """
    Violations of: for every l in S and orthogonal roots a1, a2, l is orthogonal to a1 or a2.

    Holds whenever (b) holds; returns the (l, a1, a2) triples where it fails.
    """
    roots = orbit.system.roots
    pairs = [(a1, a2) for a1, a2 in combinations(roots, 2) if dot(a1, a2) == 0]
    return [(lam, a1, a2) for lam in orbit.elements for a1, a2 in pairs
            if dot(lam, a1) != 0 and dot(lam, a2) != 0]


def weyl_group_order(sys: RootSystem, cap: int = 100_000) -> int:
    """|W| by closing the simple reflection matrices under products."""
    mats = sys.reflection_matrices()
    n = sys.dim
    ident = tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))

    def mul(a, b):
        return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n))
                     for i in range(n))

    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in mats:
                h = mul(s, g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        if len(seen) > cap:
            raise ClosureIncompleteError(f"Weyl group of {sys.label} exceeds {cap} elements")
        frontier = nxt
    return len(seen)


def _standard_constant(sys: RootSystem, v: Vec) -> Set[Tuple[int, Fraction]]:
    """All (i, c) with v = c e_i modulo the diagonal."""
    out = set()
    for i in range(sys.dim):
        rest = [x for j, x in enumerate(v) if j != i]
        if all(x == rest[0] for x in rest):
            c = v[i] - rest[0]
            if c != 0:
                out.add((i, c))
    return out


def is_standard_orbit(orbit: WeightOrbit) -> bool:
    """S = {c e_i : 0 <= i <= l} for one c != 0, in type A_l."""
    sys = orbit.system
    if not sys.is_simple_type_a or len(orbit) != sys.dim:
        return False
    candidates = [_standard_constant(sys, v) for v in orbit.elements]
    for c in {c for _, c in candidates[0]}:
        indices = set()
        for cand in candidates:
            hit = [i for i, cc in cand if cc == c]
            if not hit:
                break
            indices.update(hit)
        else:
            if indices == set(range(sys.dim)):
                return True
    return False


@dataclass
class SystemVerdict:
    """Per-system outcome of the classification check."""
    label: str
    vectors: int = 0
    orbits: int = 0
    ab_orbits: int = 0
    standard_orbits: int = 0
    counterexamples: List[Dict] = field(default_factory=list)
    orthogonality_violations: int = 0

    def to_dict(self) -> Dict:
        return {
            "system": self.label,
            "vectors": self.vectors,
            "orbits": self.orbits,
            "ab_orbits": self.ab_orbits,
            "standard_orbits": self.standard_orbits,
            "orthogonality_violations": self.orthogonality_violations,
            "counterexamples": self.counterexamples,
        }


@dataclass
class VerdictTable:
    radius: int
    rows: List[SystemVerdict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(not r.counterexamples and not r.orthogonality_violations for r in self.rows)

    def to_dict(self) -> Dict:
        return {"radius": self.radius, "ok": self.ok, "systems": [r.to_dict() for r in self.rows]}


def _fmt(v: Vec) -> List[str]:
    return [str(x) for x in v]


def verify_system(sys: RootSystem, radius: int = 3, cap: int = DEFAULT_ORBIT_CAP) -> SystemVerdict:
    """
    Every distinct orbit of a sample weight in [-radius, radius]^rank is checked:
    (a) and (b) force simple type A_l, and for l != 2 (or l = 2 with (c)) the
    orbit must be {c e_i}. Orbits with (b) must also satisfy the orthogonal pair property.
    """
    verdict = SystemVerdict(sys.label)
    seen: Set[Vec] = set()
    for lam in sys.sample_vectors(radius):
        verdict.vectors += 1
        if lam in seen:
            continue
        orbit = weyl_orbit(sys, lam, cap)
        seen.update(orbit.elements)
        verdict.orbits += 1
        b = two_two_relation(orbit) is None
        if b and orthogonal_pair_property(orbit):
            verdict.orthogonality_violations += 1
        if not (b and spans(orbit)):
            continue
        verdict.ab_orbits += 1
        record = {"weight": _fmt(orbit.base), "size": len(orbit)}
        if not sys.is_simple_type_a:
            verdict.counterexamples.append({**record, "reason": "(a)+(b) outside simple type A"})
            continue
        l = sys.rank
        if l == 2 and three_three_relation(orbit) is not None:
            continue
        if is_standard_orbit(orbit):
            verdict.standard_orbits += 1
        else:
            verdict.counterexamples.append({**record, "reason": "orbit is not {c e_i}"})
    return verdict


def verify_main_theorem(labels: Sequence[str] = CATALOG, radius: int = 3,
                        cap: int = DEFAULT_ORBIT_CAP) -> VerdictTable:
    """Run verify_system over a catalog of root systems; the table's ``ok`` means no counterexample."""
    table = VerdictTable(radius)
    for label in labels:
        table.rows.append(verify_system(root_system(label), radius, cap))
    return table
