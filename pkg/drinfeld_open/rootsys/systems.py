"""
Root systems of small rank with exact rational coordinates.

Type A_l (and G_2, which lives in the same plane as A_2) is realized on
R^(l+1) modulo the diagonal. A vector class is stored by its section with last
coordinate 0; every root of such a block sums to zero, so dot products with
roots and reflections are well defined on classes.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, List, Tuple

Vec = Tuple[Fraction, ...]


def vec(*xs) -> Vec:
    return tuple(Fraction(x) for x in xs)


def dot(u: Vec, v: Vec) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def reflect(v: Vec, alpha: Vec) -> Vec:
    """s_alpha(v) = v - 2 (v, alpha)/(alpha, alpha) alpha."""
    c = 2 * dot(v, alpha) / dot(alpha, alpha)
    if c == 0:
        return v
    return tuple(a - c * b for a, b in zip(v, alpha))


@dataclass(frozen=True)
class Block:
    """One simple factor: its label, coordinate range and whether it is a quotient by the diagonal."""
    label: str
    start: int
    length: int
    quotient: bool

    @property
    def rank(self) -> int:
        return self.length - 1 if self.quotient else self.length


@dataclass(frozen=True)
class RootSystem:
    """
    A reduced root system with Weyl generators.

    Args:
        label: type label, e.g. "A2", "B3", "A1xA2"
        dim: number of ambient coordinates
        roots: all roots, lexicographically sorted
        simple: simple roots; their reflections generate W
        blocks: the simple factors
    """
    label: str
    dim: int
    roots: Tuple[Vec, ...]
    simple: Tuple[Vec, ...]
    blocks: Tuple[Block, ...]

    @property
    def rank(self) -> int:
        return sum(b.rank for b in self.blocks)

    @property
    def is_simple_type_a(self) -> bool:
        return len(self.blocks) == 1 and self.blocks[0].label.startswith("A")

    def canonical(self, v: Vec) -> Vec:
        """Representative with last coordinate 0 in every quotient block."""
        out = list(v)
        for b in self.blocks:
            if b.quotient:
                last = out[b.start + b.length - 1]
                if last:
                    for i in range(b.start, b.start + b.length):
                        out[i] -= last
        return tuple(out)

    def reflection(self, v: Vec, alpha: Vec) -> Vec:
        return self.canonical(reflect(v, alpha))

    def reflection_matrices(self) -> List[Tuple[Tuple[Fraction, ...], ...]]:
        """Matrices of the simple reflections on the ambient coordinates (columns = images of e_j)."""
        mats = []
        for alpha in self.simple:
            cols = [reflect(tuple(Fraction(int(i == j)) for i in range(self.dim)), alpha)
                    for j in range(self.dim)]
            mats.append(tuple(tuple(cols[j][i] for j in range(self.dim)) for i in range(self.dim)))
        return mats

    def sample_vectors(self, radius: int) -> List[Vec]:
        """Canonical integer vectors with free coordinates in [-radius, radius]."""
        ranges = []
        for b in self.blocks:
            for i in range(b.length):
                fixed = b.quotient and i == b.length - 1
                ranges.append([0] if fixed else range(-radius, radius + 1))
        return [vec(*xs) for xs in product(*ranges)]

    def __repr__(self) -> str:
        return f"RootSystem({self.label}, rank={self.rank}, roots={len(self.roots)})"


# ---------------------------------------------------------------------------
# Simple types
# ---------------------------------------------------------------------------

def _unit(n: int, i: int, c: int = 1) -> Tuple[int, ...]:
    return tuple(c if j == i else 0 for j in range(n))


def _roots_a(l: int) -> Tuple[List[Tuple[int, ...]], List[Tuple[int, ...]]]:
    n = l + 1
    roots = [tuple(a - b for a, b in zip(_unit(n, i), _unit(n, j))) for i in range(n) for j in range(n) if i != j]
    simple = [tuple(a - b for a, b in zip(_unit(n, i), _unit(n, i + 1))) for i in range(l)]
    return roots, simple


def _pm_pairs(n: int) -> List[Tuple[int, ...]]:
    out = []
    for i, j in combinations(range(n), 2):
        for si, sj in product((1, -1), repeat=2):
            out.append(tuple(a + b for a, b in zip(_unit(n, i, si), _unit(n, j, sj))))
    return out


def _roots_b(l: int):
    roots = _pm_pairs(l) + [_unit(l, i, s) for i in range(l) for s in (1, -1)]
    simple = [tuple(a - b for a, b in zip(_unit(l, i), _unit(l, i + 1))) for i in range(l - 1)] + [_unit(l, l - 1)]
    return roots, simple


def _roots_c(l: int):
    roots = _pm_pairs(l) + [_unit(l, i, 2 * s) for i in range(l) for s in (1, -1)]
    simple = [tuple(a - b for a, b in zip(_unit(l, i), _unit(l, i + 1))) for i in range(l - 1)] + [_unit(l, l - 1, 2)]
    return roots, simple


def _roots_d(l: int):
    simple = [tuple(a - b for a, b in zip(_unit(l, i), _unit(l, i + 1))) for i in range(l - 1)]
    simple.append(tuple(a + b for a, b in zip(_unit(l, l - 2), _unit(l, l - 1))))
    return _pm_pairs(l), simple


def _roots_g2():
    short, _ = _roots_a(2)
    long_ = []
    for i in range(3):
        v = tuple(2 if j == i else -1 for j in range(3))
        long_ += [v, tuple(-x for x in v)]
    # simple: short e0 - e1, long -2e0 + e1 + e2
    return short + long_, [(1, -1, 0), (-2, 1, 1)]


_SIMPLE_TYPES = {
    "A": (lambda l: (_roots_a(l), l + 1, True)),
    "B": (lambda l: (_roots_b(l), l, False)),
    "C": (lambda l: (_roots_c(l), l, False)),
    "D": (lambda l: (_roots_d(l), l, False)),
    "G": (lambda l: (_roots_g2(), 3, True)),
}


@lru_cache(maxsize=None)
def root_system(label: str) -> RootSystem:
    """
    Build a root system from a label like "B3" or "A1xA2".

    Raises:
        ValueError: unknown type
    """
    all_roots: List[Vec] = []
    simple: List[Vec] = []
    blocks: List[Block] = []
    parts = label.split("x")
    dims = []
    built = []
    for part in parts:
        kind, l = part[:1], int(part[1:]) if part[1:].isdigit() else 0
        if kind not in _SIMPLE_TYPES or l < 1 or (kind == "G" and l != 2) or (kind == "D" and l < 4) \
                or (kind in "BC" and l < 2):
            raise ValueError(f"unknown root system {part!r}")
        (rts, smp), dim, quotient = _SIMPLE_TYPES[kind](l)
        built.append((part, rts, smp, dim, quotient))
        dims.append(dim)
    total = sum(dims)
    start = 0
    for part, rts, smp, dim, quotient in built:
        before, after = [0] * start, [0] * (total - start - dim)
        all_roots += [vec(*before, *r, *after) for r in rts]
        simple += [vec(*before, *s, *after) for s in smp]
        blocks.append(Block(part, start, dim, quotient))
        start += dim
    return RootSystem(label, total, tuple(sorted(all_roots)), tuple(simple), tuple(blocks))


CATALOG: Tuple[str, ...] = ("A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "A1xA1", "A1xA2")


def catalog() -> Dict[str, RootSystem]:
    return {label: root_system(label) for label in CATALOG}
