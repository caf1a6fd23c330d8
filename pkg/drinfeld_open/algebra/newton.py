"""
Newton polygons of polynomials over F_q(T) at a finite prime or at infinity.
"""
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from ..errors import ZeroPolynomialError
from .polys import PolyRing
from .ratfunc import Frac, valuation

Segment = Tuple[Fraction, int]


def lower_hull_slopes(points: Sequence[Tuple[int, int]]) -> List[Segment]:
    """Slopes and horizontal lengths of the lower convex hull of the points, left to right."""
    pts = sorted(points)
    hull: List[Tuple[int, int]] = []
    for x, y in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point when it lies on or above the chord
            if (y2 - y1) * (x - x1) >= (y - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append((x, y))
    return [(Fraction(y2 - y1, x2 - x1), x2 - x1) for (x1, y1), (x2, y2) in zip(hull, hull[1:])]


def newton_polygon(A: PolyRing, f: Sequence[Union[tuple, Frac]], place) -> List[Segment]:
    """
    Newton polygon of f = sum f_i X^i with coefficients in A or F = Frac(A).

    Args:
        A: the polynomial ring F_q[T]
        f: coefficients, constant first
        place: a PrimeOfA or INFINITY

    Returns:
        (slope, length) pairs with nondecreasing slopes; a segment of slope s
        and length l stands for l roots of valuation -s. Lengths add up to deg f.
    """
    points = []
    for i, c in enumerate(f):
        v = valuation(A, c, place)
        if v is not None:
            points.append((i, v))
    if not points:
        raise ZeroPolynomialError("Newton polygon of the zero polynomial")
    # roots at 0 (a vanishing constant term) are not represented
    return lower_hull_slopes(points)


def root_valuations(segments: Sequence[Segment]) -> List[Fraction]:
    """Root valuations with multiplicity, ascending."""
    out: List[Fraction] = []
    for slope, length in segments:
        out.extend([-slope] * length)
    return sorted(out)
