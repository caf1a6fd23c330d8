"""
Goursat analysis of subgroups H of SL_n(k1) x SL_n(k2) given by generators.
"""
import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..algebra.fields import SmallField
from ..algebra.matrices import Mat, inverse
from ..errors import ClosureIncompleteError
from .closure import DEFAULT_CLOSURE_CAP, PairArith, bfs_closure, packed_keys
from .orders import group_order

logger = logging.getLogger(__name__)

FULL, GRAPH, OTHER = "full", "graph", "other"
MAX_CONJUGATOR_SEARCH = 200_000


@dataclass
class GoursatResult:
    """
    Args:
        kind: "full", "graph" or "other"
        order: |H|
        n1_order, n2_order: |H meet SL_n(k1) x 1| and |H meet 1 x SL_n(k2)|
        frobenius_power: j with the isomorphism g -> C sigma^j(g) C^-1 up to center
        conjugator: the matrix C
    """
    kind: str
    order: int
    n1_order: int = 0
    n2_order: int = 0
    frobenius_power: Optional[int] = None
    conjugator: Optional[Mat] = None
    reason: str = ""

    def to_dict(self) -> Dict:
        return {
            "kind": self.kind,
            "order": self.order,
            "n1_order": self.n1_order,
            "n2_order": self.n2_order,
            "frobenius_power": self.frobenius_power,
            "conjugator": self.conjugator.format() if self.conjugator is not None else None,
            "reason": self.reason,
        }


def _is_scalar_rows(rows: np.ndarray, n: int) -> np.ndarray:
    M = rows.reshape(-1, n, n)
    off = np.any(M * (1 - np.eye(n, dtype=M.dtype)) != 0, axis=(1, 2))
    diag = np.einsum("bii->bi", M)
    return ~off & np.all(diag == diag[:, :1], axis=1)


def frobenius_twist(g: Mat, j: int) -> Mat:
    """Entrywise x -> x^(p^j)."""
    k = g.ring
    return g.map(lambda x: k.frob_power(x, k.p ** j))


def _central_scalars(k: SmallField, n: int) -> List[Mat]:
    return [Mat.scalar(k, n, z) for z in k.elements() if z != k.zero and k.pow(z, n) == k.one]


def recover_isomorphism(pairs: Sequence[Tuple[Mat, Mat]],
                        k: SmallField) -> Optional[Tuple[int, Mat]]:
    """
    Find (j, C) with C sigma^j(g1) C^-1 = z g2 for a central z, for every generator pair.

    Candidates C run over GL_n(k) in entry order; the search is skipped when
    k^(n^2) exceeds MAX_CONJUGATOR_SEARCH.
    """
    n = pairs[0][0].n
    if k.order ** (n * n) > MAX_CONJUGATOR_SEARCH:
        return None
    center = _central_scalars(k, n)
    for j in range(k.e):
        twisted = [(frobenius_twist(g1, j), g2) for g1, g2 in pairs]
        for entries in product(range(k.order), repeat=n * n):
            C = Mat.from_rows(k, [entries[i * n:(i + 1) * n] for i in range(n)])
            if C.det() == k.zero:
                continue
            Ci = inverse(C)
            if all(any(C * t * Ci == z * g2 for z in center) for t, g2 in twisted):
                return j, C
    return None


def goursat_analyze(gens: Sequence[Tuple[Mat, Mat]], k1: SmallField, k2: SmallField,
                    cap: int = DEFAULT_CLOSURE_CAP) -> GoursatResult:
    """
    Classify H = <gens> inside SL_n(k1) x SL_n(k2).

    full: H is the whole product. graph: both kernels N_i are central, so H
    is the graph of an isomorphism modulo center; the isomorphism is recovered
    on generators when k1 = k2. other: a projection is not onto, or the
    kernels are intermediate.

    Raises:
        ClosureIncompleteError: the closure hit ``cap``
    """
    if not gens:
        raise ValueError("goursat_analyze needs generators")
    n = gens[0][0].n
    for g1, g2 in gens:
        if g1.det() != k1.one or g2.det() != k2.one:
            raise ValueError("generators must lie in SL_n(k1) x SL_n(k2)")
    arith = PairArith(k1, k2, n)
    H = bfs_closure(arith, [arith.to_array(g) for g in gens], cap)
    if not H.complete:
        raise ClosureIncompleteError(f"closure of the pair group exceeds {cap}")
    left, right = arith.split(H.elements)
    sl1, sl2 = group_order(n, k1.q), group_order(n, k2.q)
    img1 = np.unique(packed_keys(left, k1.q)).shape[0]
    img2 = np.unique(packed_keys(right, k2.q)).shape[0]
    order = H.order
    if img1 != sl1 or img2 != sl2:
        return GoursatResult(OTHER, order, reason=f"projections have orders {img1}, {img2}")

    id_half = arith.a1.identity()
    n1_mask = np.all(right == arith.a2.identity()[None, :], axis=1)
    n2_mask = np.all(left == id_half[None, :], axis=1)
    n1, n2 = int(n1_mask.sum()), int(n2_mask.sum())
    if n1 == sl1 and n2 == sl2:
        return GoursatResult(FULL, order, n1, n2)
    central1 = bool(np.all(_is_scalar_rows(left[n1_mask], n)))
    central2 = bool(np.all(_is_scalar_rows(right[n2_mask], n)))
    if not (central1 and central2):
        return GoursatResult(OTHER, order, n1, n2, reason="kernels are neither full nor central")
    result = GoursatResult(GRAPH, order, n1, n2)
    if k1 == k2:
        found = recover_isomorphism(list(gens), k1)
        if found is not None:
            result.frobenius_power, result.conjugator = found
        else:
            result.reason = "isomorphism not recovered as a Frobenius twist and conjugation"
    else:
        result.reason = "fields differ"
    logger.debug("goursat %s", result.to_dict())
    return result
