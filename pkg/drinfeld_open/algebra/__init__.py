from .fields import GF, SmallField
from .linalg import generated_subring, generates, nullspace, rank, solve
from .matrices import Mat, charpoly_mat, companion, inverse
from .newton import newton_polygon, root_valuations
from .polys import Poly, PolyRing, factor_unipoly, is_irreducible, roots, splitting_degree
from .quotients import Embedding, ExtensionField, QuotientRing, build_extension, find_embedding
from .ratfunc import (
    INFINITY,
    Frac,
    PrimeOfA,
    RationalFunctionField,
    enumerate_primes,
    is_square,
    pi_adic_expansion,
    poly_ring,
    primes_of_degree,
    valuation,
)
from .rings import Elem, Field, ProductRing, Ring, is_prime_power, prime_power
from .trunc import TruncRing

__all__ = [
    "GF",
    "INFINITY",
    "Elem",
    "Embedding",
    "ExtensionField",
    "Field",
    "Frac",
    "Mat",
    "Poly",
    "PolyRing",
    "PrimeOfA",
    "ProductRing",
    "QuotientRing",
    "RationalFunctionField",
    "Ring",
    "SmallField",
    "TruncRing",
    "build_extension",
    "charpoly_mat",
    "companion",
    "enumerate_primes",
    "factor_unipoly",
    "find_embedding",
    "generated_subring",
    "generates",
    "inverse",
    "is_irreducible",
    "is_prime_power",
    "is_square",
    "newton_polygon",
    "nullspace",
    "pi_adic_expansion",
    "poly_ring",
    "prime_power",
    "primes_of_degree",
    "rank",
    "roots",
    "root_valuations",
    "solve",
    "splitting_degree",
    "valuation",
]
