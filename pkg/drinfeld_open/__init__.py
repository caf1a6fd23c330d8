"""
Exact arithmetic for Drinfeld modules over F_q[T]: Frobenius polynomials,
matrix-group criteria and the trace-ring certification pipeline.
"""
__version__ = "0.1.0"

from .drinfeld import DrinfeldModule, FrobeniusData, charpoly_frobenius, read_module
from .errors import DrinfeldOpenError

__all__ = [
    "DrinfeldModule",
    "DrinfeldOpenError",
    "FrobeniusData",
    "__version__",
    "charpoly_frobenius",
    "read_module",
]
