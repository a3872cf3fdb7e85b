"""Orthogonal and k-orthogonal vertex colourings of Cayley graphs.

Constructions for cycles, circulants on Z_{p^2}, Paley graphs, Cartesian
products and Hamming graphs, each checked by a shared verifier, plus an
exhaustive solver for cross-checking small instances.
"""

from .colouring import (
    Colouring,
    OrthogonalSet,
    are_orthogonal,
    certify,
    is_proper,
    orthogonal_lower_bound,
    verify_orthogonal_set,
)
from .errors import BudgetExceededError, NoConstructionError, SizeMismatchError, VerificationError
from .graphs import (
    CirculantSpec,
    Graph,
    cartesian_product,
    circulant,
    complement,
    complete,
    cycle,
    hamming,
)

__version__ = "0.1.0"
