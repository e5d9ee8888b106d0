"""Symmetric multiqubit (qudit) states via Majorana stars.

Convert between Dicke-basis amplitudes and star constellations,
compute the permanent-based perma-concurrence, closed forms for small
dimensions, and Fubini-Study metrics, all cross-checked against a
brute-force tensor-space oracle.
"""

from .core import (
    AllZeroError,
    DegenerateRotationError,
    DimensionMismatchError,
    GramMatrix,
    RootFindingError,
    SizeLimitError,
    Star,
    StarAtInfinityError,
    StarSet,
    StarsTooCloseError,
    SymmetricState,
    UnsupportedDimensionError,
    chordal_distance,
    elementary_symmetric,
    fidelity,
    normalize,
    overlap,
)
from .entanglement import (
    EntanglementReport,
    bloch_vector,
    closed_form_p,
    concurrence_d3,
    gram,
    perma_concurrence,
    permanent,
    permanent_naive,
)
from .geometry import (
    MetricTensor,
    auto_chart,
    kahler_potential,
    metric_separable,
    metric_single_qubit,
    metric_symmetric,
    rotate_chart,
)
from .majorana import (
    bargmann_eval,
    is_separable,
    product_state,
    state_from_stars,
    stars_from_state,
)

__version__ = "0.1.0"

__all__ = [
    "AllZeroError",
    "DegenerateRotationError",
    "DimensionMismatchError",
    "EntanglementReport",
    "GramMatrix",
    "MetricTensor",
    "RootFindingError",
    "SizeLimitError",
    "Star",
    "StarAtInfinityError",
    "StarSet",
    "StarsTooCloseError",
    "SymmetricState",
    "UnsupportedDimensionError",
    "auto_chart",
    "bargmann_eval",
    "bloch_vector",
    "chordal_distance",
    "closed_form_p",
    "concurrence_d3",
    "elementary_symmetric",
    "fidelity",
    "gram",
    "is_separable",
    "kahler_potential",
    "metric_separable",
    "metric_single_qubit",
    "metric_symmetric",
    "normalize",
    "overlap",
    "perma_concurrence",
    "permanent",
    "permanent_naive",
    "product_state",
    "rotate_chart",
    "state_from_stars",
    "stars_from_state",
]
