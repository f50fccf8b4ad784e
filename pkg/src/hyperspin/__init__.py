"""Exact non-Archimedean probability on the circle.

Hyperfinite spinner measures valued in the field of rational functions of an
infinite hypernatural ``N``, the Pruss transform and its additivity defect,
and truncated Levi-Civita arithmetic.
"""

from .circle import EMPTY, FULL, CircleEvent, arc, ev_boolean, ev_double_preimage, ev_lebesgue, ev_rotate, parse_event, point
from .errors import (
    ExactDivisionError,
    HyperspinError,
    InfiniteValueError,
    ParseError,
    PreconditionError,
)
from .exact import N, HyperRatFun, Magnitude, Poly, classify, expand_in_d, parse_hrf, standard_part
from .levicivita import LCNumber, LCOrdering, d, lc_divergence_witness, lc_from_terms, parse_lc
from .report import MeasureReport
from .spinners import (
    FiniteEvent,
    FiniteGrid,
    PrussAlpha,
    additivity_defect,
    coherence_check,
    finite_coherence_check,
    finite_compatibility_check,
    finite_P,
    finite_Q,
    hyper_P,
    hyper_Q,
    omega_limit_conditional,
    pruss_order_check,
    pruss_transform,
    regularity_check,
    symmetry_check,
    uniformity_check,
)

__version__ = "0.1.0"
