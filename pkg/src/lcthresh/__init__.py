"""Exact-arithmetic toolkit for log canonical thresholds of hypersurface elliptic singularities."""

from .polynomial import ParseError, Polynomial, parse
from .threshold import (
    ThresholdReport,
    Verdict,
    VerdictKind,
    exceptionality_verdict,
    lct_candidate,
    shokurov_form,
    standard_form,
    weight_search,
)
from .weights import Weight, well_form

__all__ = [
    "ParseError",
    "Polynomial",
    "ThresholdReport",
    "Verdict",
    "VerdictKind",
    "Weight",
    "exceptionality_verdict",
    "lct_candidate",
    "parse",
    "shokurov_form",
    "standard_form",
    "weight_search",
    "well_form",
]

__version__ = "0.1.0"
