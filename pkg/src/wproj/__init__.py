"""Exact arithmetic for weighted projective points over Q.

Weighted heights, weighted greatest common divisors, local heights of
divisors and subschemes per place, singular-locus predicates, and a
deterministic scan harness for Vojta-style GCD inequalities.
"""

__version__ = "0.1.0"

from .arith import ARCHIMEDEAN, Factorization, LogValue, Place
from .gcdops import Subscheme
from .heights import HeightValue
from .points import WPoint
from .weights import Weights
from .wpoly import WPolynomial

__all__ = [
    "ARCHIMEDEAN",
    "Factorization",
    "HeightValue",
    "LogValue",
    "Place",
    "Subscheme",
    "WPoint",
    "WPolynomial",
    "Weights",
    "__version__",
]
