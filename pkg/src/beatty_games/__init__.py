"""Exact tools for invariant games whose P-positions come from a pair of
complementary non-homogeneous Beatty sequences."""

from .beatty import Tuple4, derive_tuple, make_tuple, validate_tuple
from .exactreal import RealNumber, parse_real, sqrt
from .game import verify_invariance
from .goodness import decide_good
from .productword import build_word

__all__ = [
    "RealNumber",
    "Tuple4",
    "build_word",
    "decide_good",
    "derive_tuple",
    "make_tuple",
    "parse_real",
    "sqrt",
    "validate_tuple",
    "verify_invariance",
]
