"""Euler-Chow series of projective varieties via monoid rings."""

from .monoid import (GradedMonoid, MonoidMismatchError, MonoidMorphism,
                     compose, product)
from .schubert import (FlagType, SchubertSymbol, all_symbols, basis,
                       fixed_point_count, grassmannian, inclusion_i,
                       inclusion_j, symbols_of_dimension, trace_phi)
from .series import (FormalSeries, IntPolynomial, RationalSeries,
                     TruncationError, convolve, delta, exterior, one,
                     pullback, pushforward, zero)
from .catalog import (EulerChowResult, UnsupportedRequestError,
                      VarietyDescriptor, VerificationError, euler_chow,
                      parse_descriptor)

__version__ = "0.1.0"

__all__ = [
    "GradedMonoid", "MonoidMismatchError", "MonoidMorphism", "compose",
    "product", "FlagType", "SchubertSymbol", "all_symbols", "basis",
    "fixed_point_count", "grassmannian", "inclusion_i", "inclusion_j",
    "symbols_of_dimension", "trace_phi", "FormalSeries", "IntPolynomial",
    "RationalSeries", "TruncationError", "convolve", "delta", "exterior",
    "one", "pullback", "pushforward", "zero", "EulerChowResult",
    "UnsupportedRequestError", "VarietyDescriptor", "VerificationError",
    "euler_chow", "parse_descriptor",
]
