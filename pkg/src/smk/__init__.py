"""Exact computations for ranked symplectic matroids."""
from .errors import (CoLoopInput, DecompositionFailure, DegenerateMinor, EmptyFamily, ExchangeViolation,
                     MultipleMinima, NoAdmissibleBasis, NotAdmissible, NotFound, ParityViolation,
                     ParseError, SmkError, ValidationError)
from .groundset import GroundSet
from .matroid import Lattice, Matroid
from .sympcore import RankedSympMatroid, minimal_enveloping, uniform_symp

__version__ = "0.1.0"

__all__ = [
    "CoLoopInput", "DecompositionFailure", "DegenerateMinor", "EmptyFamily", "ExchangeViolation",
    "GroundSet", "Lattice", "Matroid", "MultipleMinima", "NoAdmissibleBasis", "NotAdmissible",
    "NotFound", "ParityViolation", "ParseError", "RankedSympMatroid", "SmkError", "ValidationError",
    "minimal_enveloping", "uniform_symp",
]
