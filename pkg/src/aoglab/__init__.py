"""Constructions and certificates for alphabet overlap graphs G(k, d, s)."""

from aoglab.errors import ConstructionFailed, InvalidInputError, SizeGuardError
from aoglab.words import AOParams, Word, parse_word, render_word

__all__ = [
    "AOParams",
    "ConstructionFailed",
    "InvalidInputError",
    "SizeGuardError",
    "Word",
    "parse_word",
    "render_word",
]

__version__ = "0.1.0"
