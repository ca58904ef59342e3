"""Exact computation in free commutative Nijenhuis algebras and their left counital Hopf structure."""

from fractions import Fraction

from .bases import BASES, BaseSpec, InvalidIndexError, get_base
from .coalgebra import CocycleBialgebra
from .core import NijenhuisAlgebra
from .elements import PairElement, ShuffleElement, TripleElement, Word
from .formats import LetterBaseError, ParseError, parse_element, render_element, render_pair, render_triple
from .hopf import (
    AntipodeRecursionError,
    EndoHandle,
    GradedDecomposition,
    InadmissibleBaseError,
    NijenhuisHopfAlgebra,
    binomial_antipode,
    binomial_antipode_u,
    binomial_coproduct,
    binomial_coproduct_u,
    binomial_counit,
)
from .rota_baxter import identity_sum, nij_from_stuffle, stuffle_u

__version__ = "0.1.0"

Rational = Fraction


def algebra(base: str | BaseSpec = "onesided") -> NijenhuisHopfAlgebra:
    """The free commutative Nijenhuis algebra over ``base`` with all structure attached."""
    return NijenhuisHopfAlgebra(base)


__all__ = [
    "BASES",
    "AntipodeRecursionError",
    "BaseSpec",
    "CocycleBialgebra",
    "EndoHandle",
    "GradedDecomposition",
    "InadmissibleBaseError",
    "InvalidIndexError",
    "LetterBaseError",
    "NijenhuisAlgebra",
    "NijenhuisHopfAlgebra",
    "PairElement",
    "ParseError",
    "Rational",
    "ShuffleElement",
    "TripleElement",
    "Word",
    "algebra",
    "binomial_antipode",
    "binomial_antipode_u",
    "binomial_coproduct",
    "binomial_coproduct_u",
    "binomial_counit",
    "get_base",
    "identity_sum",
    "nij_from_stuffle",
    "parse_element",
    "render_element",
    "render_pair",
    "render_triple",
    "stuffle_u",
]
