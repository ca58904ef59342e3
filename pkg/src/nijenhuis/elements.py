"""Sparse formal linear combinations with exact rational coefficients.

Three concrete element types share one implementation:

* :class:`ShuffleElement` -- keys are tensor words, i.e. nonempty tuples of
  base exponents ``(a1, ..., am)`` standing for ``x^a1 (x) ... (x) x^am``.
* :class:`PairElement` -- keys are ``(word, word)``; an element of the
  tensor square.
* :class:`TripleElement` -- keys are ``(word, word, word)``.

Values are immutable. Zero coefficients are never stored and terms are kept
in canonical order, so ``==`` is plain term-map equality.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping

Word = tuple[int, ...]

__all__ = [
    "Word",
    "word_key",
    "ShuffleElement",
    "PairElement",
    "TripleElement",
]


def word_key(word: Word) -> tuple[int, Word]:
    """Canonical ordering of words: by length, then lexicographically."""
    return (len(word), word)


def _check_word(word) -> Word:
    if not isinstance(word, tuple) or not word:
        raise ValueError(f"a tensor word must be a nonempty tuple, got {word!r}")
    for letter in word:
        if not isinstance(letter, int) or isinstance(letter, bool) or letter < 0:
            raise ValueError(f"invalid letter {letter!r} in word {word!r}")
    return word


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class _Combination:
    __slots__ = ("_terms", "_hash")

    _arity = 0

    def __init__(self, terms: Mapping | Iterable | None = None):
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in items:
                key = self._check_key(key)
                acc[key] = acc.get(key, 0) + _as_fraction(coeff)
        clean = {k: c for k, c in acc.items() if c}
        self._terms = {k: clean[k] for k in sorted(clean, key=self._sort_key)}
        self._hash = None

    # subclass hooks
    @staticmethod
    def _check_key(key):
        raise NotImplementedError

    @staticmethod
    def _sort_key(key):
        raise NotImplementedError

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def monomial(cls, key, coeff=1):
        return cls({key: coeff})

    @classmethod
    def _raw(cls, terms: dict):
        """Build from an already-checked dict that may contain zeros."""
        obj = cls.__new__(cls)
        clean = {k: c for k, c in terms.items() if c}
        obj._terms = {k: clean[k] for k in sorted(clean, key=cls._sort_key)}
        obj._hash = None
        return obj

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> Iterator:
        return iter(self._terms.items())

    def keys(self) -> Iterator:
        return iter(self._terms)

    def coefficient(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, tuple(self._terms.items())))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return self._raw(acc)

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) - c
        return self._raw(acc)

    def __neg__(self):
        return self._raw({k: -c for k, c in self._terms.items()})

    def __mul__(self, scalar):
        try:
            s = _as_fraction(scalar)
        except TypeError:
            return NotImplemented
        return self._raw({k: s * c for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self):
        inner = ", ".join(f"{k!r}: {c}" for k, c in self._terms.items())
        return f"{type(self).__name__}({{{inner}}})"


class ShuffleElement(_Combination):
    """An element of the free commutative Nijenhuis algebra as a sum of words."""

    __slots__ = ()
    _arity = 1

    @staticmethod
    def _check_key(key):
        return _check_word(key)

    @staticmethod
    def _sort_key(key):
        return word_key(key)

    def max_length(self) -> int:
        return max((len(w) for w in self._terms), default=0)


class PairElement(_Combination):
    """An element of the tensor square, keyed by ``(left_word, right_word)``."""

    __slots__ = ()
    _arity = 2

    @staticmethod
    def _check_key(key):
        if not isinstance(key, tuple) or len(key) != 2:
            raise ValueError(f"pair key must be a 2-tuple of words, got {key!r}")
        return (_check_word(key[0]), _check_word(key[1]))

    @staticmethod
    def _sort_key(key):
        return (word_key(key[0]), word_key(key[1]))


class TripleElement(_Combination):
    """An element of the tensor cube, keyed by three words."""

    __slots__ = ()
    _arity = 3

    @staticmethod
    def _check_key(key):
        if not isinstance(key, tuple) or len(key) != 3:
            raise ValueError(f"triple key must be a 3-tuple of words, got {key!r}")
        return tuple(_check_word(w) for w in key)

    @staticmethod
    def _sort_key(key):
        return tuple(word_key(w) for w in key)
