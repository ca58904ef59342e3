"""The free commutative Nijenhuis algebra on a base algebra ``A``.

As a vector space this is the direct sum of all tensor powers ``A^(x)m`` with
``m >= 1``. The Nijenhuis operator prepends the unit letter and the product
is given on words ``a = a1 (x) a'`` and ``b = b1 (x) b'`` by::

    a * b = a1 b1                                      (m = n = 1)
          = a1 b1 (x) b'                               (m = 1, n >= 2)
          = a1 b1 (x) a'                               (m >= 2, n = 1)
          = a1 b1 (x) (a' * P(b') + P(a') * b' - P(a' * b'))   (m, n >= 2)
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterator

from .bases import BaseSpec, BaseVector, get_base
from .elements import ShuffleElement, Word

UNIT_LETTER = 0


def _prepend(vec: BaseVector, elem_terms: dict[Word, Fraction], out: dict[Word, Fraction]):
    """Accumulate ``vec (x) elem`` into ``out``."""
    for letter, c in vec.items():
        for word, d in elem_terms.items():
            key = (letter,) + word
            out[key] = out.get(key, 0) + c * d


class NijenhuisAlgebra:
    """Free commutative Nijenhuis algebra over ``base``.

    Word products are memoized per instance; the cache only ever stores
    results of the recursion itself.
    """

    def __init__(self, base: str | BaseSpec = "onesided"):
        self.base = get_base(base)
        self._mul_cache: dict[tuple[Word, Word], dict[Word, Fraction]] = {}

    def __repr__(self):
        return f"{type(self).__name__}({self.base.name!r})"

    # --- construction -----------------------------------------------------

    def word(self, *letters: int) -> Word:
        if not letters:
            raise ValueError("a tensor word needs at least one letter")
        for a in letters:
            self.base.validate(a)
        return tuple(letters)

    def element(self, terms=None) -> ShuffleElement:
        e = ShuffleElement(terms)
        for w in e.keys():
            self.check_word(w)
        return e

    def check_word(self, word: Word) -> Word:
        for a in word:
            self.base.validate(a)
        return word

    def unit(self, c=1) -> ShuffleElement:
        """``c * 1_A``."""
        return ShuffleElement({(UNIT_LETTER,): c})

    def make_u(self, n: int) -> ShuffleElement:
        """The word of ``n + 1`` unit letters."""
        if n < 0:
            raise ValueError(f"u_n needs n >= 0, got {n}")
        return ShuffleElement({(UNIT_LETTER,) * (n + 1): 1})

    def words(self, max_len: int, max_exp: int) -> Iterator[Word]:
        """All basis words with length <= max_len and exponents <= max_exp, canonically ordered."""
        letters = self.base.letters(max_exp)
        for m in range(1, max_len + 1):
            yield from itertools.product(letters, repeat=m)

    # --- operator and product ----------------------------------------------

    def p_right(self, e: ShuffleElement) -> ShuffleElement:
        return ShuffleElement._raw({(UNIT_LETTER,) + w: c for w, c in e.items()})

    def mul(self, a: ShuffleElement, b: ShuffleElement) -> ShuffleElement:
        return ShuffleElement._raw(self._mul_terms(a.terms, b.terms))

    def _mul_terms(self, a: dict[Word, Fraction], b: dict[Word, Fraction]) -> dict[Word, Fraction]:
        out: dict[Word, Fraction] = {}
        for u, c in a.items():
            for v, d in b.items():
                for w, f in self._word_mul(u, v).items():
                    out[w] = out.get(w, 0) + c * d * f
        return out

    def _word_mul(self, a: Word, b: Word) -> dict[Word, Fraction]:
        key = (a, b)
        cached = self._mul_cache.get(key)
        if cached is not None:
            return cached
        head = self.base.mul(a[0], b[0])
        m, n = len(a), len(b)
        out: dict[Word, Fraction] = {}
        if m == 1 and n == 1:
            for letter, c in head.items():
                out[(letter,)] = c
        elif m == 1:
            _prepend(head, {b[1:]: Fraction(1)}, out)
        elif n == 1:
            _prepend(head, {a[1:]: Fraction(1)}, out)
        else:
            a_tail, b_tail = a[1:], b[1:]
            inner: dict[Word, Fraction] = {}
            for part in (
                self._word_mul(a_tail, (UNIT_LETTER,) + b_tail),
                self._word_mul((UNIT_LETTER,) + a_tail, b_tail),
            ):
                for w, c in part.items():
                    inner[w] = inner.get(w, 0) + c
            for w, c in self._word_mul(a_tail, b_tail).items():
                key2 = (UNIT_LETTER,) + w
                inner[key2] = inner.get(key2, 0) - c
            inner = {w: c for w, c in inner.items() if c}
            _prepend(head, inner, out)
        out = {w: c for w, c in out.items() if c}
        self._mul_cache[key] = out
        return out

    def power(self, e: ShuffleElement, k: int) -> ShuffleElement:
        result = self.unit()
        for _ in range(k):
            result = self.mul(result, e)
        return result
