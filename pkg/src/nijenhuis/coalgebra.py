"""Cocycle coproduct and left counit on the free Nijenhuis algebra.

The coproduct is fixed on a single letter by the base coproduct and extended
to longer words by the one-cocycle condition ``D(P(w)) = (id (x) P) D(w)``
together with multiplicativity::

    D(a1 (x) a') = D_A(a1) . (id (x) P) D(a')

where ``.`` is the componentwise product on the tensor square. The counit of
a word is the product of the base counits of its letters.
"""

from __future__ import annotations

from fractions import Fraction

from .core import UNIT_LETTER, NijenhuisAlgebra
from .elements import PairElement, ShuffleElement, TripleElement, Word

Pair = tuple[Word, Word]


class CocycleBialgebra(NijenhuisAlgebra):
    """Adds the left counital coalgebra structure to :class:`NijenhuisAlgebra`."""

    def __init__(self, base="onesided"):
        super().__init__(base)
        self._coproduct_cache: dict[Word, dict[Pair, Fraction]] = {}

    # --- tensor square ------------------------------------------------------

    def pair_mul(self, p: PairElement, q: PairElement) -> PairElement:
        return PairElement._raw(self._pair_mul_terms(p.terms, q.terms))

    def _pair_mul_terms(self, p: dict[Pair, Fraction], q: dict[Pair, Fraction]) -> dict[Pair, Fraction]:
        out: dict[Pair, Fraction] = {}
        for (l1, r1), c in p.items():
            for (l2, r2), d in q.items():
                left = self._word_mul(l1, l2)
                right = self._word_mul(r1, r2)
                for lw, lc in left.items():
                    for rw, rc in right.items():
                        key = (lw, rw)
                        out[key] = out.get(key, 0) + c * d * lc * rc
        return {k: c for k, c in out.items() if c}

    def tensor(self, a: ShuffleElement, b: ShuffleElement) -> PairElement:
        return PairElement._raw({(u, v): c * d for u, c in a.items() for v, d in b.items()})

    # --- coproduct ----------------------------------------------------------

    def coproduct(self, e: ShuffleElement) -> PairElement:
        out: dict[Pair, Fraction] = {}
        for w, c in e.items():
            for key, d in self._word_coproduct(w).items():
                out[key] = out.get(key, 0) + c * d
        return PairElement._raw(out)

    def _word_coproduct(self, w: Word) -> dict[Pair, Fraction]:
        cached = self._coproduct_cache.get(w)
        if cached is not None:
            return cached
        head = {((i,), (j,)): c for (i, j), c in self.base.coproduct(w[0]).items()}
        if len(w) == 1:
            out = head
        else:
            # (id (x) P) D(w'), the coproduct of 1_A (x) w'
            shifted = {(l, (UNIT_LETTER,) + r): c for (l, r), c in self._word_coproduct(w[1:]).items()}
            out = self._pair_mul_terms(head, shifted)
        self._coproduct_cache[w] = out
        return out

    def counit(self, e: ShuffleElement) -> Fraction:
        return sum((c * self.word_counit(w) for w, c in e.items()), Fraction(0))

    def word_counit(self, w: Word) -> Fraction:
        out = Fraction(1)
        for a in w:
            out *= self.base.counit(a)
            if not out:
                break
        return out

    # --- maps on tensor powers ------------------------------------------------

    def id_tensor_pr(self, p: PairElement) -> PairElement:
        """``(id (x) P)`` applied to a pair element."""
        return PairElement._raw({(l, (UNIT_LETTER,) + r): c for (l, r), c in p.items()})

    def id_id_tensor_pr(self, t: TripleElement) -> TripleElement:
        return TripleElement._raw({(a, b, (UNIT_LETTER,) + z): c for (a, b, z), c in t.items()})

    def id_tensor_coproduct(self, p: PairElement) -> TripleElement:
        out: dict = {}
        for (l, r), c in p.items():
            for (rl, rr), d in self._word_coproduct(r).items():
                key = (l, rl, rr)
                out[key] = out.get(key, 0) + c * d
        return TripleElement._raw(out)

    def coproduct_tensor_id(self, p: PairElement) -> TripleElement:
        out: dict = {}
        for (l, r), c in p.items():
            for (ll, lr), d in self._word_coproduct(l).items():
                key = (ll, lr, r)
                out[key] = out.get(key, 0) + c * d
        return TripleElement._raw(out)

    def counit_left(self, p: PairElement) -> ShuffleElement:
        """``(counit (x) id)`` with the scalar leg absorbed."""
        out: dict[Word, Fraction] = {}
        for (l, r), c in p.items():
            out[r] = out.get(r, 0) + c * self.word_counit(l)
        return ShuffleElement._raw(out)

    def counit_right(self, p: PairElement) -> ShuffleElement:
        """``(id (x) counit)`` with the scalar leg absorbed."""
        out: dict[Word, Fraction] = {}
        for (l, r), c in p.items():
            out[l] = out.get(l, 0) + c * self.word_counit(r)
        return ShuffleElement._raw(out)

    # --- axiom checks -------------------------------------------------------

    def left_counit_check(self, e: ShuffleElement) -> bool:
        return self.counit_left(self.coproduct(e)) == e

    def right_counit_check(self, e: ShuffleElement) -> tuple[bool, ShuffleElement]:
        value = self.counit_right(self.coproduct(e))
        return value == e, value

    def coassoc_check(self, e: ShuffleElement) -> bool:
        d = self.coproduct(e)
        return self.id_tensor_coproduct(d) == self.coproduct_tensor_id(d)

    def cocycle_check(self, e: ShuffleElement) -> bool:
        return self.coproduct(self.p_right(e)) == self.id_tensor_pr(self.coproduct(e))

    def coproduct_hom_check(self, a: ShuffleElement, b: ShuffleElement) -> bool:
        return self.coproduct(self.mul(a, b)) == self.pair_mul(self.coproduct(a), self.coproduct(b))

    def counit_hom_check(self, a: ShuffleElement, b: ShuffleElement) -> bool:
        return self.counit(self.mul(a, b)) == self.counit(a) * self.counit(b)
