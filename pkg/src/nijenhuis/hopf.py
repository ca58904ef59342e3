"""Grading, convolution and the right antipode.

A word ``a1 (x) ... (x) am`` has degree ``deg a1 + ... + deg am + m - 1``.
Over an admissible base (one whose coproduct puts nothing in degree
``(p, 0)`` with ``p > 0``) the coproduct respects the one-sided filtration
and the recursion

    S(w) = counit(w) 1_A - sum x' * S(x'')

over the reduced coproduct ``D(w) - 1_A (x) w`` terminates, since every right
leg ``x''`` has smaller degree than ``w``. It gives ``id * S = e`` where
``e = unit o counit``.

Separately, the trivial-base algebra is the polynomial ring in ``u_1`` and
carries the binomial Hopf structure; :func:`binomial_coproduct_u` and
:func:`binomial_antipode_u` expose it.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterator

from .coalgebra import CocycleBialgebra, Pair
from .core import UNIT_LETTER
from .elements import PairElement, ShuffleElement, Word

UNIT_WORD: Word = (UNIT_LETTER,)


class InadmissibleBaseError(ValueError):
    """The active base does not support the requested structure."""


class AntipodeRecursionError(RuntimeError):
    """The antipode recursion hit a right leg whose degree did not drop."""


class EndoHandle(enum.Enum):
    IDENTITY = "id"
    ANTIPODE = "S"
    UNIT_COUNIT = "e"
    BINOMIAL_ANTIPODE = "Sbin"


@dataclass(frozen=True)
class GradedDecomposition:
    """Homogeneous components of an element, keyed by degree."""

    components: dict[int, ShuffleElement] = field(default_factory=dict)

    def recompose(self) -> ShuffleElement:
        total = ShuffleElement()
        for part in self.components.values():
            total = total + part
        return total

    def degrees(self) -> list[int]:
        return sorted(self.components)

    def __getitem__(self, n: int) -> ShuffleElement:
        return self.components.get(n, ShuffleElement())

    def __len__(self):
        return len(self.components)


class NijenhuisHopfAlgebra(CocycleBialgebra):
    """The full structure: product, cocycle coproduct, grading, antipode."""

    def __init__(self, base="onesided"):
        super().__init__(base)
        self._antipode_cache: dict[Word, dict[Word, Fraction]] = {}

    # --- grading ------------------------------------------------------------

    def degree(self, w: Word) -> int:
        return sum(self.base.degree(a) for a in w) + len(w) - 1

    def max_degree(self, e: ShuffleElement) -> int:
        return max((self.degree(w) for w in e.keys()), default=-1)

    def is_homogeneous(self, e: ShuffleElement) -> bool:
        return len({self.degree(w) for w in e.keys()}) <= 1

    def decompose(self, e: ShuffleElement) -> GradedDecomposition:
        parts: dict[int, dict[Word, Fraction]] = {}
        for w, c in e.items():
            parts.setdefault(self.degree(w), {})[w] = c
        return GradedDecomposition({n: ShuffleElement._raw(parts[n]) for n in sorted(parts)})

    def words_of_degree(self, n: int, max_len: int | None = None, max_exp: int | None = None) -> Iterator[Word]:
        """Every basis word of degree ``n`` (the degree pieces are finite)."""
        if n < 0:
            return
        if len(self.base.letters(1)) == 1:
            # trivial base: only u_n has degree n
            if max_len is None or n + 1 <= max_len:
                yield (UNIT_LETTER,) * (n + 1)
            return
        top = n + 1 if max_len is None else min(n + 1, max_len)
        for m in range(1, top + 1):
            budget = n - m + 1
            # compositions of budget into m non-negative parts, lexicographic order
            for cuts in itertools.combinations_with_replacement(range(budget + 1), m - 1):
                bounds = (0, *cuts, budget)
                w = tuple(bounds[i + 1] - bounds[i] for i in range(m))
                if max_exp is None or max(w) <= max_exp:
                    yield w

    # --- reduced coproduct and antipode --------------------------------------

    def reduced_coproduct(self, e: ShuffleElement) -> PairElement:
        return self.coproduct(e) - self.tensor(self.unit(), e)

    def _word_reduced(self, w: Word) -> dict[Pair, Fraction]:
        out = dict(self._word_coproduct(w))
        key = (UNIT_WORD, w)
        out[key] = out.get(key, 0) - 1
        return {k: c for k, c in out.items() if c}

    def require_admissible(self, exploratory: bool = False):
        if not (self.base.admissible or exploratory):
            raise InadmissibleBaseError(
                f"base {self.base.name!r} violates the one-sided grading condition; "
                "the antipode is only defined for admissible bases "
                "(enable the exploratory override to compute it anyway, without any guarantee)"
            )

    def antipode(self, e: ShuffleElement, exploratory: bool = False, trace: list | None = None) -> ShuffleElement:
        """Right antipode, extended linearly from words.

        ``trace``, if given, receives a ``(word_degree, right_leg_degree)``
        pair for every recursive step actually evaluated (cache misses).
        """
        self.require_admissible(exploratory)
        out: dict[Word, Fraction] = {}
        for w, c in e.items():
            for v, d in self._word_antipode(w, trace).items():
                out[v] = out.get(v, 0) + c * d
        return ShuffleElement._raw(out)

    def _word_antipode(self, w: Word, trace: list | None) -> dict[Word, Fraction]:
        cached = self._antipode_cache.get(w)
        if cached is not None:
            return cached
        deg = self.degree(w)
        # S(w) = counit(w) 1_A + S_ker(w - counit(w) 1_A); S_ker(1_A) = 0 because D(1_A) = 1 (x) 1
        out: dict[Word, Fraction] = {}
        eps = self.word_counit(w)
        if eps:
            out[UNIT_WORD] = eps
        for (left, right), c in self._word_reduced(w).items():
            right_deg = self.degree(right)
            if trace is not None:
                trace.append((deg, right_deg))
            if right_deg >= deg:
                raise AntipodeRecursionError(
                    f"reduced coproduct of {w} has right leg {right} of degree {right_deg} >= {deg}"
                )
            s_right = self._word_antipode(right, trace)
            for v, d in self._mul_terms({left: c}, s_right).items():
                out[v] = out.get(v, 0) - d
        out = {v: c for v, c in out.items() if c}
        self._antipode_cache[w] = out
        return out

    # --- convolution ----------------------------------------------------------

    def apply(
        self, f: EndoHandle, e: ShuffleElement, coproduct: str = "cocycle", exploratory: bool = False
    ) -> ShuffleElement:
        """Evaluate a closed endomorphism; ``e`` uses the counit of ``coproduct``."""
        f = EndoHandle(f)
        if f is EndoHandle.IDENTITY:
            return e
        if f is EndoHandle.ANTIPODE:
            return self.antipode(e, exploratory=exploratory)
        if f is EndoHandle.UNIT_COUNIT:
            if coproduct == "binomial":
                return self.unit(binomial_counit(self, e))
            return self.unit(self.counit(e))
        return binomial_antipode(self, e)

    def convolve(
        self,
        f: EndoHandle,
        g: EndoHandle,
        e: ShuffleElement,
        coproduct: str = "cocycle",
        exploratory: bool = False,
    ) -> ShuffleElement:
        """``m (f (x) g) D`` at ``e``; ``coproduct`` is ``cocycle`` or ``binomial``."""
        if coproduct == "cocycle":
            d = self.coproduct(e)
        elif coproduct == "binomial":
            d = binomial_coproduct(self, e)
        else:
            raise ValueError(f"unknown coproduct {coproduct!r}")
        out: dict[Word, Fraction] = {}
        for (l, r), c in d.items():
            fl = self.apply(f, ShuffleElement._raw({l: c}), coproduct, exploratory)
            gr = self.apply(g, ShuffleElement._raw({r: Fraction(1)}), coproduct, exploratory)
            for v, x in self._mul_terms(fl.terms, gr.terms).items():
                out[v] = out.get(v, 0) + x
        return ShuffleElement._raw(out)

    # --- grading checks -------------------------------------------------------

    def coproduct_in_filtration(self, w: Word) -> bool:
        n = self.degree(w)
        for l, r in self._word_coproduct(w):
            p, q = self.degree(l), self.degree(r)
            if p == 0 and q == n:
                continue
            if p > 0 and q > 0 and p + q == n:
                continue
            return False
        return True

    def product_is_graded(self, a: Word, b: Word) -> bool:
        target = self.degree(a) + self.degree(b)
        return all(self.degree(w) == target for w in self._word_mul(a, b))

    def filtration_check(self, n: int, max_len: int | None = None, max_exp: int | None = None) -> bool:
        """Coproduct filtration and degree additivity for every word of degree ``n``.

        Products are checked for all word pairs whose degrees sum to ``n``.
        """
        self.require_admissible()
        if not all(self.coproduct_in_filtration(w) for w in self.words_of_degree(n, max_len, max_exp)):
            return False
        for p in range(n + 1):
            for a in self.words_of_degree(p, max_len, max_exp):
                for b in self.words_of_degree(n - p, max_len, max_exp):
                    if not self.product_is_graded(a, b):
                        return False
        return True


# --- the binomial Hopf structure on the trivial-base algebra -------------------


def _require_trivial(alg, what: str):
    if alg.base.name != "trivial":
        raise InadmissibleBaseError(f"{what} is only defined over the trivial base, not {alg.base.name!r}")


def _u_index(w: Word) -> int:
    return len(w) - 1


def _u_word(n: int) -> Word:
    return (UNIT_LETTER,) * (n + 1)


def binomial_coproduct_u(alg, n: int) -> PairElement:
    """``D(u_n) = sum_i C(n, i) u_i (x) u_(n-i)``."""
    _require_trivial(alg, "the binomial coproduct")
    return PairElement._raw({(_u_word(i), _u_word(n - i)): Fraction(comb(n, i)) for i in range(n + 1)})


def binomial_antipode_u(alg, n: int) -> ShuffleElement:
    _require_trivial(alg, "the binomial antipode")
    return ShuffleElement._raw({_u_word(n): Fraction((-1) ** n)})


def binomial_coproduct(alg, e: ShuffleElement) -> PairElement:
    out = PairElement()
    for w, c in e.items():
        out = out + c * binomial_coproduct_u(alg, _u_index(w))
    return out


def binomial_antipode(alg, e: ShuffleElement) -> ShuffleElement:
    _require_trivial(alg, "the binomial antipode")
    return ShuffleElement._raw({w: c * (-1) ** _u_index(w) for w, c in e.items()})


def binomial_counit(alg, e: ShuffleElement) -> Fraction:
    _require_trivial(alg, "the binomial counit")
    return e.coefficient(UNIT_WORD)
