"""Base left counital bialgebras, given on a monomial basis.

A basis index is a non-negative integer ``n`` standing for ``x^n``; the unit
``1_A`` is index 0. Every base here is commutative with ``x^i x^j = x^(i+j)``
and differs only in its coproduct, counit and admissibility for the antipode
layer.

======================  ==============================  ===========  ==========
name                    coproduct of ``x^n``            counit       degree
======================  ==============================  ===========  ==========
``trivial``             ``1 (x) 1`` (only ``n = 0``)    ``1``        ``0``
``onesided``            ``1 (x) x^n``                   ``[n == 0]`` ``n``
``binomial``            ``sum C(n,i) x^i (x) x^(n-i)``  ``[n == 0]`` ``n``
======================  ==============================  ===========  ==========

Adding a base means subclassing :class:`BaseSpec` and registering it in
:data:`BASES`; structure constants read from a table are not supported.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

BaseVector = dict[int, Fraction]
BaseTensor = dict[tuple[int, int], Fraction]

ONE = Fraction(1)
ZERO = Fraction(0)


class InvalidIndexError(ValueError):
    """A basis index that does not exist in the active base."""


class BaseSpec:
    """Structure maps of a base algebra ``A`` evaluated on basis indices."""

    name: str = ""
    aliases: tuple[str, ...] = ()
    #: whether the one-sided grading condition holds, so the antipode is defined
    admissible: bool = False
    #: whether ``(id (x) counit) coproduct = id`` holds as well
    right_counital: bool = False

    def validate(self, i: int) -> int:
        if not isinstance(i, int) or isinstance(i, bool) or i < 0:
            raise InvalidIndexError(f"{self.name}: basis index must be a natural number, got {i!r}")
        return i

    def mul(self, i: int, j: int) -> BaseVector:
        self.validate(i)
        self.validate(j)
        return {i + j: ONE}

    def coproduct(self, i: int) -> BaseTensor:
        raise NotImplementedError

    def counit(self, i: int) -> Fraction:
        self.validate(i)
        return ONE if i == 0 else ZERO

    def degree(self, i: int) -> int:
        return self.validate(i)

    def letters(self, max_exp: int) -> range:
        """Basis indices with exponent at most ``max_exp``."""
        return range(max_exp + 1)

    def __repr__(self):
        return f"<base {self.name}>"

    def __eq__(self, other):
        return isinstance(other, BaseSpec) and other.name == self.name

    def __hash__(self):
        return hash(self.name)


class TrivialBase(BaseSpec):
    """The ground field itself, with ``c -> c (x) 1`` and the identity counit."""

    name = "trivial"
    admissible = True
    right_counital = True

    def validate(self, i):
        super().validate(i)
        if i != 0:
            raise InvalidIndexError(f"trivial base has only the unit letter, got exponent {i}")
        return i

    def coproduct(self, i):
        self.validate(i)
        return {(0, 0): ONE}

    def degree(self, i):
        self.validate(i)
        return 0

    def letters(self, max_exp):
        return range(1)


class OneSidedPolyBase(BaseSpec):
    """``k[x]`` with ``u -> 1 (x) u``: left counital but not a bialgebra."""

    name = "onesided"
    aliases = ("onesided-poly",)
    admissible = True

    def coproduct(self, i):
        self.validate(i)
        return {(0, i): ONE}


class BinomialPolyBase(BaseSpec):
    """``k[x]`` with the divided-power style binomial coproduct.

    A genuine bialgebra, but its coproduct has ``x (x) 1`` in degree
    ``(1, 0)``, so it is not admissible for the antipode layer.
    """

    name = "binomial"
    aliases = ("binomial-poly",)
    right_counital = True

    def coproduct(self, i):
        self.validate(i)
        return {(k, i - k): Fraction(comb(i, k)) for k in range(i + 1)}


BASES: dict[str, type[BaseSpec]] = {}
for _cls in (TrivialBase, OneSidedPolyBase, BinomialPolyBase):
    for _name in (_cls.name, *_cls.aliases):
        BASES[_name] = _cls


def get_base(name: str | BaseSpec) -> BaseSpec:
    """Look up a base by name (``trivial``, ``onesided``, ``binomial``)."""
    if isinstance(name, BaseSpec):
        return name
    try:
        return BASES[name]()
    except KeyError:
        known = ", ".join(sorted({c.name for c in BASES.values()}))
        raise ValueError(f"unknown base {name!r}; expected one of: {known}") from None
