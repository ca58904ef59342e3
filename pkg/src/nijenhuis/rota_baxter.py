"""Weight-lambda stuffle product on the trivial-base algebra and its Nijenhuis shadow.

On the span of the ``u_n`` the free Rota-Baxter product of weight ``lam`` is

    u_m <> u_n = sum_k C(m+n-k, m) C(m, k) lam^k u_(m+n-k),   0 <= k <= min(m, n).

Formally substituting ``lam -> -P`` turns ``lam^k u_(m+n-k)`` into
``(-1)^k P^k(u_(m+n-k)) = (-1)^k u_(m+n)``; agreement with the Nijenhuis
product ``u_m * u_n = u_(m+n)`` is the alternating binomial identity
computed by :func:`identity_sum`.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .elements import ShuffleElement
from .hopf import InadmissibleBaseError


def _check_trivial(alg):
    if alg.base.name != "trivial":
        raise InadmissibleBaseError(f"the stuffle product lives on the trivial base, not {alg.base.name!r}")


def _stuffle_coefficients(m: int, n: int):
    for k in range(min(m, n) + 1):
        yield k, comb(m + n - k, m) * comb(m, k)


def stuffle_u(alg, m: int, n: int, lam) -> ShuffleElement:
    _check_trivial(alg)
    lam = Fraction(lam)
    out = ShuffleElement()
    for k, c in _stuffle_coefficients(m, n):
        out = out + (c * lam**k) * alg.make_u(m + n - k)
    return out


def nij_from_stuffle(alg, m: int, n: int) -> ShuffleElement:
    """The stuffle formula with each ``lam^k`` read as ``(-1)^k P^k``."""
    _check_trivial(alg)
    out = ShuffleElement()
    for k, c in _stuffle_coefficients(m, n):
        term = alg.make_u(m + n - k)
        for _ in range(k):
            term = alg.p_right(term)
        out = out + ((-1) ** k * c) * term
    return out


def identity_sum(m: int, n: int) -> int:
    if m < 0 or n < 0:
        raise ValueError("identity_sum needs m, n >= 0")
    return sum((-1) ** k * c for k, c in _stuffle_coefficients(m, n))
