"""Acceptance gate: every criterion checked at its stated bounds, exactly.

Run under pytest (one test per criterion, summary printed at the end) or
directly with ``python3 tests/test_acceptance.py``.
"""

import itertools
import random
import sys
from fractions import Fraction
from math import comb

import pytest

from nijenhuis import (
    EndoHandle,
    ShuffleElement,
    algebra,
    binomial_antipode_u,
    binomial_coproduct_u,
    identity_sum,
    nij_from_stuffle,
    parse_element,
    render_element,
)
from nijenhuis.suite import SuiteConfig, run_axiom_suite

from conftest import record_acceptance

BASES = ("trivial", "onesided", "binomial")


def w2e(w):
    return ShuffleElement({w: 1})


def criterion_1():
    """Nijenhuis identity, every word pair with length <= 3, exponents <= 2, every base."""
    checked = bad = 0
    for name in BASES:
        A = algebra(name)
        P = A.p_right
        for a, b in itertools.product(A.words(3, 2), repeat=2):
            x, y = w2e(a), w2e(b)
            lhs = A.mul(P(x), P(y))
            rhs = P(A.mul(x, P(y))) + P(A.mul(P(x), y)) - P(P(A.mul(x, y)))
            checked += 1
            bad += lhs != rhs
    return bad == 0, f"{checked} pairs, {bad} violations"


def criterion_2():
    """u_m * u_n = u_(m+n) for 0 <= m, n <= 10."""
    T = algebra("trivial")
    bad = sum(T.mul(T.make_u(m), T.make_u(n)) != T.make_u(m + n) for m, n in itertools.product(range(11), repeat=2))
    return bad == 0, f"121 pairs, {bad} violations"


def criterion_3():
    """Coproduct and counit are homomorphisms; cocycle, coassociativity, left counicity."""
    checked = bad = 0
    for name in BASES:
        A = algebra(name)
        words = list(A.words(3, 2))
        for a, b in itertools.product(words, repeat=2):
            checked += 2
            bad += not A.coproduct_hom_check(w2e(a), w2e(b))
            bad += not A.counit_hom_check(w2e(a), w2e(b))
        for w in words:
            e = w2e(w)
            checked += 3
            bad += not A.cocycle_check(e)
            bad += not A.coassoc_check(e)
            bad += not A.left_counit_check(e)
    return bad == 0, f"{checked} instances, {bad} violations"


def criterion_4():
    """Right counicity fails on the binomial base with witness x|x, value x^2."""
    B = algebra("binomial")
    ok, value = B.right_counit_check(parse_element("x|x", "binomial"))
    report = run_axiom_suite(SuiteConfig(base="binomial", axioms=("right-counicity",)))
    (result,) = report.axioms
    passed = (
        not ok
        and value == parse_element("x^2", "binomial")
        and result.status == "expected-failure"
        and result.counterexample["input"] == "x|x"
        and report.verdict == "pass"
    )
    return passed, f"(id (x) eps) D(x|x) = {render_element(value)}, suite status {result.status}"


def criterion_5():
    """Degree multiplicativity and coproduct filtration up to degree 5 (trivial, onesided)."""
    words = 0
    for name in ("trivial", "onesided"):
        A = algebra(name)
        for n in range(6):
            if not A.filtration_check(n):
                return False, f"{name}: degree {n} fails"
            words += sum(1 for _ in A.words_of_degree(n))
    return True, f"{words} homogeneous words, degrees 0..5"


def criterion_6():
    """id * S = e on bounded words; S(u_n) = 1 on the trivial base."""
    ID, S = EndoHandle.IDENTITY, EndoHandle.ANTIPODE
    checked = bad = 0
    O = algebra("onesided")
    for w in O.words(4, 2):
        e = w2e(w)
        checked += 1
        bad += O.convolve(ID, S, e) != O.unit(O.counit(e))
    T = algebra("trivial")
    for n in range(9):
        u = T.make_u(n)
        checked += 2
        bad += T.convolve(ID, S, u) != T.unit(T.counit(u))
        bad += T.antipode(u) != T.unit()
    return bad == 0, f"{checked} instances, {bad} violations"


def criterion_7():
    """Binomial Hopf algebra on the u_n, n <= 10: coefficients, both antipode laws, signs."""
    T = algebra("trivial")
    ID, SB = EndoHandle.IDENTITY, EndoHandle.BINOMIAL_ANTIPODE
    bad = 0
    for n in range(11):
        d = binomial_coproduct_u(T, n)
        expected_d = {((0,) * (i + 1), (0,) * (n - i + 1)): comb(n, i) for i in range(n + 1)}
        bad += dict(d.items()) != expected_d
        bad += binomial_antipode_u(T, n) != (-1) ** n * T.make_u(n)
        e = T.unit(1 if n == 0 else 0)
        bad += T.convolve(ID, SB, T.make_u(n), coproduct="binomial") != e
        bad += T.convolve(SB, ID, T.make_u(n), coproduct="binomial") != e
    return bad == 0, f"n = 0..10, {bad} violations"


def criterion_8():
    """identity_sum = 1 for m, n <= 12; lambda -> -P substitution matches u_m * u_n for m, n <= 10."""
    T = algebra("trivial")
    bad_sum = sum(identity_sum(m, n) != 1 for m, n in itertools.product(range(13), repeat=2))
    bad_sub = sum(
        nij_from_stuffle(T, m, n) != T.mul(T.make_u(m), T.make_u(n)) for m, n in itertools.product(range(11), repeat=2)
    )
    return bad_sum == 0 and bad_sub == 0, f"{bad_sum} identity violations, {bad_sub} substitution violations"


def _random_element(rng, name):
    terms = {}
    for _ in range(rng.randint(0, 5)):
        length = rng.randint(1, 4)
        w = tuple(0 if name == "trivial" else rng.randint(0, 4) for _ in range(length))
        num = rng.choice([n for n in range(-20, 21) if n])
        terms[w] = Fraction(num, rng.randint(1, 12))
    return ShuffleElement(terms)


def criterion_9():
    """parse(render(e)) = e on 500 seeded random elements per base; byte-identical reports."""
    rng = random.Random(20261016)
    bad = 0
    for name in BASES:
        for _ in range(500):
            e = _random_element(rng, name)
            bad += parse_element(render_element(e), name) != e
            if name == "trivial":
                bad += parse_element(render_element(e, u_notation=True), name) != e
    identical = all(
        run_axiom_suite(cfg).to_json() == run_axiom_suite(cfg).to_json()
        for cfg in (SuiteConfig(base=name, seed=3, output="structured") for name in BASES)
    )
    return bad == 0 and identical, f"{bad} round-trip failures, reports identical: {identical}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9]


def _line(idx, fn, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {idx}: {fn.__doc__.strip()} ({detail})"


@pytest.mark.parametrize("idx", range(1, len(CRITERIA) + 1))
def test_criterion(idx):
    fn = CRITERIA[idx - 1]
    ok, detail = fn()
    record_acceptance(_line(idx, fn, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for idx, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        failures += not ok
        print(_line(idx, fn, ok, detail))
    sys.exit(1 if failures else 0)
