from collections import Counter
from fractions import Fraction
import itertools

import pytest
from hypothesis import given

from nijenhuis import PairElement, ShuffleElement, TripleElement, algebra

import oracles
from conftest import el, elements_st


def pair(d):
    return PairElement(d)


def test_pair_mul_examples(algebras):
    A = algebras["binomial"]
    p = pair({((1,), (0,)): 1})
    q = pair({((1,), (0, 0)): 1})
    assert A.pair_mul(p, q) == pair({((2,), (0, 0)): 1})
    a, b = el((1, 2)), el((2, 0, 1))
    lhs = A.pair_mul(A.tensor(A.unit(), a), A.tensor(A.unit(), b))
    assert lhs == A.tensor(A.unit(), A.mul(a, b))
    assert A.pair_mul(p, PairElement()) == PairElement()


def test_coproduct_trivial_examples(algebras):
    T = algebras["trivial"]
    assert T.coproduct(el((0, 0, 0))) == pair({((0,), (0, 0, 0)): 1})
    for n in range(8):
        assert T.coproduct(T.make_u(n)) == T.tensor(T.unit(), T.make_u(n))
    # scalars c1 c2 c3 pass through linearly
    e = ShuffleElement({(0, 0, 0): Fraction(6)})
    assert T.coproduct(e) == pair({((0,), (0, 0, 0)): 6})


def test_coproduct_binomial_xx(algebras):
    A = algebras["binomial"]
    expected = pair({((2,), (0, 0)): 1, ((1,), (0, 1)): 1, ((1,), (1, 0)): 1, ((0,), (1, 1)): 1})
    assert A.coproduct(el((1, 1))) == expected
    assert Counter(expected.terms) == oracles.coproduct_word("binomial", (1, 1))


def test_coproduct_frozen_value(algebras):
    # frozen from tests/oracles.py
    A = algebras["binomial"]
    assert A.coproduct(el((2, 1))) == pair(
        {((1,), (1, 1)): 2, ((2,), (1, 0)): 2, ((0,), (2, 1)): 1, ((1,), (2, 0)): 1, ((2,), (0, 1)): 1, ((3,), (0, 0)): 1}
    )


@pytest.mark.parametrize("name", ["trivial", "onesided", "binomial"])
def test_coproduct_matches_closed_form(algebras, name):
    A = algebras[name]
    for w in A.words(4, 2):
        assert Counter(A.coproduct(el(w)).terms) == oracles.coproduct_word(name, w)


def test_onesided_coproduct_is_primitive_on_the_left(algebras):
    A = algebras["onesided"]
    for w in A.words(3, 3):
        assert A.coproduct(el(w)) == A.tensor(A.unit(), el(w))


def test_counit_examples(algebras):
    assert algebras["onesided"].counit(el((1, 0, 2))) == 0
    assert algebras["binomial"].counit(el((1, 0, 2))) == 0
    assert algebras["binomial"].counit(el((0, 0))) == 1
    T = algebras["trivial"]
    for n in range(6):
        assert T.counit(T.make_u(n)) == oracles.counit_word("trivial", (0,) * (n + 1)) == 1
    assert algebras["onesided"].counit(ShuffleElement({(0,): 3, (0, 0): Fraction(1, 2), (1,): 7})) == Fraction(7, 2)


def test_left_counit_check_examples(algebras):
    for name, A in algebras.items():
        for w in A.words(3, 2):
            assert A.left_counit_check(el(w))
        assert A.left_counit_check(ShuffleElement())
    assert algebras["binomial"].left_counit_check(el((1, 1)))


def test_right_counit_check_examples(algebras):
    A = algebras["binomial"]
    ok, value = A.right_counit_check(el((1, 1)))
    assert not ok and value == el((2,))
    assert A.right_counit_check(el((1,))) == (True, el((1,)))
    assert A.right_counit_check(A.unit()) == (True, A.unit())
    ok, value = algebras["onesided"].right_counit_check(el((1,)))
    assert not ok and value == ShuffleElement()


def test_coassoc_check_examples(algebras):
    for A in algebras.values():
        for w in A.words(3, 2):
            assert A.coassoc_check(el(w))
        assert A.coassoc_check(A.unit())
    O = algebras["onesided"]
    d = O.coproduct(el((1, 1, 1)))
    expected = TripleElement({((0,), (0,), (1, 1, 1)): 1})
    assert O.id_tensor_coproduct(d) == expected == O.coproduct_tensor_id(d)


@pytest.mark.parametrize("name", ["trivial", "onesided", "binomial"])
def test_homomorphisms_exhaustive(algebras, name):
    A = algebras[name]
    words = list(A.words(3, 2))
    for a, b in itertools.product(words, words):
        assert A.coproduct_hom_check(el(a), el(b))
        assert A.counit_hom_check(el(a), el(b))


@pytest.mark.parametrize("name", ["trivial", "onesided", "binomial"])
def test_cocycle_and_counit_shift(algebras, name):
    A = algebras[name]
    for w in A.words(4, 2):
        e = el(w)
        assert A.cocycle_check(e)
        assert A.counit(A.p_right(e)) == A.counit(e)


@pytest.mark.parametrize("name", ["onesided", "binomial"])
def test_shift_commutation(algebras, name):
    A = algebras[name]
    words = list(A.words(2, 2))
    for a, b in itertools.product(words, words):
        p = A.tensor(el(a), el(b))
        assert A.id_tensor_coproduct(A.id_tensor_pr(p)) == A.id_id_tensor_pr(A.id_tensor_coproduct(p))
        assert A.coproduct_tensor_id(A.id_tensor_pr(p)) == A.id_id_tensor_pr(A.coproduct_tensor_id(p))


@given(elements_st("binomial"), elements_st("binomial"))
def test_coproduct_hom_on_elements(a, b):
    A = algebra("binomial")
    assert A.coproduct(A.mul(a, b)) == A.pair_mul(A.coproduct(a), A.coproduct(b))
    assert A.counit(A.mul(a, b)) == A.counit(a) * A.counit(b)


@given(elements_st("binomial", max_len=4))
def test_coassoc_and_left_counit_on_elements(e):
    A = algebra("binomial")
    assert A.coassoc_check(e)
    assert A.left_counit_check(e)
    assert A.cocycle_check(e)


def test_right_counicity_fails_on_every_base(algebras):
    witnesses = {"binomial": (1, 1), "onesided": (1,), "trivial": (0, 0)}
    for name, w in witnesses.items():
        ok, _ = algebras[name].right_counit_check(el(w))
        assert not ok
