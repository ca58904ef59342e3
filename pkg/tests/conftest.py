import pytest
from fractions import Fraction
from hypothesis import settings, strategies as st

from nijenhuis import ShuffleElement, algebra

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

BASE_NAMES = ["trivial", "onesided", "binomial"]


@pytest.fixture(scope="session")
def algebras():
    return {name: algebra(name) for name in BASE_NAMES}


def words_st(base: str, max_len: int = 3, max_exp: int = 2):
    top = 0 if base == "trivial" else max_exp
    return st.lists(st.integers(0, top), min_size=1, max_size=max_len).map(tuple)


def rationals_st():
    return st.fractions(min_value=-5, max_value=5, max_denominator=6)


def elements_st(base: str, max_len: int = 3, max_exp: int = 2, max_terms: int = 3):
    return st.dictionaries(words_st(base, max_len, max_exp), rationals_st(), max_size=max_terms).map(ShuffleElement)


def el(*words, coeff=1):
    return ShuffleElement({w: Fraction(coeff) for w in words})


_acceptance_lines: list[str] = []


def record_acceptance(line: str):
    _acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
