"""Text syntax for elements.

Grammar (whitespace is ignored)::

    elem     := ['+' | '-'] term (('+' | '-') term)*
    term     := rational '*' word | word | rational
    word     := letter ('|' letter)* | 'u' nat | '(' word ')'
    letter   := '1' | 'x' ['^' nat]
    rational := int ['/' posint]

``|`` is the tensor sign, ``x^k`` a base monomial and ``u<n>`` the word of
``n + 1`` unit letters (trivial base only). A bare rational ``c`` denotes
``c * 1``, so ``1`` reads the same either way and ``0`` is the zero element.

The printer emits terms in canonical order with reduced coefficients and
elides coefficient 1; ``parse_element(render_element(e), base) == e``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .bases import BaseSpec, get_base
from .elements import PairElement, ShuffleElement, TripleElement, Word


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class LetterBaseError(ParseError):
    """Syntax is fine but the letter does not exist in the chosen base."""


_TOKEN = re.compile(r"\d+|\S", re.ASCII)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    for m in _TOKEN.finditer(text):
        tok = m.group()
        if tok[0] in "0123456789":
            tokens.append(("num", tok, m.start()))
        elif tok in "xu^|/*+-()":
            tokens.append((tok, tok, m.start()))
        else:
            raise ParseError(f"unexpected character {tok!r}", m.start(), text)
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, base: BaseSpec):
        self.text = text
        self.base = base
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind: str):
        t = self.tok
        if t[0] != kind:
            what = "end of input" if t[0] == "end" else repr(t[1])
            raise ParseError(f"expected {kind!r}, found {what}", t[2], self.text)
        return self.advance()

    def error(self, message: str):
        raise ParseError(message, self.tok[2], self.text)

    def nat(self) -> int:
        return int(self.expect("num")[1])

    def parse(self) -> ShuffleElement:
        terms: list[tuple[Word, Fraction]] = []
        sign = 1
        if self.tok[0] in ("+", "-"):
            sign = -1 if self.advance()[0] == "-" else 1
        terms.append(self.term(sign))
        while self.tok[0] in ("+", "-"):
            sign = -1 if self.advance()[0] == "-" else 1
            terms.append(self.term(sign))
        if self.tok[0] != "end":
            self.error(f"unexpected {self.tok[1]!r}")
        return ShuffleElement(terms)

    def term(self, sign: int) -> tuple[Word, Fraction]:
        if self.tok[0] == "num":
            raw = self.tok[1]
            coeff = Fraction(int(self.advance()[1]))
            if self.tok[0] == "/":
                self.advance()
                den_tok = self.tok
                den = self.nat()
                if den == 0:
                    raise ParseError("zero denominator", den_tok[2], self.text)
                coeff /= den
                raw = None
            if self.tok[0] == "*":
                self.advance()
                return self.word(), sign * coeff
            if raw == "1" and self.tok[0] == "|":
                # the unit letter opening a longer word
                self.i -= 1
                return self.word(), Fraction(sign)
            return (0,), sign * coeff
        if self.tok[0] in ("x", "u", "("):
            return self.word(), Fraction(sign)
        self.error("expected a term")

    def word(self) -> Word:
        t = self.tok
        if t[0] == "(":
            self.advance()
            w = self.word()
            self.expect(")")
            return w
        if t[0] == "u":
            self.advance()
            n = self.nat()
            if self.base.name != "trivial":
                raise LetterBaseError(f"u-words need the trivial base, not {self.base.name!r}", t[2], self.text)
            return (0,) * (n + 1)
        letters = [self.letter()]
        while self.tok[0] == "|":
            self.advance()
            letters.append(self.letter())
        return tuple(letters)

    def letter(self) -> int:
        t = self.tok
        if t[0] == "num":
            if t[1] != "1":
                self.error(f"a letter is '1' or 'x^k', found {t[1]!r}")
            self.advance()
            return 0
        if t[0] == "x":
            self.advance()
            exp = 1
            if self.tok[0] == "^":
                self.advance()
                exp = self.nat()
            if self.base.name == "trivial":
                raise LetterBaseError("the trivial base has no letter x", t[2], self.text)
            return exp
        self.error("expected a letter")


def parse_element(text: str, base: str | BaseSpec = "onesided") -> ShuffleElement:
    return _Parser(text, get_base(base)).parse()


def render_letter(i: int) -> str:
    if i == 0:
        return "1"
    if i == 1:
        return "x"
    return f"x^{i}"


def render_word(w: Word, u_notation: bool = False) -> str:
    if u_notation and not any(w):
        return f"u{len(w) - 1}"
    return "|".join(render_letter(a) for a in w)


def _render_terms(pieces: list[tuple[str, Fraction]]) -> str:
    if not pieces:
        return "0"
    out = []
    for idx, (body, c) in enumerate(pieces):
        mag = abs(c)
        text = body if mag == 1 else f"{mag}*{body}"
        if idx == 0:
            out.append(f"-{text}" if c < 0 else text)
        else:
            out.append(f" - {text}" if c < 0 else f" + {text}")
    return "".join(out)


def render_element(e: ShuffleElement, u_notation: bool = False) -> str:
    return _render_terms([(render_word(w, u_notation), c) for w, c in e.items()])


def render_pair(p: PairElement, u_notation: bool = False) -> str:
    """Terms as ``c*(left, right)``."""
    return _render_terms(
        [(f"({render_word(l, u_notation)}, {render_word(r, u_notation)})", c) for (l, r), c in p.items()]
    )


def render_triple(t: TripleElement, u_notation: bool = False) -> str:
    return _render_terms(
        [("(" + ", ".join(render_word(w, u_notation) for w in key) + ")", c) for key, c in t.items()]
    )
