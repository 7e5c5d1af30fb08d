"""Text grammar for algebra elements.

    element := term (('+'|'-') term)*
    term    := coeff | [coeff '*'] factor+
    factor  := 's[' digits ']' | 't[' digits ']'     (t[J] means s_J^*)
    coeff   := rational | rational ('+'|'-') rational 'i'
    rational := integer ['/' positive-integer]

Digits are single letters 1..N concatenated (so N <= 9).  Whitespace is
insignificant.  ``format_element`` prints the canonical form and round-trips
through ``parse_element``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Tuple

from .algebra import AlgebraElement, Monomial
from .errors import ParseError
from .scalars import GaussianRational

_TOKEN = re.compile(
    r"""\s*(?:
        (?P<factor>[st]\[[0-9]+\])
      | (?P<number>\d+(?:/\d+)?)
      | (?P<imag>i)
      | (?P<op>[+\-*])
    )""",
    re.VERBOSE,
)


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[at]!r}", at)
        for kind in ("factor", "number", "imag", "op"):
            val = m.group(kind)
            if val is not None:
                tokens.append((kind, val, m.start(kind)))
                break
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, n_gens: int):
        self.text = text
        self.n_gens = n_gens
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.i += 1
        return tok

    def parse(self) -> AlgebraElement:
        if not self.tokens:
            raise ParseError("empty element", 0)
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":  # optional leading sign
            self.next()
            sign = 1 if tok[1] == "+" else -1
        result = self._term(sign=sign)
        while (tok := self.peek()) is not None:
            if tok[0] != "op" or tok[1] not in "+-":
                raise ParseError(f"expected '+' or '-', got {tok[1]!r}", tok[2])
            self.next()
            result = result + self._term(sign=1 if tok[1] == "+" else -1)
        return result

    def _rational(self) -> Fraction:
        kind, val, pos = self.next()
        if kind != "number":
            raise ParseError(f"expected a number, got {val!r}", pos)
        if "/" in val:
            num, den = val.split("/")
            if int(den) == 0:
                raise ParseError("zero denominator", pos)
            return Fraction(int(num), int(den))
        return Fraction(int(val))

    def _coeff(self) -> GaussianRational:
        """rational, optionally followed by ('+'|'-') rational 'i'."""
        re_part = self._rational()
        save = self.i
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] in "+-":
            sign = 1 if tok[1] == "+" else -1
            self.next()
            nxt = self.peek()
            if nxt is not None and nxt[0] == "number":
                self.next()
                after = self.peek()
                if after is not None and after[0] == "imag":
                    self.next()
                    im = Fraction(int(nxt[1].split("/")[0]),
                                  int(nxt[1].split("/")[1]) if "/" in nxt[1] else 1)
                    return GaussianRational(re_part, sign * im)
            self.i = save
        return GaussianRational(re_part, Fraction(0))

    def _word(self, token: str, pos: int) -> Tuple[int, ...]:
        digits = token[2:-1]
        word = tuple(int(d) for d in digits)
        for off, letter in enumerate(word):
            if not 1 <= letter <= self.n_gens:
                raise ParseError(f"letter {letter} outside 1..{self.n_gens}", pos + 2 + off)
        return word

    def _term(self, sign: int) -> AlgebraElement:
        tok = self.peek()
        if tok is None:
            raise ParseError("expected a term", len(self.text))
        coeff = GaussianRational.of(sign)
        if tok[0] == "number":
            coeff = coeff * self._coeff()
            nxt = self.peek()
            if nxt is not None and nxt[0] == "op" and nxt[1] == "*":
                self.next()
                nxt = self.peek()
                if nxt is None or nxt[0] != "factor":
                    where = nxt[2] if nxt else len(self.text)
                    raise ParseError("expected a factor after '*'", where)
            elif nxt is None or nxt[0] != "factor":
                # bare scalar term
                return AlgebraElement.one(self.n_gens).scaled(coeff)
        elif tok[0] != "factor":
            raise ParseError(f"expected a coefficient or factor, got {tok[1]!r}", tok[2])
        result = AlgebraElement.one(self.n_gens).scaled(coeff)
        saw_factor = False
        while (tok := self.peek()) is not None and tok[0] == "factor":
            self.next()
            word = self._word(tok[1], tok[2])
            if tok[1][0] == "s":
                factor = AlgebraElement.monomial(self.n_gens, word, ())
            else:
                factor = AlgebraElement.monomial(self.n_gens, (), word)
            result = result * factor
            saw_factor = True
        if not saw_factor:
            raise ParseError("term has no factor", tok[2] if tok else len(self.text))
        return result


def parse_element(text: str, n_gens: int) -> AlgebraElement:
    """Parse the element grammar; errors carry a character position."""
    return _Parser(text, n_gens).parse()


def _format_word(prefix: str, word) -> str:
    return f"{prefix}[{''.join(str(d) for d in word)}]"


def _format_monomial(m: Monomial) -> str:
    parts = []
    if m.left:
        parts.append(_format_word("s", m.left))
    if m.right:
        parts.append(_format_word("t", m.right))
    return " ".join(parts) if parts else "1"


def format_element(a: AlgebraElement) -> str:
    """Deterministic canonical text; round-trips through parse_element."""
    canon = a.canonical()
    if canon.is_zero():
        return "0"
    pieces = []
    for idx, (mono, coeff) in enumerate(canon.sorted_terms()):
        factors = _format_monomial(mono)
        if coeff.is_real():
            neg = coeff.re < 0
            mag = abs(coeff.re)
            if mag == 1 and factors != "1":
                body = factors
            elif factors == "1":
                body = str(mag)
            else:
                body = f"{mag} * {factors}"
            joiner = "-" if neg else "+"
        else:
            # negate so the printed real part is nonnegative and the term
            # reparses with an outer '-' sign
            neg = coeff.re < 0 or (coeff.re == 0 and coeff.im < 0)
            shown = -coeff if neg else coeff
            body = str(shown) if factors == "1" else f"{shown} * {factors}"
            joiner = "-" if neg else "+"
        if idx == 0:
            pieces.append(body if joiner == "+" else f"-{body}")
        else:
            pieces.append(f"{joiner} {body}")
    return " ".join(pieces)
