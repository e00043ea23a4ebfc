"""Text format for words and presentations.

Grammar (whitespace ignored)::

    word  := item*
    item  := atom ('^' '-'? digits)?
    atom  := letter | '1' | '(' word ')'

Lowercase letters are generators and uppercase their inverses, so
``"(AABaab)^3"``, ``"a^2 b^2 A B A B"`` and ``"a^-1"`` are all valid.  A full
presentation ``"<a,b | W>"`` (or with angle brackets ⟨ ⟩) is also accepted.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .words import Word, free_reduce, reduce_letters

_PRESENTATION = re.compile(r"^\s*[<⟨]\s*(\w)\s*,\s*(\w)\s*\|(.*)[>⟩]\s*$", re.S)


class _Parser:
    def __init__(self, text, gens):
        self.text = text
        self.pos = 0
        self.gens = gens
        self.letters = gens + gens.upper()

    def error(self, message, pos=None):
        raise ParseError(self.pos if pos is None else pos, message)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def word(self, depth=0):
        parts = []
        while True:
            c = self.peek()
            if c == "" or c == ")":
                if c == ")" and depth == 0:
                    self.error("unbalanced ')'")
                return "".join(parts)
            parts.append(self.item(depth))

    def item(self, depth):
        start = self.pos
        c = self.text[self.pos]
        if c in self.letters:
            self.pos += 1
            body = c
        elif c == "1":
            self.pos += 1
            body = ""
        elif c == "(":
            self.pos += 1
            body = self.word(depth + 1)
            if self.peek() != ")":
                self.error("missing ')'", start)
            self.pos += 1
        else:
            self.error(f"unexpected character {c!r}")
        if self.peek() == "^":
            self.pos += 1
            n = self.integer()
            body = _power(body, n, self.gens)
        return body

    def integer(self):
        self.skip()
        m = re.compile(r"[-+]?\d+").match(self.text, self.pos)
        if not m:
            self.error("expected an integer exponent after '^'")
        self.pos = m.end()
        return int(m.group())


def _power(body, n, gens):
    if n < 0:
        inv = str.maketrans(gens + gens.upper(), gens.upper() + gens)
        body = body[::-1].translate(inv)
    return body * abs(n)


def parse_letters(text: str, gens: str = "ab") -> str:
    """Expand ``text`` into a raw (not yet reduced) letter string."""
    p = _Parser(text, gens)
    out = p.word()
    if p.peek():
        p.error("trailing input")
    return out


def parse_word(text: str) -> Word:
    return free_reduce(parse_letters(text, "ab"))


def parse_relator(text: str) -> Word:
    """Parse a relator, or a whole presentation ``<a,b | R>``."""
    m = _PRESENTATION.match(text)
    if m:
        if {m.group(1), m.group(2)} != {"a", "b"}:
            raise ParseError(0, "presentation generators must be a and b")
        offset = m.start(3)
        try:
            return free_reduce(parse_letters(m.group(3), "ab"))
        except ParseError as e:
            raise ParseError(e.position + offset, e.message) from None
    if text.lstrip().startswith(("<", "⟨")):
        raise ParseError(text.index(text.lstrip()[0]), "malformed presentation")
    return parse_word(text)


def format_power_form(letters: str) -> str:
    """Caret-power form: ``"XXyy"`` becomes ``"x^-2 y^2"``."""
    if not letters:
        return "1"
    out = []
    for m in re.finditer(r"(.)\1*", letters):
        c, k = m.group(1), len(m.group())
        g = c.lower()
        e = k if c == g else -k
        out.append(g if e == 1 else f"{g}^{e}")
    return " ".join(out)


def reduce_in(gens: str, text: str) -> str:
    """Free reduction over an arbitrary two-letter alphabet."""
    table = str.maketrans(gens + gens.upper(), "abAB")
    back = str.maketrans("abAB", gens + gens.upper())
    return reduce_letters(text.translate(table)).translate(back)
