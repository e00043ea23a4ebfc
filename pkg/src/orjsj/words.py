"""Words in the free group F(a, b).

Letters are the characters ``a, A, b, B`` with uppercase denoting the inverse.
Everything here is exact and immutable; a :class:`Word` is always freely
reduced and a :class:`CyclicWord` is always cyclically reduced and stored in
its least rotation under the letter order ``a < A < b < B``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable

from .errors import EmptyWordError

ALPHABET = "aAbB"

_INVERT = str.maketrans("aAbB", "AaBb")
# Python orders "A" < "B" < "a" < "b"; comparisons go through this key instead.
_TO_KEY = str.maketrans("aAbB", "0123")
_FROM_KEY = str.maketrans("0123", "aAbB")
_INVERSE_OF = {"a": "A", "A": "a", "b": "B", "B": "b"}


class Letter(IntEnum):
    a = 0
    A = 1
    b = 2
    B = 3

    @property
    def char(self) -> str:
        return ALPHABET[self]

    @property
    def generator(self) -> str:
        return "a" if self < 2 else "b"

    @property
    def sign(self) -> int:
        return 1 if self % 2 == 0 else -1

    @property
    def inverse(self) -> "Letter":
        return Letter(self ^ 1)

    @classmethod
    def from_char(cls, c: str) -> "Letter":
        return cls(ALPHABET.index(c))


def _letters_of(raw) -> str:
    if isinstance(raw, str):
        text = raw
    elif isinstance(raw, Word):
        return raw.letters
    else:
        text = "".join(x.char if isinstance(x, Letter) else str(x) for x in raw)
    bad = set(text) - set(ALPHABET)
    if bad:
        raise ValueError(f"not letters of F(a, b): {''.join(sorted(bad))!r}")
    return text


def reduce_letters(text: str) -> str:
    """Free reduction of a string over ``aAbB`` (stack based, linear time)."""
    out = []
    for c in text:
        if out and out[-1] == _INVERSE_OF[c]:
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def is_reduced(text: str) -> bool:
    return all(_INVERSE_OF[x] != y for x, y in zip(text, text[1:]))


def cyclic_core_letters(text: str) -> tuple[int, str]:
    """Strip inverse end pairs from a reduced string.

    Returns ``(k, core)`` where the first ``k`` letters were the conjugator.
    """
    i, j = 0, len(text) - 1
    while i < j and _INVERSE_OF[text[i]] == text[j]:
        i += 1
        j -= 1
    return i, text[i:j + 1]


def _booth(key: str) -> int:
    # Booth's least-rotation algorithm, O(n).
    n = len(key)
    s = key + key
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if i == -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n if n else 0


def least_rotation(text: str) -> str:
    """Least rotation of ``text`` under the order a < A < b < B."""
    n = len(text)
    if n < 2:
        return text
    key = text.translate(_TO_KEY)
    if n <= 48:
        doubled = key + key
        best = min(doubled[i:i + n] for i in range(n))
    else:
        k = _booth(key)
        best = key[k:] + key[:k]
    return best.translate(_FROM_KEY)


def sort_key(text: str) -> str:
    """Key realising the letter order a < A < b < B for string comparison."""
    return text.translate(_TO_KEY)


@dataclass(frozen=True, slots=True)
class Word:
    """A freely reduced word; the empty word is the identity."""

    letters: str = ""

    def __post_init__(self):
        text = _letters_of(self.letters)
        if not is_reduced(text):
            raise ValueError(f"{text!r} is not freely reduced; use free_reduce")
        object.__setattr__(self, "letters", text)

    @classmethod
    def parse(cls, text: str) -> "Word":
        from .parsing import parse_word

        return parse_word(text)

    def __str__(self):
        return self.letters

    def __repr__(self):
        return f"Word({self.letters!r})"

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return (Letter.from_char(c) for c in self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else invert(self)
        return free_reduce(base.letters * abs(n))

    def inverse(self) -> "Word":
        return invert(self)

    def is_cyclically_reduced(self) -> bool:
        t = self.letters
        return len(t) < 2 or _INVERSE_OF[t[0]] != t[-1]


@dataclass(frozen=True, slots=True)
class CyclicWord:
    """Conjugacy class of a cyclically reduced word, in canonical rotation."""

    letters: str = ""

    def __post_init__(self):
        text = _letters_of(self.letters)
        if not is_reduced(text) or (len(text) > 1 and _INVERSE_OF[text[0]] == text[-1]):
            raise ValueError(f"{text!r} is not cyclically reduced")
        object.__setattr__(self, "letters", least_rotation(text))

    @classmethod
    def of(cls, w) -> "CyclicWord":
        """Conjugacy class of any word (reduced first)."""
        return cyclic_reduce(w if isinstance(w, Word) else free_reduce(w))[1]

    def __str__(self):
        return self.letters

    def __repr__(self):
        return f"CyclicWord({self.letters!r})"

    def __len__(self):
        return len(self.letters)

    def __lt__(self, other: "CyclicWord") -> bool:
        return (len(self), sort_key(self.letters)) < (len(other), sort_key(other.letters))

    def word(self) -> Word:
        return Word(self.letters)


@dataclass(frozen=True, slots=True)
class ExponentSums:
    e_a: int
    e_b: int

    def __add__(self, other: "ExponentSums") -> "ExponentSums":
        return ExponentSums(self.e_a + other.e_a, self.e_b + other.e_b)

    def __iter__(self):
        return iter((self.e_a, self.e_b))

    @property
    def is_zero(self) -> bool:
        return self.e_a == 0 and self.e_b == 0


EMPTY = Word()


def free_reduce(raw: Iterable) -> Word:
    return Word(reduce_letters(_letters_of(raw)))


def invert(w: Word) -> Word:
    return Word(w.letters[::-1].translate(_INVERT))


def invert_letters(text: str) -> str:
    return text[::-1].translate(_INVERT)


def concat(u: Word, v: Word) -> Word:
    a, b = u.letters, v.letters
    # Only the junction can cancel.
    k = 0
    while k < len(a) and k < len(b) and _INVERSE_OF[a[-1 - k]] == b[k]:
        k += 1
    return Word(a[:len(a) - k] + b[k:])


def cyclic_reduce(w: Word) -> tuple[Word, CyclicWord]:
    """Split ``w`` as ``conjugator * core * conjugator^-1``."""
    k, core = cyclic_core_letters(w.letters)
    return Word(w.letters[:k]), CyclicWord(core)


def exponent_sums(w: Word) -> ExponentSums:
    t = w.letters
    return ExponentSums(t.count("a") - t.count("A"), t.count("b") - t.count("B"))


def smallest_period(text: str) -> int:
    """Least p > 0 with ``text`` equal to its rotation by p; p divides len."""
    if not text:
        return 0
    return (text + text).find(text, 1)


def max_root(w: Word) -> tuple[Word, int]:
    """Return ``(root, n)`` with ``w == root**n`` and ``n`` maximal."""
    if not w:
        raise EmptyWordError("the empty word has no root")
    k, core = cyclic_core_letters(w.letters)
    p = smallest_period(core)
    conj = w.letters[:k]
    root = conj + core[:p] + invert_letters(conj)
    return Word(root), len(core) // p


def apply_endo(w: Word, image_a: Word, image_b: Word) -> Word:
    """Image of ``w`` under the endomorphism a -> image_a, b -> image_b."""
    images = {
        "a": image_a.letters,
        "A": invert_letters(image_a.letters),
        "b": image_b.letters,
        "B": invert_letters(image_b.letters),
    }
    return Word(reduce_letters("".join(images[c] for c in w.letters)))


def rotations(c: CyclicWord) -> list[Word]:
    """Distinct rotations of ``c``, starting from the canonical one."""
    t = c.letters
    n = len(t)
    if n == 0:
        return [EMPTY]
    p = smallest_period(t)
    return [Word(t[i:] + t[:i]) for i in range(p)]
