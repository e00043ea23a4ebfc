"""The subgroup H = <a, b^-1 a b> of F(a, b).

Its folded core graph has two vertices, ``u`` (the base point) and ``w``,
an ``a``-loop at each, and one ``b``-edge from ``w`` to ``u``.  A word lies
in H iff it reads a closed path at ``u``.  Abstract generators are
``x = a`` and ``y = b^-1 a b``; an excursion ``B a^k b`` through ``w``
reads off as ``y^k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import NotInSubgroupError
from .parsing import format_power_form, parse_letters, reduce_in
from .whitehead import OrbitSet
from .words import CyclicWord, Word, free_reduce, is_reduced, rotations, sort_key

U, W = "u", "w"

# (state, letter) -> (next state, emitted xy letter or "")
CORE_GRAPH = {
    (U, "a"): (U, "x"),
    (U, "A"): (U, "X"),
    (U, "B"): (W, ""),
    (W, "a"): (W, "y"),
    (W, "A"): (W, "Y"),
    (W, "b"): (U, ""),
}


@dataclass(frozen=True)
class XYWord:
    """Freely reduced word in x = a and y = b^-1 a b."""

    letters: str = ""

    def __post_init__(self):
        if set(self.letters) - set("xXyY"):
            raise ValueError(f"not an xy-word: {self.letters!r}")
        if not is_reduced(self.letters.translate(str.maketrans("xXyY", "aAbB"))):
            raise ValueError(f"{self.letters!r} is not freely reduced")

    @classmethod
    def parse(cls, text: str) -> "XYWord":
        return cls(reduce_in("xy", parse_letters(text, "xy")))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return self.letters

    def power_form(self) -> str:
        return format_power_form(self.letters)

    def counts(self) -> tuple[int, int, int]:
        """``(X, Y, Syl(Y))``: x-letters, y-letters, maximal y-syllables."""
        t = self.letters.lower()
        syl = sum(1 for i, c in enumerate(t) if c == "y" and (i == 0 or t[i - 1] != "y"))
        return t.count("x"), t.count("y"), syl


def _trace(w: Word):
    state = U
    out = []
    for c in w.letters:
        step = CORE_GRAPH.get((state, c))
        if step is None:
            return None
        state, emitted = step
        if emitted:
            out.append(emitted)
    if state != U:
        return None
    return "".join(out)


def membership(w: Word) -> bool:
    return _trace(w) is not None


def rewrite_to_xy(w: Word) -> XYWord:
    t = _trace(w)
    if t is None:
        raise NotInSubgroupError(f"{w} is not in <a, b^-1 a b>")
    return XYWord(t)


def expand_xy(t: XYWord) -> Word:
    table = {"x": "a", "X": "A", "y": "Bab", "Y": "BAb"}
    return free_reduce("".join(table[c] for c in t.letters))


class Representative(NamedTuple):
    T: Word
    T0: XYWord


def qualifying_rotations(c: CyclicWord) -> list[Word]:
    return [r for r in rotations(c) if membership(r)]


def find_representative(
    orbit: OrbitSet, prefer: Optional[CyclicWord] = None
) -> Optional[Representative]:
    """Least rotation of an orbit member lying in H, with its xy rewriting.

    If ``prefer`` is a member with a qualifying rotation, the search is
    restricted to it; this keeps an input already in HNN form as is.
    """
    hits = []
    if prefer is not None and prefer in orbit.members:
        hits = qualifying_rotations(prefer)
    if not hits:
        hits = [r for c in orbit.members for r in qualifying_rotations(c)]
    if not hits:
        return None
    T = min(hits, key=lambda r: sort_key(r.letters))
    return Representative(T, rewrite_to_xy(T))
