"""Whitehead's algorithm in rank two.

The generating set is the classical one: the eight signed permutations of
``{a, b}`` and, for every multiplier ``m`` in ``{a, A, b, B}``, the three
non-trivial second-kind maps acting on the other generator ``z``::

    right:  z -> z m
    left:   z -> m^-1 z
    conj:   z -> m^-1 z m

Peak reduction makes greedy descent over this set reach the orbit minimum,
and connects any two minimal words by length-preserving moves.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import CardinalityBlownError, EmptyWordError
from .words import (
    CyclicWord,
    Word,
    cyclic_core_letters,
    invert_letters,
    least_rotation,
    reduce_letters,
    smallest_period,
    sort_key,
)

DEFAULT_ORBIT_CAP = 1000
ORBIT_CAP_ENV = "ORJSJ_ORBIT_CAP"

MODES = ("right", "left", "conj")


@dataclass(frozen=True)
class WhiteheadAut:
    kind: str  # "permutation" or "multiplier"
    image_a: str
    image_b: str
    acted: Optional[str] = None
    multiplier: Optional[str] = None
    mode: Optional[str] = None

    @property
    def name(self) -> str:
        return f"a->{self.image_a or '1'}, b->{self.image_b or '1'}"

    def images(self) -> dict:
        return {
            "a": self.image_a,
            "A": invert_letters(self.image_a),
            "b": self.image_b,
            "B": invert_letters(self.image_b),
        }

    def __call__(self, w: Word) -> Word:
        table = self.images()
        return Word(reduce_letters("".join(table[c] for c in w.letters)))

    def __str__(self):
        return self.name


def _permutations():
    out = []
    for swap in (False, True):
        for sa in (1, -1):
            for sb in (1, -1):
                ia = ("b" if swap else "a")
                ib = ("a" if swap else "b")
                ia = ia if sa == 1 else ia.upper()
                ib = ib if sb == 1 else ib.upper()
                out.append(WhiteheadAut("permutation", ia, ib))
    return out


def _multipliers():
    out = []
    for m in "bBaA":
        z = "a" if m.lower() == "b" else "b"
        mi = m.swapcase()
        for mode in MODES:
            image = {"right": z + m, "left": mi + z, "conj": mi + z + m}[mode]
            if z == "a":
                aut = WhiteheadAut("multiplier", image, "b", z, m, mode)
            else:
                aut = WhiteheadAut("multiplier", "a", image, z, m, mode)
            out.append(aut)
    return out


_GENERATING_SET = tuple(_permutations() + _multipliers())
# conj-mode maps are inner on the acted generator's conjugacy class of the
# whole word, so they never change a cyclic word; skip them in hot loops.
_ACTIVE = tuple(
    (aut, aut.images()) for aut in _GENERATING_SET if aut.mode != "conj"
)


def generating_set() -> list[WhiteheadAut]:
    """The fixed 20-element Whitehead generating set of Aut(F(a, b))."""
    return list(_GENERATING_SET)


def beta(sign: int) -> WhiteheadAut:
    """``a -> a b^sign, b -> b``."""
    m = "b" if sign > 0 else "B"
    return next(g for g in _GENERATING_SET if g.multiplier == m and g.mode == "right")


def _image_core(table, text):
    reduced = reduce_letters("".join(table[c] for c in text))
    return cyclic_core_letters(reduced)[1]


def apply(aut: WhiteheadAut, c: CyclicWord) -> CyclicWord:
    return CyclicWord(_image_core(aut.images(), c.letters))


class MinimizeResult(NamedTuple):
    min: CyclicWord
    witness: list


def minimize(c: CyclicWord) -> MinimizeResult:
    """Greedy length descent; the first reducing generator wins each round."""
    text = c.letters
    witness = []
    if len(text) <= 1:
        return MinimizeResult(c, witness)
    while True:
        n = len(text)
        for aut, table in _ACTIVE:
            image = _image_core(table, text)
            if len(image) < n:
                text = image
                witness.append(aut)
                break
        else:
            return MinimizeResult(CyclicWord(text), witness)


def orbit_cap() -> int:
    value = os.environ.get(ORBIT_CAP_ENV)
    return int(value) if value else DEFAULT_ORBIT_CAP


@dataclass(frozen=True)
class OrbitSet:
    members: frozenset
    min_length: int

    def sorted(self) -> list[CyclicWord]:
        return sorted(self.members, key=lambda c: sort_key(c.letters))

    def __len__(self):
        return len(self.members)

    def __contains__(self, c):
        return c in self.members

    def __iter__(self):
        return iter(self.sorted())

    def to_json(self) -> list[str]:
        return [c.letters for c in self.sorted()]


def shortest_orbit_set(c: CyclicWord, cap: Optional[int] = None) -> OrbitSet:
    """All minimal-length cyclic words in the Aut(F(a, b))-orbit of ``c``."""
    if cap is None:
        cap = orbit_cap()
    start = minimize(c).min.letters
    n = len(start)
    limit = cap * max(n, 1)
    seen = {start}
    queue = deque([start])
    while queue:
        text = queue.popleft()
        for aut, table in _ACTIVE:
            image = _image_core(table, text)
            if len(image) != n:
                continue
            key = least_rotation(image)
            if key not in seen:
                seen.add(key)
                if len(seen) > limit:
                    raise CardinalityBlownError(
                        f"orbit set of {c} exceeds {cap} * {n} members"
                    )
                queue.append(key)
    return OrbitSet(frozenset(CyclicWord(t) for t in seen), n)


def is_primitive(w: Word) -> bool:
    if not w:
        raise EmptyWordError("primitivity of the empty word is undefined")
    return len(minimize(CyclicWord.of(w)).min) == 1


_COMMUTATOR = CyclicWord("abAB")
_COMMUTATOR_INV = CyclicWord("baBA")


def commutator_power(w: Word) -> Optional[int]:
    """``k`` if ``w`` is conjugate to ``[a, b]^k`` (``[a, b] = abAB``), else None."""
    core = cyclic_core_letters(w.letters)[1]
    if not core:
        return 0
    p = smallest_period(core)
    root = CyclicWord(core[:p])
    n = len(core) // p
    if root == _COMMUTATOR:
        return n
    if root == _COMMUTATOR_INV:
        return -n
    return None
