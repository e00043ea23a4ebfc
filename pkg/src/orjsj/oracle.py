"""Brute-force oracles and seeded corpus generators.

Nothing here imports the Whitehead module: the automorphism set is rebuilt
from the textbook ``(A, x)`` definition and applied through the plain word
substitution of :mod:`orjsj.words`, so a bug in the fast path cannot
certify itself.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .errors import BudgetExhaustedError, GenerationError
from .subgroup import XYWord, expand_xy
from .words import (
    ALPHABET,
    CyclicWord,
    Word,
    apply_endo,
    cyclic_reduce,
    exponent_sums,
    free_reduce,
    invert,
)

_INV = {"a": "A", "A": "a", "b": "B", "B": "b"}


def whitehead_maps() -> list[tuple[Word, Word]]:
    """Images ``(phi(a), phi(b))`` of every rank-2 Whitehead automorphism."""
    maps = set()
    # First kind: letter permutations preserving inverses.
    for g1, g2 in itertools.permutations("ab"):
        for s1, s2 in itertools.product((False, True), repeat=2):
            maps.add((g1.upper() if s1 else g1, g2.upper() if s2 else g2))
    # Second kind: (A, x) with x in A and x^-1 not in A.
    for x in ALPHABET:
        others = [c for c in ALPHABET if c not in (x, _INV[x])]
        for k in range(len(others) + 1):
            for extra in itertools.combinations(others, k):
                A = {x, *extra}
                images = []
                for g in "ab":
                    if g in (x, _INV[x]):
                        images.append(g)
                        continue
                    img = g
                    if g in A:
                        img = img + x
                    if _INV[g] in A:
                        img = _INV[x] + img
                    images.append(img)
                maps.add(tuple(images))
    return sorted(maps)


_MAPS = [(Word(a), Word(b)) for a, b in whitehead_maps()]


def neighbours(c: CyclicWord) -> Iterator[CyclicWord]:
    w = c.word()
    for ia, ib in _MAPS:
        yield cyclic_reduce(apply_endo(w, ia, ib))[1]


@dataclass(frozen=True)
class OrbitBfsResult:
    reachable: frozenset
    min_length: int
    layer_sizes: tuple

    @property
    def minimal(self) -> frozenset:
        return frozenset(c for c in self.reachable if len(c) == self.min_length)


def bfs_orbit(start: CyclicWord, length_cap: int, node_cap: int = 2_000_000) -> OrbitBfsResult:
    """Everything reachable from ``start`` without exceeding ``length_cap``."""
    if length_cap < len(start):
        raise ValueError("length_cap must be at least the start length")
    seen = {start}
    layer = [start]
    sizes = []
    while layer:
        sizes.append(len(layer))
        nxt = []
        for c in layer:
            for d in neighbours(c):
                if len(d) <= length_cap and d not in seen:
                    seen.add(d)
                    if len(seen) > node_cap:
                        raise BudgetExhaustedError(
                            f"bfs from {start} passed {node_cap} nodes"
                        )
                    nxt.append(d)
        layer = nxt
    return OrbitBfsResult(frozenset(seen), min(len(c) for c in seen), tuple(sizes))


def enumerate_cyclic_words(length: int) -> Iterator[CyclicWord]:
    """Each conjugacy class of cyclically reduced words of this length, once."""
    if length < 1:
        return
    stack = [c for c in reversed(ALPHABET)]
    while stack:
        w = stack.pop()
        if len(w) == length:
            if len(w) == 1 or _INV[w[0]] != w[-1]:
                c = CyclicWord(w)
                if c.letters == w:
                    yield c
            continue
        for ch in reversed(ALPHABET):
            if ch != _INV[w[-1]]:
                stack.append(w + ch)


def random_xy_word(rng: random.Random, syllables: int, max_power: int = 3) -> XYWord:
    gen = rng.choice("xy")
    parts = []
    for _ in range(syllables):
        e = rng.choice([k for k in range(-max_power, max_power + 1) if k])
        parts.append((gen if e > 0 else gen.upper()) * abs(e))
        gen = "y" if gen == "x" else "x"
    return XYWord("".join(parts))


def random_subgroup_word(seed, syllables: int, max_power: int = 3) -> Word:
    """A random element of <a, b^-1 a b> with the given xy-syllable count."""
    if syllables < 1:
        raise ValueError("need at least one syllable")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return expand_xy(random_xy_word(rng, syllables, max_power))


def random_cyclic_word(rng: random.Random, length: int) -> str:
    while True:
        w = [rng.choice(ALPHABET)]
        while len(w) < length:
            ch = rng.choice(ALPHABET)
            if ch != _INV[w[-1]]:
                w.append(ch)
        if length == 1 or _INV[w[0]] != w[-1]:
            return "".join(w)


def random_derived_word(seed, length: int, retries: int = 100_000) -> Word:
    """Random cyclically reduced word of exact length with zero exponent sums."""
    if length < 4 or length % 2:
        raise ValueError("length must be even and at least 4")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    for _ in range(retries):
        w = Word(random_cyclic_word(rng, length))
        if exponent_sums(w).is_zero:
            return w
    raise GenerationError(f"no derived word of length {length} after {retries} tries")


def random_automorphism(rng: random.Random, steps: int) -> tuple[Word, Word]:
    """Images of a, b under a random product of elementary Nielsen moves."""
    ia, ib = Word("a"), Word("b")
    moves = [(Word(a), Word(b)) for a, b in whitehead_maps()]
    for _ in range(steps):
        ma, mb = rng.choice(moves)
        ia, ib = apply_endo(ma, ia, ib), apply_endo(mb, ia, ib)
    return ia, ib


def apply_automorphism(w: Word, images: tuple[Word, Word]) -> Word:
    return apply_endo(w, *images)


def derived_subgroup_word(rng: random.Random, syllables: int, max_power: int = 3) -> Word:
    """A subgroup element with zero a-exponent, so it lies in F(a, b)'."""
    while True:
        t = random_xy_word(rng, syllables, max_power)
        w = expand_xy(t)
        e = exponent_sums(w).e_a
        if e == 0 and w:
            return w
        # Absorb the imbalance into a trailing x-syllable when that keeps it reduced.
        fix = ("X" if e > 0 else "x") * abs(e)
        if not t.letters or t.letters[-1].lower() != "x":
            w = expand_xy(XYWord(t.letters + fix))
            if w and exponent_sums(w).is_zero:
                return w


def theorem_a_corpus(seed: int, count: int, min_len: int = 4, max_len: int = 40) -> list[Word]:
    """Seeded relators in F(a, b)' with cyclic length in [min_len, max_len].

    Two thirds are uniformly random derived words; the rest are images of
    subgroup words under random automorphisms, so segment polytopes occur.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        if len(out) % 3 != 2:
            n = rng.randrange(min_len, max_len + 1, 2)
            out.append(random_derived_word(rng, n))
            continue
        w = derived_subgroup_word(rng, rng.randint(2, 6))
        w = apply_automorphism(w, random_automorphism(rng, rng.randint(0, 3)))
        core = cyclic_reduce(w)[1]
        if min_len <= len(core) <= max_len:
            # Random conjugator keeps non-cyclically-reduced inputs in play.
            u = free_reduce(random_cyclic_word(rng, rng.randint(1, 3)))
            out.append(free_reduce((u * core.word() * invert(u)).letters))
    return out


def exhaustive_agreement(max_length: int, minimize_fn) -> dict:
    """Compare ``minimize_fn`` against BFS minima over all short cyclic words.

    BFS from a word of length L with cap L reaches the same component for
    every length-L word in it, so one search settles all of them.
    """
    checked = 0
    searches = 0
    disagreements = []
    for L in range(1, max_length + 1):
        known: dict = {}
        for c in enumerate_cyclic_words(L):
            if c not in known:
                res = bfs_orbit(c, L)
                searches += 1
                for d in res.reachable:
                    if len(d) == L:
                        known[d] = res.min_length
            checked += 1
            got = len(minimize_fn(c))
            if got != known[c]:
                disagreements.append({"word": c.letters, "oracle": known[c], "minimize": got})
    return {
        "max_length": max_length,
        "checked": checked,
        "bfs_searches": searches,
        "disagreements": disagreements,
    }
