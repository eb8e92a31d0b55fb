"""Ultimately periodic words (lassos) and their canonical forms."""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class LassoWord:
    """The word stem . loop^w; the loop must be nonempty."""

    stem: tuple[str, ...]
    loop: tuple[str, ...]

    def __post_init__(self):
        if not self.loop:
            raise ValueError("lasso loop must be nonempty")

    def letter(self, i: int) -> str:
        if i < len(self.stem):
            return self.stem[i]
        return self.loop[(i - len(self.stem)) % len(self.loop)]

    def prefix(self, length: int) -> tuple[str, ...]:
        return tuple(self.letter(i) for i in range(length))

    def __str__(self):
        return f"{''.join(self.stem)};{''.join(self.loop)}"


def lasso(stem, loop) -> LassoWord:
    """Build a LassoWord from strings or letter sequences."""
    return LassoWord(tuple(stem), tuple(loop))


def _primitive_root(loop: tuple[str, ...]) -> tuple[str, ...]:
    for k in range(1, len(loop) + 1):
        if len(loop) % k == 0 and loop == loop[:k] * (len(loop) // k):
            return loop[:k]
    return loop


def canonical_lasso(w: LassoWord) -> LassoWord:
    """Unique representation of the denoted word: shortest stem, primitive loop.

    The loop is first reduced to its primitive root, then trailing stem
    letters that coincide with the loop's last letter are absorbed into the
    loop by rotating it.  Two lassos denote the same word exactly when their
    canonical forms are equal, which fixes the loop's phase; no further
    rotation is applied.
    """
    stem = w.stem
    loop = _primitive_root(w.loop)
    while stem and stem[-1] == loop[-1]:
        stem = stem[:-1]
        loop = loop[-1:] + loop[:-1]
    return LassoWord(stem, loop)


def enumerate_lassos(alphabet, max_stem: int, max_loop: int) -> list[LassoWord]:
    """All distinct lasso words with the given stem/loop length bounds.

    Enumeration is deterministic (length-lexicographic over the sorted
    alphabet) and each denoted word appears exactly once, in canonical form.
    """
    letters = sorted(alphabet)
    seen = set()
    out = []
    for stem_len in range(max_stem + 1):
        for loop_len in range(1, max_loop + 1):
            for stem in itertools.product(letters, repeat=stem_len):
                for loop in itertools.product(letters, repeat=loop_len):
                    w = canonical_lasso(LassoWord(stem, loop))
                    if w not in seen:
                        seen.add(w)
                        out.append(w)
    return out
