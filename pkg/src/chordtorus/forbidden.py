"""Forbidden sub-diagram check.

A diagram fails this criterion exactly when some four of its letters induce
one of four specific genus-2 diagrams on eight positions.  Containment is
induced: restrict to a letter subset, then compare up to renaming, rotation
and reversal.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .words import Word, canonical_symbols, parse_word, restrict

FORBIDDEN_PATTERNS: tuple[Word, ...] = (
    parse_word("ababcdcd"),
    parse_word("abcdabcd"),
    parse_word("abacdcbd"),
    parse_word("abcadbdc"),
)


@dataclass(frozen=True)
class ForbiddenSet:
    """The four base patterns and their canonical forms.

    The canonical map is keyed with reflection included; the four patterns
    are pairwise inequivalent and each is equivalent to its own reversal, so
    the closure has exactly four members either way.
    """

    patterns: tuple[Word, ...]
    closure: frozenset[tuple[int, ...]]
    by_canonical: dict[tuple[int, ...], Word]


@lru_cache(maxsize=None)
def forbidden_closure(include_reflection: bool = True) -> ForbiddenSet:
    """Canonical forms of the four forbidden patterns, computed once."""
    by_canonical = {
        canonical_symbols(p.symbols, include_reflection): p
        for p in FORBIDDEN_PATTERNS
    }
    return ForbiddenSet(FORBIDDEN_PATTERNS, frozenset(by_canonical), by_canonical)


@dataclass(frozen=True)
class Witness:
    """A four-letter subset whose restriction is a forbidden pattern."""

    letters: tuple[int, int, int, int]
    pattern: Word


def find_witness(w: Word, include_reflection: bool = True) -> Witness | None:
    """First four-letter subset (in lexicographic order) inducing a forbidden
    pattern, or None.  Vacuously None for fewer than four letters.
    """
    if w.n < 4:
        return None
    fs = forbidden_closure(include_reflection)
    for subset in itertools.combinations(range(w.n), 4):
        c = canonical_symbols(restrict(w, subset).symbols, include_reflection)
        hit = fs.by_canonical.get(c)
        if hit is not None:
            return Witness(subset, hit)
    return None


def is_torus_embeddable_by_patterns(w: Word, include_reflection: bool = True) -> bool:
    """Embeddability criterion: no four letters induce a forbidden pattern."""
    return find_witness(w, include_reflection) is None
