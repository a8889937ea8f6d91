"""Cyclic double-occurrence words: the encoding of one-vertex rotation systems.

A word of length 2n over n letters, each letter appearing exactly twice,
describes a single vertex with n loops and a prescribed cyclic order of the
2n loop-ends.  Words are considered up to letter renaming, cyclic rotation
and (optionally) reversal.  Letters are dense integer ids, numbered by first
occurrence, so two words that differ only by renaming are the same object.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator


class WordError(ValueError):
    """Invalid double-occurrence word or word text."""


class OddLengthError(WordError):
    """Token count is odd."""


class BadMultiplicityError(WordError):
    """Some letter does not occur exactly twice."""


class BadTokenError(WordError):
    """Unparseable token in word text."""


class UnknownLetterError(WordError):
    """A restriction mentions a letter absent from the word."""


class BoundExceededError(WordError):
    """Requested size exceeds the configured enumeration/search bound."""


def relabel_first_occurrence(seq: Iterable) -> tuple[int, ...]:
    """Map arbitrary hashable letters to dense ids in first-occurrence order.

    >>> relabel_first_occurrence("baba")
    (0, 1, 0, 1)
    """
    mapping: dict = {}
    out = []
    for s in seq:
        v = mapping.get(s)
        if v is None:
            v = mapping[s] = len(mapping)
        out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A validated double-occurrence word with first-occurrence letter ids.

    The empty word ``Word(())`` is valid and denotes the loopless diagram.
    Position arithmetic is cyclic: position ``2n - 1`` is adjacent to 0.
    """

    symbols: tuple[int, ...] = ()

    def __post_init__(self):
        sym = tuple(self.symbols)
        object.__setattr__(self, "symbols", sym)
        if len(sym) % 2:
            raise OddLengthError(f"word length {len(sym)} is odd")
        half = len(sym) // 2
        counts = [0] * half
        fresh = 0
        try:
            for s in sym:
                if s == fresh:
                    fresh += 1
                elif not 0 <= s < fresh:
                    raise WordError("letters must be dense ids in first-occurrence order")
                counts[s] += 1
        except TypeError:
            raise WordError("letters must be integers") from None
        except IndexError:
            raise BadMultiplicityError("more distinct letters than positions allow") from None
        bad = [i for i, c in enumerate(counts) if c != 2]
        if bad:
            raise BadMultiplicityError(f"letters {bad} do not occur exactly twice")

    @property
    def n(self) -> int:
        """Number of loops (distinct letters)."""
        return len(self.symbols) // 2

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return format_word(self)

    def letters(self) -> range:
        return range(self.n)

    def occurrences(self) -> tuple[tuple[int, int], ...]:
        """For each letter, its two positions in increasing order."""
        first: dict[int, int] = {}
        out: list[tuple[int, int]] = [(-1, -1)] * self.n
        for i, s in enumerate(self.symbols):
            if s in first:
                out[s] = (first[s], i)
            else:
                first[s] = i
        return tuple(out)


def word_from_raw(seq: Iterable) -> Word:
    """Build a word from any letter sequence, relabeling densely."""
    return Word(relabel_first_occurrence(seq))


def parse_word(text: str) -> Word:
    """Parse word text: lowercase ASCII letters, or comma-separated integers.

    The empty string parses to the empty word.  Letters are relabeled to
    dense ids in first-occurrence order.

    >>> parse_word("abab").symbols
    (0, 1, 0, 1)
    >>> parse_word("0,1,0,1").symbols
    (0, 1, 0, 1)
    """
    s = text.strip()
    if not s:
        return Word(())
    if "," in s or any(c.isdigit() for c in s):
        tokens = []
        for tok in s.split(","):
            tok = tok.strip()
            if not tok.isdigit():
                raise BadTokenError(f"bad integer token {tok!r}")
            tokens.append(int(tok))
    else:
        for c in s:
            if not ("a" <= c <= "z"):
                raise BadTokenError(f"bad letter {c!r} (expected a-z)")
        tokens = list(s)
    if len(tokens) % 2:
        raise OddLengthError(f"word has {len(tokens)} tokens, expected an even count")
    counts: dict = {}
    for t in tokens:
        counts[t] = counts.get(t, 0) + 1
    bad = sorted(str(t) for t, c in counts.items() if c != 2)
    if bad:
        raise BadMultiplicityError(f"tokens {bad} do not occur exactly twice")
    return word_from_raw(tokens)


def letter_name(letter: int) -> str:
    """Display name of a letter id: a-z when possible, decimal otherwise."""
    return chr(ord("a") + letter) if letter < 26 else str(letter)


def format_word(w: Word) -> str:
    """Inverse of parse_word on normalized words.

    Uses the ASCII format for up to 26 letters, comma-separated ids beyond.
    """
    if w.n > 26:
        return ",".join(str(s) for s in w.symbols)
    return "".join(letter_name(s) for s in w.symbols)


def to_pairing(w: Word) -> tuple[int, ...]:
    """Partner array: ``partner[p]`` is the other position of the letter at p.

    A fixed-point-free involution on positions; the chord-diagram view.
    """
    first: dict[int, int] = {}
    partner = [0] * len(w.symbols)
    for i, s in enumerate(w.symbols):
        if s in first:
            partner[i] = first[s]
            partner[first[s]] = i
        else:
            first[s] = i
    return tuple(partner)


def rotate(w: Word, k: int) -> Word:
    """The word read starting k positions later (relabeled)."""
    m = len(w.symbols)
    if m == 0:
        return w
    k %= m
    return word_from_raw(w.symbols[k:] + w.symbols[:k])


def reverse(w: Word) -> Word:
    """The word read in the opposite direction (relabeled)."""
    return word_from_raw(w.symbols[::-1])


def restrict(w: Word, keep: Iterable[int]) -> Word:
    """Sub-diagram induced by a letter subset.

    Keeps the occurrences of the chosen letters in their original cyclic
    order (starting from the smallest kept position) and relabels densely.

    >>> str(restrict(parse_word("ababcdcd"), {0, 1}))
    'abab'
    """
    keep = set(keep)
    unknown = keep - set(range(w.n))
    if unknown:
        raise UnknownLetterError(f"letters {sorted(unknown)} not in word")
    return word_from_raw(s for s in w.symbols if s in keep)


def canonical_symbols(symbols: tuple[int, ...], include_reflection: bool = True) -> tuple[int, ...]:
    """Lexicographically minimal relabeled rotation (and reversal) of symbols.

    The symbol tuple must use dense letter ids.
    """
    m = len(symbols)
    if m == 0:
        return ()
    nl = m // 2
    best: tuple[int, ...] | None = None
    variants = (symbols, symbols[::-1]) if include_reflection else (symbols,)
    for v in variants:
        doubled = v + v
        for i in range(m):
            mapping = [-1] * nl
            fresh = 0
            cand = []
            for s in doubled[i:i + m]:
                t = mapping[s]
                if t < 0:
                    t = mapping[s] = fresh
                    fresh += 1
                cand.append(t)
            c = tuple(cand)
            if best is None or c < best:
                best = c
    assert best is not None
    return best


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical representative of a word's symmetry class.

    Canonicalizing a canonical form returns itself; two words are related by
    renaming + rotation (+ reversal when ``reflection_included``) iff their
    canonical forms are equal.
    """

    word: Word
    reflection_included: bool


def canonical_form(w: Word, include_reflection: bool = True) -> CanonicalForm:
    """Deterministic canonical form under rotation, relabeling and reversal."""
    return CanonicalForm(Word(canonical_symbols(w.symbols, include_reflection)),
                         include_reflection)


def equivalent(w1: Word, w2: Word, include_reflection: bool = True) -> bool:
    """Whether two words encode the same diagram up to symmetry.

    >>> equivalent(parse_word("abab"), parse_word("baba"))
    True
    >>> equivalent(parse_word("abab"), parse_word("aabb"))
    False
    """
    return (canonical_symbols(w1.symbols, include_reflection)
            == canonical_symbols(w2.symbols, include_reflection))


DEFAULT_ENUMERATION_BOUND = 8


def enumerate_diagrams(n: int, dedupe: bool = False,
                       max_n: int = DEFAULT_ENUMERATION_BOUND) -> Iterator[Word]:
    """All perfect matchings of 2n positions as words, in a fixed order.

    Without dedupe, yields exactly (2n-1)!! distinct words; with dedupe,
    yields the first representative of each symmetry class encountered.
    """
    if n < 0:
        raise WordError(f"n must be non-negative, got {n}")
    if n > max_n:
        raise BoundExceededError(f"n={n} exceeds the bound {max_n}")
    seen: set[tuple[int, ...]] = set()

    def emit(sym: list[int]) -> Iterator[Word]:
        w = Word(tuple(sym))
        if dedupe:
            c = canonical_symbols(w.symbols)
            if c in seen:
                return
            seen.add(c)
        yield w

    m = 2 * n
    sym = [-1] * m

    def fill(letter: int) -> Iterator[Word]:
        try:
            a = sym.index(-1)
        except ValueError:
            yield from emit(sym)
            return
        sym[a] = letter
        for b in range(a + 1, m):
            if sym[b] < 0:
                sym[b] = letter
                yield from fill(letter + 1)
                sym[b] = -1
        sym[a] = -1

    yield from fill(0)


def random_word(n: int, rng: random.Random) -> Word:
    """Uniformly random diagram: shuffle 2n positions and pair consecutively."""
    positions = list(range(2 * n))
    rng.shuffle(positions)
    sym = [0] * (2 * n)
    for k in range(n):
        sym[positions[2 * k]] = k
        sym[positions[2 * k + 1]] = k
    return word_from_raw(sym)


def insert_letter(w: Word, i: int, j: int) -> Word:
    """Superword with one extra letter occupying new positions i < j.

    Used to probe monotonicity of containment checks.
    """
    m = len(w.symbols) + 2
    if not (0 <= i < j < m):
        raise WordError(f"insertion slots ({i}, {j}) out of range for length {m}")
    fresh = w.n
    out = []
    it = iter(w.symbols)
    for p in range(m):
        out.append(fresh if p in (i, j) else next(it))
    return word_from_raw(out)


def concat_disjoint(w1: Word, w2: Word) -> Word:
    """Concatenation on disjoint alphabets, without interleaving."""
    return Word(w1.symbols + tuple(s + w1.n for s in w2.symbols))


def all_letter_subsets(w: Word, size: int) -> Iterator[tuple[int, ...]]:
    return itertools.combinations(range(w.n), size)
