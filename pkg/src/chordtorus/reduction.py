"""Loop reductions and the linear-time residual computation.

Two moves shrink a diagram without changing the surface it spans:

* alpha — delete a loop whose two occurrences are cyclically adjacent;
* beta  — two loops x, y sitting as adjacent pairs "xy" and "yx" elsewhere
  are parallel; merge them by deleting both occurrences of one.

A word is a residual when no move applies anywhere cyclically.  Torus
embeddability is equivalent to the residual being the empty word, the
crossing pair "abab" or the triple crossing "abcabc"; the residual is
computable in amortized O(n) time.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .words import (
    BoundExceededError,
    Word,
    WordError,
    canonical_symbols,
    to_pairing,
    word_from_raw,
)


class NotApplicableError(WordError):
    """The requested reduction move does not apply at the given site."""


@dataclass(frozen=True)
class ReductionStep:
    """One applied move; positions index the word the step was applied to."""

    kind: str  # "alpha" | "beta"
    letters: tuple[int, ...]  # the removed letter
    positions: tuple[int, int]  # the two removed positions


@dataclass(frozen=True)
class ReductionTrace:
    """Steps applied by the reducer, the residual word, and the number of
    adjacency examinations performed (the linearity work counter)."""

    steps: tuple[ReductionStep, ...]
    residual: Word
    work: int


class ResidualClass(enum.Enum):
    EMPTY = "empty"
    ABAB = "abab"
    ABCABC = "abcabc"
    OTHER = "other"


_TORUS_RESIDUALS = {ResidualClass.EMPTY, ResidualClass.ABAB, ResidualClass.ABCABC}
_ABAB = (0, 1, 0, 1)
_ABCABC = (0, 1, 2, 0, 1, 2)


def alpha_applicable(w: Word, pos: int) -> bool:
    m = len(w.symbols)
    return m > 0 and w.symbols[pos] == w.symbols[(pos + 1) % m]


def apply_alpha(w: Word, pos: int) -> Word:
    """Delete the isolated loop whose occurrences are positions pos, pos+1.

    >>> str(apply_alpha(Word((0, 0, 1, 1)), 0))
    'aa'
    """
    m = len(w.symbols)
    if m == 0 or w.symbols[pos] != w.symbols[(pos + 1) % m]:
        raise NotApplicableError(f"no adjacent equal pair at position {pos}")
    drop = {pos, (pos + 1) % m}
    return word_from_raw(s for i, s in enumerate(w.symbols) if i not in drop)


def _beta_site(symbols: tuple[int, ...], partner: tuple[int, ...], p: int) -> bool:
    """Whether positions (p, p+1) start a parallel pair "xy ... yx"."""
    m = len(symbols)
    q = (p + 1) % m
    return symbols[p] != symbols[q] and partner[p] == (partner[q] + 1) % m


def apply_beta(w: Word, x: int, y: int) -> Word:
    """Merge the parallel loops x, y (adjacent as "xy" and "yx"), deleting
    the inner letter y.

    >>> str(apply_beta(Word((0, 1, 1, 0)), 0, 1))
    'aa'
    """
    occ = w.occurrences()
    if not (0 <= x < w.n and 0 <= y < w.n) or x == y:
        raise NotApplicableError(f"bad letter pair ({x}, {y})")
    m = len(w.symbols)
    partner = to_pairing(w)
    for p in occ[x]:
        q = (p + 1) % m
        if w.symbols[q] == y and _beta_site(w.symbols, partner, p):
            drop = {q, partner[q]}
            return word_from_raw(s for i, s in enumerate(w.symbols) if i not in drop)
    raise NotApplicableError(f"letters {x}, {y} are not a parallel pair")


def enumerate_steps(w: Word) -> list[tuple]:
    """All applicable moves, as ("alpha", pos) and ("beta", x, y) tuples.

    A parallel pair shows up twice, once per direction, matching the two
    choices of which loop survives.
    """
    m = len(w.symbols)
    if m == 0:
        return []
    partner = to_pairing(w)
    steps: list[tuple] = []
    for p in range(m):
        q = (p + 1) % m
        if q == p:
            continue
        if w.symbols[p] == w.symbols[q]:
            steps.append(("alpha", p))
        elif _beta_site(w.symbols, partner, p):
            steps.append(("beta", w.symbols[p], w.symbols[q]))
    return steps


def apply_step(w: Word, step: tuple) -> Word:
    if step[0] == "alpha":
        return apply_alpha(w, step[1])
    return apply_beta(w, step[1], step[2])


def find_applicable_step(w: Word) -> tuple | None:
    """Full-scan check that a word is a residual (None when irreducible)."""
    steps = enumerate_steps(w)
    return steps[0] if steps else None


def fully_reduce_linear(w: Word) -> ReductionTrace:
    """Apply moves until none is left, in amortized O(n) total work.

    Positions live on a circular doubly-linked list with partner pointers.
    Every adjacency is examined once from a work queue; a deletion splices
    the list in O(1) and re-enqueues only the adjacencies it created, whose
    examination also catches any parallel pair completed elsewhere by the
    splice (the pair's mirror adjacency is the seam itself).  Recorded step
    positions refer to the input word.
    """
    sym = w.symbols
    m = len(sym)
    if m == 0:
        return ReductionTrace((), w, 0)

    nxt = list(range(1, m))
    nxt.append(0)
    prv = [m - 1]
    prv.extend(range(m - 1))
    partner = [0] * m
    first = [-1] * (m // 2)
    for i, s in enumerate(sym):
        f = first[s]
        if f < 0:
            first[s] = i
        else:
            partner[i] = f
            partner[f] = i

    alive = [True] * m
    alive_count = m
    steps: list[ReductionStep] = []
    work = 0
    seam: list[int] = []  # adjacencies created by deletions, examined first
    sweep = 0  # next position of the initial full sweep

    while alive_count:
        if seam:
            p = seam.pop()
        else:
            p = sweep
            if p == m:
                break
            sweep += 1
        work += 1
        if not alive[p]:
            continue
        q = nxt[p]
        sp = sym[p]
        if sp == sym[q]:
            # isolated loop: splice out the adjacent pair (p, q)
            steps.append(ReductionStep("alpha", (sp,), (p, q)))
            l, r = prv[p], nxt[q]
            nxt[l] = r
            prv[r] = l
            alive[p] = alive[q] = False
            alive_count -= 2
            if alive[l]:
                seam.append(l)
        else:
            pq = partner[q]
            if partner[p] == nxt[pq]:
                # parallel pair: drop both occurrences of the inner letter
                steps.append(ReductionStep("beta", (sym[q],), (q, pq)))
                r = nxt[q]
                nxt[p] = r
                prv[r] = p
                alive[q] = False
                l2, r2 = prv[pq], nxt[pq]
                nxt[l2] = r2
                prv[r2] = l2
                alive[pq] = False
                alive_count -= 2
                seam.append(p)
                if alive[l2]:
                    seam.append(l2)

    if not steps:
        residual = w
    elif alive_count:
        # survivors keep their cyclic order; relabel densely
        mapping = [-1] * (m // 2)
        fresh = 0
        rest = []
        for s, a in zip(sym, alive):
            if a:
                t = mapping[s]
                if t < 0:
                    t = mapping[s] = fresh
                    fresh += 1
                rest.append(t)
        residual = Word(tuple(rest))
    else:
        residual = Word(())
    return ReductionTrace(tuple(steps), residual, work)


def classify_residual(w: Word) -> ResidualClass:
    """Class of a residual word; meaningful for arbitrary words too.

    >>> classify_residual(Word((1, 0, 1, 0) if False else (0, 1, 0, 1)))
    <ResidualClass.ABAB: 'abab'>
    """
    if w.n == 0:
        return ResidualClass.EMPTY
    if w.n == 2 and canonical_symbols(w.symbols) == _ABAB:
        return ResidualClass.ABAB
    if w.n == 3 and canonical_symbols(w.symbols) == _ABCABC:
        return ResidualClass.ABCABC
    return ResidualClass.OTHER


def is_torus_embeddable_by_reduction(w: Word) -> bool:
    """Embeddability criterion: the residual is (), "abab" or "abcabc"."""
    return classify_residual(fully_reduce_linear(w).residual) in _TORUS_RESIDUALS


DEFAULT_ORACLE_BOUND = 6


def oracle_reduce_all(w: Word, max_n: int = DEFAULT_ORACLE_BOUND) -> frozenset[Word]:
    """Every residual reachable by any move sequence, up to equivalence.

    Exhaustive search over all applicable moves, memoized on canonical
    forms; the independent check that the greedy reducer's move order does
    not matter.  Returns canonical residual words.
    """
    if w.n > max_n:
        raise BoundExceededError(f"n={w.n} exceeds the oracle bound {max_n}")
    start = Word(canonical_symbols(w.symbols))
    seen = {start.symbols}
    stack = [start]
    residuals: set[Word] = set()
    while stack:
        cur = stack.pop()
        steps = enumerate_steps(cur)
        if not steps:
            residuals.add(cur)
            continue
        for step in steps:
            c = canonical_symbols(apply_step(cur, step).symbols)
            if c not in seen:
                seen.add(c)
                stack.append(Word(c))
    return frozenset(residuals)


def reduce_one_pass_noncyclic(w: Word) -> Word:
    """Literal single sweep that never wraps around the seam.

    Appends symbols left to right, doing at most one move per appended
    symbol: cancel an adjacent equal pair, or cancel against an existing
    adjacency "x a" when the sequence ends with "a" and "x" arrives.  The
    result can still admit cyclic moves across the seam; the validation
    harness compares it against the cyclic reducer.
    """
    sym = w.symbols
    m = len(sym)
    if m == 0:
        return w
    right = [-1] * m  # linked list over appended, surviving positions
    left = [-1] * m
    pairs: dict[tuple[int, int], set[int]] = {}  # (u, v) -> left positions of "uv"

    def add_pair(a: int, b: int) -> None:
        pairs.setdefault((sym[a], sym[b]), set()).add(a)

    def del_pair(a: int, b: int) -> None:
        s = pairs.get((sym[a], sym[b]))
        if s is not None:
            s.discard(a)

    def unlink(u: int) -> None:
        l, r = left[u], right[u]
        if l >= 0:
            del_pair(l, u)
        if r >= 0:
            del_pair(u, r)
        if l >= 0:
            right[l] = r
        if r >= 0:
            left[r] = l
        if l >= 0 and r >= 0:
            add_pair(l, r)

    last = -1
    head = -1
    for i, x in enumerate(sym):
        if last >= 0 and sym[last] == x:
            # both occurrences meet at the end: drop the loop, skip the append
            new_last = left[last]
            unlink(last)
            last = new_last
            if last < 0:
                head = -1
            continue
        if last >= 0:
            a = sym[last]
            for p in pairs.get((x, a), ()):
                inner_a = right[p]
                if inner_a == last:
                    continue  # the "xa" is the very end itself: crossing, not parallel
                # "xa" inside, "ax" forming at the end: cancel both occurrences of a
                old_last = last
                unlink(inner_a)
                last = left[old_last]
                unlink(old_last)
                break
        left[i] = last
        right[i] = -1
        if last >= 0:
            right[last] = i
            add_pair(last, i)
        else:
            head = i
        last = i

    out = []
    p = head
    while p >= 0:
        out.append(sym[p])
        p = right[p]
    return word_from_raw(out)
