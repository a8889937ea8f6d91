"""Genus of the ribbon surface spanned by a diagram, via boundary tracing.

Attaching an untwisted band to a disk for each letter, in the cyclic order
given by the word, produces a surface whose boundary splits into circles.
Tracing those circles counts them; capping each with a disk gives a closed
orientable surface whose genus decides torus embeddability.
"""
from __future__ import annotations

from dataclasses import dataclass

from .words import Word, to_pairing


class ParityViolationError(RuntimeError):
    """Boundary count with impossible parity; indicates a tracing bug."""


@dataclass(frozen=True)
class BoundaryTrace:
    """Boundary circles as orbits of the successor-after-partner permutation.

    Orbits partition the word positions; each is listed in traversal order
    starting from its smallest member.  The empty word has no positions but
    one boundary circle (the bare disk), so ``count`` may exceed
    ``len(orbits)`` only in that case.
    """

    orbits: tuple[tuple[int, ...], ...]
    count: int


@dataclass(frozen=True)
class GenusReport:
    loops: int
    boundary_circles: int
    genus: int
    torus_embeddable: bool


def boundary_components(w: Word) -> BoundaryTrace:
    """Trace the boundary circles of the disk-with-bands surface.

    Follows positions under p -> partner(p) + 1 (cyclically); each orbit of
    this permutation walks once around one boundary circle.

    >>> boundary_components(Word((0, 1, 2, 0, 1, 2))).count
    2
    """
    m = len(w.symbols)
    if m == 0:
        return BoundaryTrace((), 1)  # bare disk
    partner = to_pairing(w)
    seen = [False] * m
    orbits = []
    for start in range(m):
        if seen[start]:
            continue
        orbit = []
        p = start
        while not seen[p]:
            seen[p] = True
            orbit.append(p)
            p = (partner[p] + 1) % m
        orbits.append(tuple(orbit))
    return BoundaryTrace(tuple(orbits), len(orbits))


def genus_report(w: Word) -> GenusReport:
    """Genus of the closed surface obtained by capping all boundary circles.

    With one vertex, n bands and F boundary circles the Euler count gives
    2g = n + 1 - F exactly for the capped surface.
    """
    n = w.n
    F = boundary_components(w).count
    if (n + 1 - F) % 2 or F > n + 1:
        raise ParityViolationError(f"impossible boundary count F={F} for n={n}")
    g = (n + 1 - F) // 2
    return GenusReport(loops=n, boundary_circles=F, genus=g, torus_embeddable=g <= 1)


def is_torus_embeddable_by_genus(w: Word) -> bool:
    """Embeddability criterion: the spanned surface has genus at most 1."""
    return genus_report(w).torus_embeddable
