"""Interlacement (loop) graph and its complete-multipartite test.

Two loops interlace when their occurrences alternate around the cycle, i.e.
the pair restricts to the crossing pattern "abab".  A diagram passes this
criterion when, after dropping non-interlacing loops, the remaining loop
graph is a single complete multipartite graph with at most three parts.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .words import Word


@dataclass(frozen=True)
class InterlaceGraph:
    """Simple graph on letters; edges are the interlacing pairs."""

    n: int
    edges: frozenset[tuple[int, int]]

    def adjacent(self, x: int, y: int) -> bool:
        return (min(x, y), max(x, y)) in self.edges

    def degree(self, x: int) -> int:
        return sum(1 for e in self.edges if x in e)


@dataclass(frozen=True)
class MultipartiteDecomposition:
    """Partition of the non-isolated letters into mutually complete parts.

    When ``valid``: no edges inside a part, every cross-part pair is an edge
    and there are at most three parts (none, for an edgeless graph).  Parts
    are sorted by smallest member.  When invalid, ``parts`` is empty.
    """

    isolated: tuple[int, ...]
    parts: tuple[tuple[int, ...], ...]
    valid: bool


def interlace_graph(w: Word) -> InterlaceGraph:
    """Build the interlacement graph of a word.

    >>> sorted(interlace_graph(Word((0, 1, 0, 1))).edges)
    [(0, 1)]
    """
    occ = w.occurrences()
    edges = set()
    for x, y in itertools.combinations(range(w.n), 2):
        p1, p2 = occ[x]
        q1, q2 = occ[y]
        if (p1 < q1 < p2) != (p1 < q2 < p2):
            edges.add((x, y))
    return InterlaceGraph(w.n, frozenset(edges))


def decompose_multipartite(w: Word) -> MultipartiteDecomposition:
    """Try to split the loop graph into isolated vertices plus one complete
    multipartite graph with at most three parts.

    Parts are the non-adjacency classes of the non-isolated vertices; the
    split fails when non-adjacency is not transitive there (the graph is not
    complete multipartite) or when more than three classes appear.
    """
    g = interlace_graph(w)
    adj: list[set[int]] = [set() for _ in range(w.n)]
    for x, y in g.edges:
        adj[x].add(y)
        adj[y].add(x)
    isolated = tuple(v for v in range(w.n) if not adj[v])
    active = [v for v in range(w.n) if adj[v]]

    parts: list[list[int]] = []
    for v in active:
        for part in parts:
            if all(u not in adj[v] for u in part):
                part.append(v)
                break
        else:
            parts.append([v])

    # complete multipartite iff every cross-part pair is actually an edge
    for p, q in itertools.combinations(parts, 2):
        for u in p:
            if any(v not in adj[u] for v in q):
                return MultipartiteDecomposition(isolated, (), False)

    if len(parts) > 3:
        return MultipartiteDecomposition(isolated, (), False)
    return MultipartiteDecomposition(isolated, tuple(tuple(p) for p in parts), True)


def is_torus_embeddable_by_loop_graph(w: Word) -> bool:
    """Embeddability criterion: admissible loop-graph shape."""
    return decompose_multipartite(w).valid
