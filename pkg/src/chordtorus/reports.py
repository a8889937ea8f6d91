"""Aggregated verdicts: run the four embeddability checkers and compare them.

The four criteria (surface genus, forbidden sub-diagrams, loop-graph shape,
reduction residual) are provably equivalent; the report machinery runs any
subset, records per-checker timings and flags any disagreement, which would
indicate an implementation bug.
"""
from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field

from . import genus as genus_mod
from .forbidden import Witness, find_witness
from .interlace import MultipartiteDecomposition, decompose_multipartite
from .reduction import (
    ReductionTrace,
    ResidualClass,
    classify_residual,
    fully_reduce_linear,
)
from .words import (
    Word,
    canonical_form,
    enumerate_diagrams,
    format_word,
    letter_name,
    random_word,
)

CHECKER_NAMES = ("genus", "forbidden", "loop_graph", "reduction")


@dataclass(frozen=True)
class ClassificationReport:
    """Everything the checkers say about one word."""

    given: str
    word: Word
    canonical: Word
    loops: int
    boundary_circles: int
    genus: int
    checks: dict[str, bool]
    agreement: bool
    torus_embeddable: bool
    residual_class: ResidualClass
    residual: Word
    decomposition: MultipartiteDecomposition | None
    witness: Witness | None
    timings: dict[str, float] = field(default_factory=dict)


def classify_word(w: Word, given: str | None = None, include_reflection: bool = True,
                  fast: bool = False) -> ClassificationReport:
    """Run the checkers on one word.

    ``fast`` runs only the linear reduction checker and skips the quadratic
    and quartic work (canonical form, loop graph, forbidden scan), so giant
    words stay cheap.
    """
    timings: dict[str, float] = {}
    checks: dict[str, bool] = {}

    t0 = time.perf_counter()
    trace = fully_reduce_linear(w)
    residual_class = classify_residual(trace.residual)
    checks["reduction"] = residual_class is not ResidualClass.OTHER
    timings["reduction"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    gr = genus_mod.genus_report(w)
    genus_elapsed = time.perf_counter() - t0

    witness = None
    decomposition = None
    canonical = w
    if not fast:
        checks["genus"] = gr.torus_embeddable
        timings["genus"] = genus_elapsed

        t0 = time.perf_counter()
        witness = find_witness(w, include_reflection)
        checks["forbidden"] = witness is None
        timings["forbidden"] = time.perf_counter() - t0

        t0 = time.perf_counter()
        decomposition = decompose_multipartite(w)
        checks["loop_graph"] = decomposition.valid
        timings["loop_graph"] = time.perf_counter() - t0

        canonical = canonical_form(w, include_reflection).word

    verdicts = set(checks.values())
    return ClassificationReport(
        given=format_word(w) if given is None else given,
        word=w,
        canonical=canonical,
        loops=w.n,
        boundary_circles=gr.boundary_circles,
        genus=gr.genus,
        checks=checks,
        agreement=len(verdicts) == 1,
        torus_embeddable=checks.get("genus", checks["reduction"]),
        residual_class=residual_class,
        residual=trace.residual,
        decomposition=decomposition,
        witness=witness,
        timings=timings,
    )


def witness_json(witness: Witness | None) -> dict | None:
    if witness is None:
        return None
    return {
        "letters": [letter_name(x) for x in witness.letters],
        "pattern": format_word(witness.pattern),
    }


def decomposition_json(d: MultipartiteDecomposition | None) -> dict | None:
    if d is None:
        return None
    return {
        "isolated": [letter_name(v) for v in d.isolated],
        "parts": [[letter_name(v) for v in part] for part in d.parts],
        "valid": d.valid,
    }


def report_json(r: ClassificationReport) -> dict:
    return {
        "schema": 1,
        "given": r.given,
        "word": format_word(r.word),
        "canonical": format_word(r.canonical),
        "n": r.loops,
        "boundary_circles": r.boundary_circles,
        "genus": r.genus,
        "torus_embeddable": r.torus_embeddable,
        "checks": dict(r.checks),
        "agreement": r.agreement,
        "residual_class": r.residual_class.value,
        "residual": format_word(r.residual),
        "decomposition": decomposition_json(r.decomposition),
        "witness": witness_json(r.witness),
        "timings": dict(r.timings),
    }


def report_text(r: ClassificationReport) -> str:
    lines = [
        f"word       {format_word(r.word) or '()'}   (given: {r.given or '()'})",
        f"canonical  {format_word(r.canonical) or '()'}",
        f"loops      {r.loops}",
        f"boundary   {r.boundary_circles} circle(s), genus {r.genus}",
        f"verdict    {'embeds in the torus' if r.torus_embeddable else 'does NOT embed in the torus'}",
    ]
    for name in CHECKER_NAMES:
        if name in r.checks:
            lines.append(f"  check {name:<10} {'pass' if r.checks[name] else 'fail'}")
    if not r.agreement:
        lines.append("  CHECKER DISAGREEMENT - this is a bug, please report the word")
    lines.append(f"residual   {format_word(r.residual) or '()'} [{r.residual_class.value}]")
    if r.decomposition is not None:
        if r.decomposition.valid:
            parts = ", ".join("{" + ",".join(letter_name(v) for v in p) + "}"
                              for p in r.decomposition.parts) or "none"
            iso = ",".join(letter_name(v) for v in r.decomposition.isolated) or "none"
            lines.append(f"loop graph multipartite parts: {parts}; isolated: {iso}")
        else:
            lines.append("loop graph not a complete multipartite shape")
    if r.witness is not None:
        letters = ",".join(letter_name(x) for x in r.witness.letters)
        lines.append(f"witness    letters {{{letters}}} induce {format_word(r.witness.pattern)}")
    return "\n".join(lines)


@dataclass(frozen=True)
class EnumerationSummary:
    n: int
    dedupe: bool
    total: int
    genus_histogram: dict[int, int]
    embeddable: int
    disagreements: tuple[str, ...]
    elapsed: float


def run_enumeration(n: int, dedupe: bool = False, max_n: int = 8,
                    include_reflection: bool = True) -> EnumerationSummary:
    """Check the four criteria against each other on every diagram of size n."""
    t0 = time.perf_counter()
    hist: Counter[int] = Counter()
    total = 0
    embeddable = 0
    disagreements: list[str] = []
    for w in enumerate_diagrams(n, dedupe=dedupe, max_n=max_n):
        r = classify_word(w, include_reflection=include_reflection)
        total += 1
        hist[r.genus] += 1
        if r.torus_embeddable:
            embeddable += 1
        if not r.agreement:
            disagreements.append(format_word(w))
    return EnumerationSummary(
        n=n,
        dedupe=dedupe,
        total=total,
        genus_histogram=dict(sorted(hist.items())),
        embeddable=embeddable,
        disagreements=tuple(disagreements),
        elapsed=time.perf_counter() - t0,
    )


def enumeration_json(s: EnumerationSummary) -> dict:
    return {
        "schema": 1,
        "n": s.n,
        "dedupe": s.dedupe,
        "total": s.total,
        "genus_histogram": {str(g): c for g, c in s.genus_histogram.items()},
        "embeddable": s.embeddable,
        "disagreements": list(s.disagreements),
        "elapsed": s.elapsed,
    }


def enumeration_text(s: EnumerationSummary) -> str:
    hist = ", ".join(f"genus {g}: {c}" for g, c in s.genus_histogram.items()) or "empty"
    lines = [
        f"n={s.n} {'classes' if s.dedupe else 'diagrams'}: {s.total}",
        f"  {hist}",
        f"  embeddable: {s.embeddable}",
        f"  disagreements: {len(s.disagreements)}",
        f"  elapsed: {s.elapsed:.2f}s",
    ]
    for word in s.disagreements:
        lines.append(f"  DISAGREE {word}")
    return "\n".join(lines)


@dataclass(frozen=True)
class BenchRow:
    loops: int
    trials: int
    mean_seconds: float
    work_per_loop: float
    steps: int


@dataclass(frozen=True)
class BenchReport:
    seed: int
    rows: tuple[BenchRow, ...]
    ratio_spread: float
    linear: bool


DEFAULT_SPREAD_FACTOR = 3.0


def run_bench(sizes: list[int], trials: int, seed: int,
              spread_factor: float = DEFAULT_SPREAD_FACTOR) -> BenchReport:
    """Time the linear reducer on uniformly random words.

    The primary metric is the adjacency-examination counter per loop; the
    verdict requires its spread across sizes to stay within spread_factor.
    """
    import random

    rng = random.Random(seed)
    rows: list[BenchRow] = []
    for size in sizes:
        if trials <= 0:
            continue
        total_time = 0.0
        total_work = 0
        total_steps = 0
        for _ in range(trials):
            w = random_word(size, rng)
            t0 = time.perf_counter()
            trace = fully_reduce_linear(w)
            total_time += time.perf_counter() - t0
            total_work += trace.work
            total_steps += len(trace.steps)
        rows.append(BenchRow(
            loops=size,
            trials=trials,
            mean_seconds=total_time / trials,
            work_per_loop=total_work / trials / max(size, 1),
            steps=total_steps,
        ))
    ratios = [row.work_per_loop for row in rows]
    spread = (max(ratios) / min(ratios)) if ratios and min(ratios) > 0 else 1.0
    return BenchReport(seed=seed, rows=tuple(rows), ratio_spread=spread,
                       linear=spread <= spread_factor)


def bench_json(b: BenchReport) -> dict:
    return {
        "schema": 1,
        "seed": b.seed,
        "rows": [
            {
                "n": r.loops,
                "trials": r.trials,
                "mean_seconds": r.mean_seconds,
                "work_per_loop": r.work_per_loop,
                "steps": r.steps,
            }
            for r in b.rows
        ],
        "ratio_spread": b.ratio_spread,
        "linear": b.linear,
    }


def bench_text(b: BenchReport) -> str:
    lines = [f"{'n':>9}  {'trials':>6}  {'mean time':>10}  {'work/n':>8}  {'steps':>8}"]
    for r in b.rows:
        lines.append(f"{r.loops:>9}  {r.trials:>6}  {r.mean_seconds:>9.4f}s"
                     f"  {r.work_per_loop:>8.3f}  {r.steps:>8}")
    lines.append(f"work/n spread across sizes: {b.ratio_spread:.3f}"
                 f" -> {'linear' if b.linear else 'NOT linear'}")
    return "\n".join(lines)
