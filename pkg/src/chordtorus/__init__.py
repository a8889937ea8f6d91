"""Torus embeddability of one-vertex rotation systems.

A one-vertex graph with a cyclic order of loop-ends is encoded as a cyclic
double-occurrence word.  Four independent criteria decide whether it embeds
in the torus: the genus of its ribbon surface, the absence of four forbidden
four-letter sub-diagrams, the shape of its interlacement graph, and the
class of its reduction residual.  The reduction criterion runs in amortized
linear time.
"""
from .words import (
    BadMultiplicityError,
    BadTokenError,
    BoundExceededError,
    CanonicalForm,
    OddLengthError,
    UnknownLetterError,
    Word,
    WordError,
    canonical_form,
    canonical_symbols,
    concat_disjoint,
    enumerate_diagrams,
    equivalent,
    format_word,
    insert_letter,
    letter_name,
    parse_word,
    random_word,
    restrict,
    reverse,
    rotate,
    to_pairing,
    word_from_raw,
)
from .genus import (
    BoundaryTrace,
    GenusReport,
    ParityViolationError,
    boundary_components,
    genus_report,
    is_torus_embeddable_by_genus,
)
from .interlace import (
    InterlaceGraph,
    MultipartiteDecomposition,
    decompose_multipartite,
    interlace_graph,
    is_torus_embeddable_by_loop_graph,
)
from .forbidden import (
    FORBIDDEN_PATTERNS,
    ForbiddenSet,
    Witness,
    find_witness,
    forbidden_closure,
    is_torus_embeddable_by_patterns,
)
from .reduction import (
    NotApplicableError,
    ReductionStep,
    ReductionTrace,
    ResidualClass,
    apply_alpha,
    apply_beta,
    apply_step,
    classify_residual,
    enumerate_steps,
    find_applicable_step,
    fully_reduce_linear,
    is_torus_embeddable_by_reduction,
    oracle_reduce_all,
    reduce_one_pass_noncyclic,
)
from .reports import (
    ClassificationReport,
    EnumerationSummary,
    classify_word,
    run_bench,
    run_enumeration,
)

__version__ = "0.1.0"

ALL_CHECKERS = {
    "genus": is_torus_embeddable_by_genus,
    "forbidden": is_torus_embeddable_by_patterns,
    "loop_graph": is_torus_embeddable_by_loop_graph,
    "reduction": is_torus_embeddable_by_reduction,
}
