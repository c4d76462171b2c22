"""Exact sign-imbalance arithmetic for skew Young tableaux.

Core values (partitions, skew shapes, tableaux, biwords) are immutable;
the insertion engine maps triples to standard pairs and back with per-step
sign ledgers; the verify module checks every supported identity
exhaustively at desk scale.
"""

from .shapes import (
    Cell,
    InvalidShapeError,
    Partition,
    SkewShape,
    contains,
    enumerate_inner_subshapes,
    enumerate_outer_extensions,
    enumerate_partitions,
    fourlings,
    horizontal_dominoes,
    row_sign,
    skew,
    vertical_dominoes,
)
from .tableaux import (
    Eps,
    InvalidTableauError,
    Tableau,
    count_standard_tableaux,
    enumerate_standard_tableaux,
    imbalance,
    is_chess_tableau,
    reading_word,
    relabel,
    standardize,
    tableau_invsign,
    tableau_sign,
    word_invsign,
    word_sign,
)
from .words import (
    Biword,
    InvalidBiwordError,
    PartialPermutation,
    Permutation,
    complete,
    enumerate_partial_permutations,
    is_increasing_at,
    perm_sign,
)
from .insertion import (
    ForwardResult,
    InsertionError,
    InsertionState,
    LedgerError,
    Quadruple,
    TraceStep,
    Triple,
    TripleError,
    external_insert,
    forward,
    internal_insert,
    ledger_holds,
    quadruple_to_triple,
    reverse,
    triple_to_quadruple,
)
from .verify import (
    SparsePolynomial,
    VerificationReport,
    check_corollary_square,
    check_corollary_vanish,
    check_counting_identity,
    check_roundtrip,
    check_signed_sum,
    check_theorem8,
    check_theorem_inout,
    check_theorem_main,
    run_identity,
    signed_sum_fixed_positions,
)

__version__ = "0.1.0"
