"""Periodic seat-allocation sequences of stationary divisor methods, in exact arithmetic."""

__version__ = "0.1.0"

from .rational import GeometricMean, Ordering, Stationary, compare_claims, format_rational, parse_rational
from .engine import (
    Apportionment,
    PeriodicSequence,
    TieBreak,
    VoteProfile,
    generate,
    generate_period,
    next_seat,
    totals,
)
from .two_party import (
    CellIndex,
    CutpointRegion,
    RunLengths,
    TwoPartyDecomposition,
    decompose,
    dhondt_runs,
    enumerate_two_party,
    infer_cutpoint,
    runs_for_cell,
    runs_for_cut,
    validate_runs,
)
from .multi_party import (
    BreakpointSet,
    PairKey,
    breakpoints,
    count_sequences,
    enumerate_n_party,
    lift,
    pairwise_tables,
    verify_sequence,
)
from .analysis import adams_from_dhondt, lex_compare, minimal_period, rle_decode, rle_encode
