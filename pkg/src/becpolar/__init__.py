"""Exact reliability analysis of binary-erasure polar sub-channels.

Bitmask monomials label synthetic channels; their erasure probabilities are
integer-coefficient polynomials computed exactly, compared exactly under four
order relations, and ranked by exact average reliability or beta expansion.
"""

from .monomials import MAX_M, Monomial, all_monomials, evaluate, gcd_quot, rm_set
from .polynomials import (
    IntPoly,
    PathCounts,
    SignVerdict,
    eval_rational,
    from_path_counts,
    integrate01,
    nonneg_on_01,
    parallel_step,
    square_step,
    to_path_counts,
)
from .synthesis import ChannelTable, dual_poly, synth_all, synth_poly, threshold_estimate
from .orders import (
    Comparison,
    OrderVerdict,
    Relation,
    closure,
    compare,
    hasse_edges,
    interval,
    is_decreasing,
    leq_dominance,
    leq_pointwise,
    leq_std,
    leq_weak,
    mult_compatible,
)
from .reliability import (
    CompositionGraph,
    CompositionParams,
    avr_closed_form,
    avr_closed_form_complement,
    build_graph,
    gen_binomial,
    ni_inclusion_exclusion,
    oracle_path_counts,
)
from .construction import (
    Criterion,
    RankedChannels,
    avr_distribution,
    avr_of_pairs,
    beta_avr_conflicts,
    beta_incompatible_count,
    beta_value,
    construct,
    incomparable_pairs,
    rank,
)

__version__ = "0.1.0"
