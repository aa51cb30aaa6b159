"""Exact counting of r-subset distributions and Ramsey-number search."""

from ._core import (
    BudgetExceededError,
    Event,
    ProblemSpec,
    UnrealizableSpectrumError,
    __version__,
    binom,
    brute_force_nw,
    check_spectrum_constraints,
    compute,
    cross_validate,
    direct_ie_nw,
    enumerate_events,
    frequency,
    is_compatible,
    is_ramsey_witness,
    kmax_upper_bound,
    p_from_q,
    q_from_p,
    ramsey_number,
    rank_rsubset,
    search,
    spectrum_nw,
    tuple_value,
    unrank_rsubset,
    venn_spectrum,
    w_holds,
)

__all__ = [
    "BudgetExceededError",
    "Event",
    "ProblemSpec",
    "UnrealizableSpectrumError",
    "__version__",
    "binom",
    "brute_force_nw",
    "check_spectrum_constraints",
    "compute",
    "cross_validate",
    "direct_ie_nw",
    "enumerate_events",
    "frequency",
    "is_compatible",
    "is_ramsey_witness",
    "kmax_upper_bound",
    "p_from_q",
    "q_from_p",
    "ramsey_number",
    "rank_rsubset",
    "search",
    "spectrum_nw",
    "tuple_value",
    "unrank_rsubset",
    "venn_spectrum",
    "w_holds",
]
