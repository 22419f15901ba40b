"""Shadow calculus for f-vectors and Betti sequences of simplicial complexes."""

from .compat import (
    IntSeq,
    chi,
    is_compatible,
    is_compatible_relaxed,
    is_compatible_upper,
    is_f_vector,
    parse_seq,
)
from .extremal import delta_plus, delta_seq, is_maximal_pair, is_minimal_pair, phi, psi, scan_f_star
from .macaulay import MacaulayRep, binomial, compare, evaluate, expand
from .shadow import error_fn, exchange_report, lower_shadow, shift_up, upper_shadow

__all__ = [
    "IntSeq",
    "MacaulayRep",
    "binomial",
    "chi",
    "compare",
    "delta_plus",
    "delta_seq",
    "error_fn",
    "evaluate",
    "exchange_report",
    "expand",
    "is_compatible",
    "is_compatible_relaxed",
    "is_compatible_upper",
    "is_f_vector",
    "is_maximal_pair",
    "is_minimal_pair",
    "lower_shadow",
    "parse_seq",
    "phi",
    "psi",
    "scan_f_star",
    "shift_up",
    "upper_shadow",
]
