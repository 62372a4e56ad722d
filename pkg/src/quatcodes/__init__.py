"""Error-correcting codes over Lipschitz quaternion integers."""

from .quaternion import I, J, K, ONE, ZERO, Quaternion, units
from .residues import (
    Modulus,
    Residue,
    canonical_reduce,
    congruent,
    enumerate_residues,
    find_prime_over,
    make_modulus,
)
from .metric import (
    WeightedRep,
    min_weight_rep,
    qm_distance,
    qm_weight,
    residues_of_weight,
    vector_qm_weight,
)
from .decoding import DecodeReport, add_errors, subtract_errors
from .single_error import SingleErrorCode
from .double_error import DoubleErrorCode
from .oracle import (
    CorrectionReport,
    ErrorPattern,
    brute_decode,
    enumerate_codewords,
    error_patterns,
    exhaustive_correction_suite,
    min_distance_at_most,
    syndrome_fn_for,
)
from .textio import ParseError, format_quaternion, format_word, parse_quaternion, parse_word

__version__ = "0.1.0"

__all__ = [
    "Quaternion", "units", "ZERO", "ONE", "I", "J", "K",
    "Modulus", "Residue", "make_modulus", "find_prime_over",
    "congruent", "canonical_reduce", "enumerate_residues",
    "WeightedRep", "min_weight_rep", "qm_weight", "qm_distance",
    "vector_qm_weight", "residues_of_weight",
    "DecodeReport", "add_errors", "subtract_errors",
    "SingleErrorCode", "DoubleErrorCode",
    "ErrorPattern", "CorrectionReport", "error_patterns", "brute_decode",
    "min_distance_at_most", "enumerate_codewords",
    "exhaustive_correction_suite", "syndrome_fn_for",
    "ParseError", "parse_quaternion", "format_quaternion",
    "parse_word", "format_word",
]
