"""Independent brute-force ground truth for the algebraic decoders.

Everything here works from a syndrome function alone and never touches a
decoder's internals, so agreement between a decoder and this module is
meaningful evidence.  Enumeration is exhaustive and deterministic: error
patterns are generated in increasing total weight, then by positions, then
by values, and two runs always produce identical orderings.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .decoding import DecodeReport, ErrorEntry, Word, add_errors
from .metric import qm_weight, residues_of_weight
from .residues import Modulus, Residue
from .single_error import SingleErrorCode
from .double_error import DoubleErrorCode

SyndromeFn = Callable[[Sequence[Residue]], object]


@dataclass(frozen=True)
class ErrorPattern:
    """A set of (position, value) entries with its total class weight."""

    entries: Tuple[ErrorEntry, ...]
    total_weight: int

    @classmethod
    def from_entries(cls, entries: Sequence[ErrorEntry]) -> "ErrorPattern":
        entries = tuple(sorted(entries, key=lambda e: e[0]))
        return cls(entries, sum(qm_weight(v) for _, v in entries))

    def is_unit_valued(self) -> bool:
        return all(qm_weight(v) == 1 for _, v in self.entries)


def _compositions(total: int, parts: int):
    """All orderings of `parts` positive integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def error_patterns(modulus: Modulus, n: int, w_max: int) -> List[ErrorPattern]:
    """Every error pattern of total weight <= w_max, in canonical order.

    Weight-one entries range over the eight unit classes; heavier entries
    range over all classes of exactly that weight, so mixed patterns such as
    one weight-two symbol plus one unit are covered.  Order: total weight,
    then positions (lexicographic), then values (lexicographic).
    """
    out: List[ErrorPattern] = [ErrorPattern((), 0)]
    by_weight = {w: residues_of_weight(modulus, w) for w in range(1, w_max + 1)}
    for w in range(1, w_max + 1):
        bucket: List[Tuple[tuple, tuple, Tuple[ErrorEntry, ...]]] = []
        for k in range(1, min(w, n) + 1):
            for positions in combinations(range(n), k):
                for weights in _compositions(w, k):
                    pools = [by_weight[piece] for piece in weights]
                    if any(not pool for pool in pools):
                        continue
                    for values in product(*pools):
                        entries = tuple(zip(positions, values))
                        bucket.append(
                            (positions, tuple(v.key for v in values), entries)
                        )
        bucket.sort(key=lambda item: (item[0], item[1]))
        out.extend(ErrorPattern(entries, w) for _, _, entries in bucket)
    return out


def _pattern_word(modulus: Modulus, n: int, pattern: ErrorPattern) -> Word:
    word = [modulus.zero] * n
    for pos, value in pattern.entries:
        word[pos] = value
    return tuple(word)


def brute_decode(syndrome_fn: SyndromeFn, word: Sequence[Residue],
                 w_max: int) -> Optional[ErrorPattern]:
    """First pattern of total weight <= w_max whose syndromes match the word.

    Because enumeration is weight-ordered, a returned pattern is a
    minimum-weight explanation of the word.  Returns None when nothing
    within the bound matches.
    """
    word = tuple(word)
    modulus = word[0].modulus
    n = len(word)
    target = syndrome_fn(word)
    for pattern in error_patterns(modulus, n, w_max):
        if syndrome_fn(_pattern_word(modulus, n, pattern)) == target:
            return pattern
    return None


def min_distance_at_most(syndrome_fn: SyndromeFn, n: int, w: int,
                         modulus: Modulus) -> Optional[Word]:
    """A nonzero word of total weight <= w with all-zero syndromes, or None.

    A None result certifies that the code's minimum distance exceeds w.
    """
    zero_word = tuple([modulus.zero] * n)
    zero_syndromes = syndrome_fn(zero_word)
    for pattern in error_patterns(modulus, n, w):
        if not pattern.entries:
            continue
        word = _pattern_word(modulus, n, pattern)
        if syndrome_fn(word) == zero_syndromes:
            return word
    return None


def enumerate_codewords(code: SingleErrorCode) -> List[Word]:
    """All codewords, via the full message space; refuses oversized spaces."""
    size = (code.modulus.p ** 2) ** (code.n - 1)
    if size > 10_000:
        raise ValueError(
            f"message space has {size} elements; exhaustive enumeration is "
            "limited to 10000"
        )
    residues = code.modulus.residues
    return [
        code.encode(message)
        for message in product(residues, repeat=code.n - 1)
    ]


def syndrome_fn_for(code) -> SyndromeFn:
    """Uniform syndrome interface: always a tuple of residues."""
    if isinstance(code, DoubleErrorCode):
        return lambda word: code.syndromes(word)
    if isinstance(code, SingleErrorCode):
        return lambda word: (code.syndrome(word),)
    raise TypeError(f"unsupported code type: {type(code).__name__}")


@dataclass(frozen=True)
class CorrectionReport:
    """Result of running decoder and oracle over a (codeword x pattern) grid."""

    trials: int
    decoder_failures: int
    oracle_failures: int
    disagreements: int
    mismatches: Tuple[str, ...]

    @property
    def ok(self) -> bool:
        return (
            self.decoder_failures == 0
            and self.oracle_failures == 0
            and self.disagreements == 0
        )

    def summary(self) -> str:
        status = "all recovered" if self.ok else "FAILURES"
        return (
            f"{self.trials} trials: {status} "
            f"(decoder failures {self.decoder_failures}, "
            f"oracle failures {self.oracle_failures}, "
            f"disagreements {self.disagreements})"
        )


def exhaustive_correction_suite(code, error_weight: int,
                                codeword_sample: Sequence[Word]) -> CorrectionReport:
    """Inject every unit-valued pattern of total weight <= error_weight into
    every sampled codeword; decode algebraically and with the brute-force
    oracle; count exact pattern recoveries and cross-check agreement.

    The oracle side is the weight-ordered first match over the full pattern
    space (including heavier-than-unit values), evaluated through a
    syndrome-indexed table that preserves the enumeration order.
    """
    codeword_sample = [tuple(w) for w in codeword_sample]
    if not codeword_sample:
        return CorrectionReport(0, 0, 0, 0, ())
    modulus = code.modulus
    n = code.n
    syndrome_fn = syndrome_fn_for(code)

    patterns = error_patterns(modulus, n, error_weight)
    injected = [p for p in patterns if p.is_unit_valued()]

    # Syndromes are translation-invariant, so the oracle's first match for a
    # received word depends only on the word's own syndromes; keep the first
    # pattern per syndrome value, in enumeration order.
    oracle_first: Dict[object, ErrorPattern] = {}
    for pattern in patterns:
        key = syndrome_fn(_pattern_word(modulus, n, pattern))
        oracle_first.setdefault(key, pattern)

    trials = 0
    decoder_failures = 0
    oracle_failures = 0
    disagreements = 0
    mismatches: List[str] = []

    def note(kind: str, cw_index: int, pattern: ErrorPattern, got) -> None:
        entries = tuple((p, v.rep.components) for p, v in pattern.entries)
        mismatches.append(f"{kind}: codeword#{cw_index} pattern={entries} got={got}")

    for cw_index, codeword in enumerate(codeword_sample):
        for pattern in injected:
            trials += 1
            received = add_errors(codeword, pattern.entries)

            report: DecodeReport = code.decode(received)
            recovered = tuple(sorted(report.errors, key=lambda e: e[0]))
            decoder_result = None if report.kind == "uncorrectable" else recovered
            if decoder_result != pattern.entries or report.corrected != codeword:
                decoder_failures += 1
                note("decoder", cw_index, pattern, (report.kind, recovered))

            oracle_pattern = oracle_first.get(syndrome_fn(received))
            oracle_result = None if oracle_pattern is None else oracle_pattern.entries
            if oracle_result != pattern.entries:
                oracle_failures += 1
                note("oracle", cw_index, pattern, oracle_result)

            if decoder_result != oracle_result:
                disagreements += 1

    return CorrectionReport(
        trials, decoder_failures, oracle_failures, disagreements, tuple(mismatches)
    )
