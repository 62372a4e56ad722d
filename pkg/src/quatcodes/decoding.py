"""Shared decoding vocabulary: words, error entries, and the decode report."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .residues import Residue

NO_ERROR = "no_error"
SINGLE = "single"
DOUBLE = "double"
UNCORRECTABLE = "uncorrectable"

Word = Tuple[Residue, ...]
ErrorEntry = Tuple[int, Residue]


@dataclass(frozen=True)
class DecodeReport:
    """Outcome of decoding one received word.

    `errors` holds (position, value) pairs with 0-indexed positions; for an
    uncorrectable word it is empty and `corrected` echoes the input.
    """

    kind: str
    corrected: Word
    errors: Tuple[ErrorEntry, ...] = ()

    @property
    def ok(self) -> bool:
        return self.kind != UNCORRECTABLE


def add_errors(word: Sequence[Residue], entries: Sequence[ErrorEntry]) -> Word:
    """The word with the given error values added at their positions."""
    out = list(word)
    for pos, value in entries:
        out[pos] = out[pos] + value
    return tuple(out)


def subtract_errors(word: Sequence[Residue], entries: Sequence[ErrorEntry]) -> Word:
    out = list(word)
    for pos, value in entries:
        out[pos] = out[pos] - value
    return tuple(out)
