"""Codes correcting one error of quaternion-Mannheim weight one.

For a modulus of norm p and a generating residue alpha with alpha^(p-1) = 1,
the code of length n = (p-1)/2 has the single parity row

    H = (alpha^0, alpha^1, ..., alpha^(n-1))

and the systematic generator rows (-alpha^(l+1), e_(l+1)).  Throughout, word
symbols multiply the row entries on the LEFT: this is the unique side
convention that reproduces both the syndrome value and its unit
factorization in the worked single-error example, and it matches the error
model (a unit error u at position l contributes u * alpha^l).
"""

from __future__ import annotations

from typing import Optional, Sequence, Tuple

from .decoding import NO_ERROR, SINGLE, UNCORRECTABLE, DecodeReport, Word
from .metric import qm_weight
from .residues import Modulus, Residue


class SingleErrorCode:
    """Immutable after construction; encode/syndrome/decode are pure."""

    def __init__(self, modulus: Modulus, alpha: Residue, n: Optional[int] = None):
        if alpha.modulus != modulus:
            raise ValueError("alpha must be a residue of the given modulus")
        if alpha.is_zero():
            raise ValueError("alpha must be nonzero")
        p = modulus.p
        if alpha ** (p - 1) != modulus.one:
            raise ValueError(f"alpha^(p-1) must be 1; {alpha!r} fails at p={p}")
        expected_n = (p - 1) // 2
        if n is not None and n != expected_n:
            raise ValueError(
                f"length {n} requested but this construction only supports "
                f"n = (p-1)/2 = {expected_n}; extension-ring lengths are not supported"
            )
        self.modulus = modulus
        self.alpha = alpha
        self.n = expected_n
        self.h_row: Tuple[Residue, ...] = tuple(alpha ** l for l in range(self.n))

        # Distinct columns must not be unit multiples of each other, or an
        # error value/location pair would be ambiguous.
        for l1 in range(self.n):
            assoc = set(self.h_row[l1].left_associates())
            for l2 in range(l1 + 1, self.n):
                if self.h_row[l2] in assoc:
                    raise ValueError(
                        f"alpha powers {l1} and {l2} are associates; "
                        "error locations would be ambiguous"
                    )

        self._inv_pow = tuple(alpha ** ((p - 1 - l) % (p - 1)) for l in range(self.n))

        rows = []
        zero = modulus.zero
        one = modulus.one
        for l in range(self.n - 1):
            row = [zero] * self.n
            row[0] = -self.h_row[l + 1]
            row[l + 1] = one
            rows.append(tuple(row))
        self.g_rows: Tuple[Word, ...] = tuple(rows)
        for row in self.g_rows:
            if not self.syndrome(row).is_zero():
                raise AssertionError("generator row has nonzero syndrome")

    def _check_length(self, word: Sequence[Residue], length: int) -> None:
        if len(word) != length:
            raise ValueError(f"expected {length} symbols, got {len(word)}")

    def encode(self, message: Sequence[Residue]) -> Word:
        """Systematic encoding: message fills positions 1..n-1, position 0 is
        -(sum of msg[l] * alpha^(l+1)) so the syndrome vanishes."""
        self._check_length(message, self.n - 1)
        acc = self.modulus.zero
        for l, sym in enumerate(message):
            acc = acc + sym * self.h_row[l + 1]
        return (-acc,) + tuple(message)

    def syndrome(self, word: Sequence[Residue]) -> Residue:
        self._check_length(word, self.n)
        acc = self.modulus.zero
        for sym, power in zip(word, self.h_row):
            acc = acc + sym * power
        return acc

    def decode(self, word: Sequence[Residue]) -> DecodeReport:
        """Scan positions l; the error value at l would be S * alpha^(-l).

        The candidate is accepted when its class weight is one, which covers
        the unit-associate check implicitly.  A word explained by no single
        weight-one error is reported uncorrectable, never guessed.
        """
        word = tuple(word)
        s = self.syndrome(word)
        if s.is_zero():
            return DecodeReport(NO_ERROR, word)
        for l in range(self.n):
            value = s * self._inv_pow[l]
            if qm_weight(value) == 1:
                corrected = list(word)
                corrected[l] = corrected[l] - value
                return DecodeReport(SINGLE, tuple(corrected), ((l, value),))
        return DecodeReport(UNCORRECTABLE, word)
