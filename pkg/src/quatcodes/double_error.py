"""Negacyclic codes correcting two errors of quaternion-Mannheim weight one.

Construction: for a generating residue beta of order 2n the parity rows are

    row 0:  beta^0, beta^1,  ..., beta^(n-1)
    row 1:  beta^0, beta^3,  ..., beta^(3(n-1))

and codewords are the words annihilated by both rows (symbols multiplying
the row entries on the LEFT, as in the single-error code).  The code is an
ideal of the polynomial ring modulo x^n + 1 generated by
g(x) = (x - beta)(x - beta^3), so it is closed under the negacyclic shift
x*c(x), which rotates the word one step and negates the wrapped symbol.

Decoding distinguishes the cases by exact candidate search rather than the
commutative identities (s1^3 = s3 and the quadratic locator expansion),
which do not survive non-commuting unit-valued errors:

  * single: some position l and unit u satisfy both raw syndrome
    equations s1 = u*beta^l and s3 = u*beta^(3l);
  * double: a pair of candidates z = u*beta^l at distinct positions
    satisfies z1 + z2 = s1 and the matching third-power equation for s3.

The locator value epsilon = (s1^3 - s3) / (3*s1) is computed when 3*s1 has a
two-sided inverse and is used only to prioritize candidate pairs; pairs
surviving it are verified against the raw syndrome equations, and if the
filter starves the search the full sum-matched candidate list is verified
instead.  Epsilon is therefore never able to turn a decodable word into an
uncorrectable one.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .decoding import DOUBLE, NO_ERROR, SINGLE, UNCORRECTABLE, DecodeReport, Word
from .quaternion import Components
from .residues import Modulus, Residue

# Frozen division side for epsilon: the defining relation reads
# s1^3 - s3 = 3 * epsilon * s1, so epsilon is recovered by dividing on the
# right: (s1^3 - s3) * inverse(3 * s1).  Both sides agree on scalar-class
# syndromes (errors of value 1), the only regime where the relation itself
# is exact.
EPSILON_DIVIDES_ON_RIGHT = True

_Candidate = Tuple[int, Residue, Residue, Residue]  # position, unit, u*b^l, u*b^3l


class DoubleErrorCode:
    """Immutable after construction; all decoding operations are pure."""

    def __init__(self, modulus: Modulus, beta: Residue, t: int = 1,
                 n: Optional[int] = None):
        if t != 1:
            raise ValueError(
                f"t={t} is not supported: only t=1 (two syndrome rows) has a decoder"
            )
        if beta.modulus != modulus:
            raise ValueError("beta must be a residue of the given modulus")
        if beta.is_zero():
            raise ValueError("beta must be nonzero")
        order = beta.order()
        if order is None or order % 2 != 0 or order // 2 <= t:
            raise ValueError(
                f"beta must have even order 2n with n > t; {beta!r} has order {order}"
            )
        if n is not None and order != 2 * n:
            raise ValueError(f"requested n={n} but beta has order {order}, not {2 * n}")
        self.modulus = modulus
        self.beta = beta
        self.t = t
        self.n = order // 2
        if beta ** self.n != -modulus.one:
            raise ValueError("beta^n must be -1 for the negacyclic construction")

        powers = tuple(beta ** s for s in range(2 * self.n))
        self.h_rows: Tuple[Tuple[Residue, ...], Tuple[Residue, ...]] = (
            tuple(powers[l] for l in range(self.n)),
            tuple(powers[(3 * l) % (2 * self.n)] for l in range(self.n)),
        )

        # Candidate table: every weight-one error u at position l contributes
        # (u*beta^l, u*beta^(3l)) to the syndromes.  Sorted for determinism.
        cands: List[_Candidate] = []
        for l in range(self.n):
            for u in sorted(modulus.unit_residues, key=lambda r: r.key):
                cands.append((l, u, u * self.h_rows[0][l], u * self.h_rows[1][l]))
        self._candidates = tuple(cands)

        self._single_index: Dict[Tuple[Components, Components], Tuple[int, Residue]] = {}
        for l, u, z1, z3 in cands:
            self._single_index.setdefault((z1.key, z3.key), (l, u))

        # Pairs at distinct positions, indexed by the class of z1 + z2; each
        # entry keeps the precomputed third-power sum and both products so a
        # decode only compares keys.
        self._pair_index: Dict[Components, List[tuple]] = {}
        for a in range(len(cands)):
            la, ua, za, wa = cands[a]
            for b in range(a + 1, len(cands)):
                lb, ub, zb, wb = cands[b]
                if la == lb:
                    continue
                entry = (
                    (la, ua), (lb, ub),
                    (wa + wb).key,
                    (za * zb).key,
                    (zb * za).key,
                )
                self._pair_index.setdefault((za + zb).key, []).append(entry)

    # ---------------- construction-derived pieces ----------------

    def generator_poly(self) -> Tuple[Residue, ...]:
        """Coefficients of (x - beta)(x - beta^3), ascending degree."""
        b1 = self.beta
        b3 = self.beta ** 3
        return (b1 * b3, -(b1 + b3), self.modulus.one)

    def encode(self, message: Sequence[Residue]) -> Word:
        """Multiply the message polynomial by the generator on the left."""
        g = self.generator_poly()
        k = self.n - len(g) + 1
        if len(message) != k:
            raise ValueError(f"expected {k} symbols, got {len(message)}")
        out = [self.modulus.zero] * self.n
        for a, sym in enumerate(message):
            for b, coeff in enumerate(g):
                out[a + b] = out[a + b] + sym * coeff
        return tuple(out)

    # ---------------- parity checks ----------------

    def _check_length(self, word: Sequence[Residue]) -> None:
        if len(word) != self.n:
            raise ValueError(f"expected {self.n} symbols, got {len(word)}")

    def syndromes(self, word: Sequence[Residue]) -> Tuple[Residue, Residue]:
        self._check_length(word)
        s1 = self.modulus.zero
        s3 = self.modulus.zero
        row0, row1 = self.h_rows
        for sym, p0, p1 in zip(word, row0, row1):
            s1 = s1 + sym * p0
            s3 = s3 + sym * p1
        return s1, s3

    def is_codeword(self, word: Sequence[Residue]) -> bool:
        s1, s3 = self.syndromes(word)
        return s1.is_zero() and s3.is_zero()

    def negacyclic_shift(self, word: Sequence[Residue]) -> Word:
        """x * c(x) mod x^n + 1: rotate right, negating the wrapped symbol."""
        self._check_length(word)
        return (-word[-1],) + tuple(word[:-1])

    # ---------------- decoding ----------------

    def classify(self, s1: Residue, s3: Residue):
        """(kind, detail): no_error, single with its (position, unit), or double.

        The single test searches all 8n weight-one candidates for an exact
        match of BOTH syndromes; this subsumes the associate checks of the
        cube identity without assuming commutativity.  Anything that is
        neither zero nor a single is handed to the pair search, so "double"
        here is provisional.
        """
        if s1.is_zero() and s3.is_zero():
            return NO_ERROR, None
        hit = self._single_index.get((s1.key, s3.key))
        if hit is not None:
            return SINGLE, hit
        return DOUBLE, None

    def epsilon(self, s1: Residue, s3: Residue) -> Optional[Residue]:
        """(s1^3 - s3) divided by 3*s1 on the frozen side, or None when 3*s1
        has no two-sided inverse (the caller then searches without it)."""
        if s1.is_zero():
            return None
        inv = (s1 * 3).inverse()
        if inv is None:
            return None
        t = s1 ** 3 - s3
        return t * inv if EPSILON_DIVIDES_ON_RIGHT else inv * t

    def locate_double(self, s1: Residue, s3: Residue):
        """Search candidate pairs for the two error positions and values.

        Candidates z = u*beta^l are matched so that z1 + z2 = s1; epsilon,
        when available, prioritizes pairs whose product (either order)
        equals it.  Every accepted pair must also satisfy the raw
        third-power equation u1*beta^(3*l1) + u2*beta^(3*l2) = s3.  Returns
        (l1, v1, l2, v2) with l1 < l2, or None.
        """
        entries = self._pair_index.get(s1.key, ())
        if not entries:
            return None
        s3_key = s3.key
        eps = self.epsilon(s1, s3)
        if eps is not None:
            for first, second, w_key, prod_ab, prod_ba in entries:
                if eps.key in (prod_ab, prod_ba) and w_key == s3_key:
                    return (first[0], first[1], second[0], second[1])
        for first, second, w_key, prod_ab, prod_ba in entries:
            if w_key == s3_key:
                return (first[0], first[1], second[0], second[1])
        return None

    def decode(self, word: Sequence[Residue]) -> DecodeReport:
        word = tuple(word)
        s1, s3 = self.syndromes(word)
        kind, detail = self.classify(s1, s3)
        if kind == NO_ERROR:
            return DecodeReport(NO_ERROR, word)
        if kind == SINGLE:
            l, u = detail
            corrected = list(word)
            corrected[l] = corrected[l] - u
            corrected = tuple(corrected)
            if self.is_codeword(corrected):
                return DecodeReport(SINGLE, corrected, ((l, u),))
            return DecodeReport(UNCORRECTABLE, word)
        located = self.locate_double(s1, s3)
        if located is None:
            return DecodeReport(UNCORRECTABLE, word)
        l1, v1, l2, v2 = located
        corrected = list(word)
        corrected[l1] = corrected[l1] - v1
        corrected[l2] = corrected[l2] - v2
        corrected = tuple(corrected)
        if not self.is_codeword(corrected):
            return DecodeReport(UNCORRECTABLE, word)
        return DecodeReport(DOUBLE, corrected, ((l1, v1), (l2, v2)))
