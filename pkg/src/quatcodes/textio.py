"""Text form of quaternions and words.

Grammar (ASCII only):

    literal := ["-"] term { ("+" | "-") term }
    term    := unsigned-integer | [unsigned-integer] basis
    basis   := "i" | "j" | "k"

A term with no basis symbol is the complete part; each of the four slots
(complete, i, j, k) may appear at most once.  "0" denotes the zero
quaternion.  Canonical printing orders 1, i, j, k, omits zero components and
the coefficient 1 before a basis symbol, uses no whitespace, and gives the
leading term no "+".  parse(print(q)) == q for every q.

Words are parenthesized comma-separated literals, e.g. (3,3,1,1,k,0).

Input is slightly lenient: surrounding whitespace is ignored and the
typographic minus U+2212 is accepted as "-"; output is always canonical.
"""

from __future__ import annotations

import re
from typing import Optional, Sequence, Tuple

from .quaternion import Quaternion


class ParseError(ValueError):
    """Raised on malformed literals; the message names the offending token."""


_TERM_RE = re.compile(r"^(\d+)?([ijk])?$")
_SLOTS = {"": 0, "i": 1, "j": 2, "k": 3}


def parse_quaternion(text: str) -> Quaternion:
    cleaned = text.replace("−", "-").strip()
    if not cleaned:
        raise ParseError("empty quaternion literal")
    comps = [0, 0, 0, 0]
    seen = [False, False, False, False]
    pos = 0
    sign = 1
    if cleaned[0] in "+-":
        if cleaned[0] == "-":
            sign = -1
        pos = 1
    while True:
        end = pos
        while end < len(cleaned) and cleaned[end] not in "+-":
            end += 1
        token = cleaned[pos:end].strip()
        m = _TERM_RE.match(token)
        if m is None or (m.group(1) is None and m.group(2) is None):
            raise ParseError(f"bad term {token!r} in quaternion literal {text!r}")
        digits, basis = m.group(1), m.group(2) or ""
        value = int(digits) if digits is not None else 1
        slot = _SLOTS[basis]
        if seen[slot]:
            name = basis if basis else "complete part"
            raise ParseError(f"duplicate {name} term in quaternion literal {text!r}")
        seen[slot] = True
        comps[slot] = sign * value
        if end == len(cleaned):
            break
        sign = 1 if cleaned[end] == "+" else -1
        pos = end + 1
        if pos == len(cleaned):
            raise ParseError(f"trailing {cleaned[end]!r} in quaternion literal {text!r}")
    return Quaternion(*comps)


def format_quaternion(q: Quaternion) -> str:
    parts = []
    for value, basis in zip(q.components, ("", "i", "j", "k")):
        if value == 0:
            continue
        sign = "-" if value < 0 else ("+" if parts else "")
        magnitude = abs(value)
        body = basis if (magnitude == 1 and basis) else f"{magnitude}{basis}"
        parts.append(f"{sign}{body}")
    return "".join(parts) if parts else "0"


def parse_word(text: str, expect_len: Optional[int] = None) -> Tuple[Quaternion, ...]:
    cleaned = text.replace("−", "-").strip()
    if not (cleaned.startswith("(") and cleaned.endswith(")")):
        raise ParseError(f"word literal must be parenthesized: {text!r}")
    body = cleaned[1:-1]
    symbols = tuple(parse_quaternion(item) for item in body.split(","))
    if expect_len is not None and len(symbols) != expect_len:
        raise ParseError(
            f"expected {expect_len} symbols, got {len(symbols)} in {text!r}"
        )
    return symbols


def format_word(symbols: Sequence[Quaternion]) -> str:
    return "(" + ",".join(format_quaternion(q) for q in symbols) + ")"
