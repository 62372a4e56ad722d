"""Command-line front end.

Subcommands: tables (power tables of a generator), encode, decode, and
verify (self-checks reproducing the reference tables, the worked examples,
the exhaustive correction suites, and the minimum-distance certificates).

Exit status contract: 0 on success (decode: correctable), 1 for an
uncorrectable word or a failed verify suite, 2 for usage or parse errors.
All output is deterministic ASCII text; --out writes the same bytes to a
file in addition to standard output.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import List, Optional, Sequence, Tuple

from .decoding import DecodeReport
from .double_error import DoubleErrorCode
from .oracle import (
    enumerate_codewords,
    exhaustive_correction_suite,
    min_distance_at_most,
    syndrome_fn_for,
)
from .quaternion import Quaternion
from .residues import Modulus, Residue
from .single_error import SingleErrorCode
from .textio import ParseError, format_quaternion, format_word, parse_quaternion, parse_word

VERIFY_SUITES = ("tables", "examples", "omec7", "dec13", "mindist")

TABLE_I_ROWS = (
    "1", "1-i-j-k", "-i-j-k", "-1", "-1+i+j+k", "i+j+k", "1", "1-i-j-k",
)
TABLE_II_ROWS = (
    "1", "2", "-2+i+j+k", "1-i-j-k", "3", "i+j+k", "-1", "-2",
    "2-i-j-k", "-1+i+j+k", "-3", "-i-j-k", "1", "2", "-2+i+j+k", "1-i-j-k",
)

_DEC_SAMPLE_SEED = 413  # frozen; the dec13 suite must be byte-deterministic


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatcodes",
        description="Error-correcting codes over Lipschitz quaternion integers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tables = sub.add_parser("tables", help="print s, gen^s rows for s = 0..count-1")
    tables.add_argument("--pi", required=True, help="modulus quaternion literal")
    tables.add_argument("--alpha", help="generator literal (single-error family)")
    tables.add_argument("--beta", help="generator literal (double-error family)")
    tables.add_argument("--count", type=int, required=True, help="number of rows")
    tables.add_argument("--out", help="also write output to this path")

    for name, help_text in (
        ("encode", "encode a message word"),
        ("decode", "decode a received word"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--family", required=True, choices=("omec", "dec"))
        cmd.add_argument("--pi", required=True, help="modulus quaternion literal")
        cmd.add_argument("--alpha", help="generator literal for --family omec")
        cmd.add_argument("--beta", help="generator literal for --family dec")
        cmd.add_argument("--t", type=int, default=1,
                         help="designed error count for --family dec (only 1)")
        cmd.add_argument("word", help="word literal, e.g. (3,3,1,1,k,0)")
        cmd.add_argument("--out", help="also write output to this path")

    verify = sub.add_parser("verify", help="run a reproduction/verification suite")
    verify.add_argument("suite", choices=VERIFY_SUITES)
    verify.add_argument("--out", help="also write output to this path")
    return parser


def _parse_generator(modulus: Modulus, args, family: Optional[str] = None) -> Residue:
    given = [(name, value) for name, value in
             (("--alpha", args.alpha), ("--beta", args.beta)) if value is not None]
    if len(given) != 1:
        raise ParseError("exactly one of --alpha/--beta must be given")
    name, literal = given[0]
    if family == "omec" and name != "--alpha":
        raise ParseError("--family omec takes its generator via --alpha")
    if family == "dec" and name != "--beta":
        raise ParseError("--family dec takes its generator via --beta")
    return modulus.reduce(parse_quaternion(literal))


def _build_code(args):
    modulus = Modulus(parse_quaternion(args.pi))
    generator = _parse_generator(modulus, args, args.family)
    if args.family == "omec":
        return SingleErrorCode(modulus, generator)
    return DoubleErrorCode(modulus, generator, t=args.t)


def _message_length(code) -> int:
    if isinstance(code, SingleErrorCode):
        return code.n - 1
    return code.n - len(code.generator_poly()) + 1


def _cmd_tables(args) -> Tuple[int, str]:
    modulus = Modulus(parse_quaternion(args.pi))
    generator = _parse_generator(modulus, args)
    if args.count < 1:
        raise ParseError("--count must be at least 1")
    lines = []
    power = modulus.one
    for s in range(args.count):
        lines.append(f"{s}\t{format_quaternion(power.rep)}")
        power = power * generator
    return 0, "\n".join(lines) + "\n"


def _cmd_encode(args) -> Tuple[int, str]:
    code = _build_code(args)
    k = _message_length(code)
    symbols = parse_word(args.word)
    if len(symbols) != k:
        raise ParseError(f"expected n-1 = {k} symbols, got {len(symbols)}"
                         if isinstance(code, SingleErrorCode)
                         else f"expected {k} symbols, got {len(symbols)}")
    message = tuple(code.modulus.reduce(q) for q in symbols)
    codeword = code.encode(message)
    return 0, format_word([r.rep for r in codeword]) + "\n"


def _report_text(report: DecodeReport) -> str:
    if report.kind == "uncorrectable":
        return "uncorrectable\n"
    parts = ["no error" if report.kind == "no_error" else report.kind]
    for position, value in report.errors:
        parts.append(f"position {position} value {format_quaternion(value.rep)}")
    parts.append("corrected " + format_word([r.rep for r in report.corrected]))
    return "; ".join(parts) + "\n"


def _cmd_decode(args) -> Tuple[int, str]:
    code = _build_code(args)
    symbols = parse_word(args.word, expect_len=code.n)
    word = tuple(code.modulus.reduce(q) for q in symbols)
    report = code.decode(word)
    return (0 if report.ok else 1), _report_text(report)


# ---------------- verify suites ----------------

Check = Tuple[bool, str]


def _omec7() -> SingleErrorCode:
    modulus = Modulus(Quaternion(2, 1, 1, 1))
    return SingleErrorCode(modulus, modulus.reduce(Quaternion(1, -1, -1, -1)))

def _dec13() -> DoubleErrorCode:
    modulus = Modulus(Quaternion(1, 2, 2, 2))
    return DoubleErrorCode(modulus, modulus.reduce(Quaternion(2)))


def dec13_codeword_sample(code: DoubleErrorCode, count: int = 200):
    """Deterministic sample of encoded codewords for the double-error suite."""
    rng = random.Random(_DEC_SAMPLE_SEED)
    residues = code.modulus.residues
    k = code.n - 2
    sample = []
    for _ in range(count):
        message = tuple(residues[rng.randrange(len(residues))] for _ in range(k))
        sample.append(code.encode(message))
    return sample


def _check_table(name: str, pi: Quaternion, gen: Quaternion,
                 expected: Sequence[str]) -> Check:
    modulus = Modulus(pi)
    generator = modulus.reduce(gen)
    rows = []
    power = modulus.one
    for _ in expected:
        rows.append(format_quaternion(power.rep))
        power = power * generator
    if tuple(rows) == tuple(expected):
        return True, f"{name}: {len(expected)} rows match"
    diffs = [f"s={s} got {g} want {w}" for s, (g, w) in
             enumerate(zip(rows, expected)) if g != w]
    return False, f"{name}: {'; '.join(diffs)}"


def _suite_tables() -> List[Check]:
    return [
        _check_table("table-i", Quaternion(2, 1, 1, 1),
                     Quaternion(1, -1, -1, -1), TABLE_I_ROWS),
        _check_table("table-ii", Quaternion(1, 2, 2, 2),
                     Quaternion(2), TABLE_II_ROWS),
    ]


def _suite_examples() -> List[Check]:
    checks: List[Check] = []

    # Residue system of norm 3: the classes of 0, +-1, +-i, +-j, +-k.
    m3 = Modulus(Quaternion(1, 1, 1, 0))
    want = {m3.reduce(q).key for q in
            [Quaternion(0), Quaternion(1), Quaternion(-1),
             Quaternion(0, 1), Quaternion(0, -1), Quaternion(0, 0, 1),
             Quaternion(0, 0, -1), Quaternion(0, 0, 0, 1), Quaternion(0, 0, 0, -1)]}
    got = {r.key for r in m3.residues}
    checks.append((got == want and len(got) == 9,
                   "example-1: 9 residues mod 1+i+j are the unit classes"))

    # Single-error worked example.
    code7 = _omec7()
    m7 = code7.modulus
    received7 = tuple(m7.reduce(q) for q in parse_word("(1-i-j-k,1+i,-1+i+j+k)"))
    syndrome = code7.syndrome(received7)
    checks.append((syndrome == m7.reduce(Quaternion(1, 1, 1, -1)),
                   "example-2: syndrome is the class of 1+i+j-k"))
    i_unit = m7.reduce(Quaternion(0, 1, 0, 0))
    checks.append((i_unit * code7.alpha == syndrome
                   and code7.alpha in syndrome.left_associates(),
                   "example-2: syndrome factors as i*alpha"))
    report7 = code7.decode(received7)
    corrected7 = tuple(m7.reduce(q) for q in parse_word("(1-i-j-k,1,-1+i+j+k)"))
    checks.append((report7.kind == "single"
                   and report7.errors == ((1, i_unit),)
                   and report7.corrected == corrected7,
                   "example-2: decode reports i at position 1 and corrects the word"))

    # Double-error worked example.
    code13 = _dec13()
    m13 = code13.modulus
    received13 = tuple(m13.reduce(q) for q in parse_word("(3,3,1,1,k,0)"))
    s1, s3 = code13.syndromes(received13)
    checks.append((m13.congruent(s1.rep, Quaternion(1, -1, -1, 2))
                   and m13.congruent(s3.rep, Quaternion(-1, 1, 1, 2)),
                   "example-3: syndromes are the classes of 1-i-j+2k and -1+i+j+2k"))
    checks.append((code13.classify(s1, s3)[0] == "double",
                   "example-3: single-error test fails, two errors detected"))
    located = code13.locate_double(s1, s3)
    one13 = m13.one
    k13 = m13.reduce(Quaternion(0, 0, 0, 1))
    checks.append((located == (3, one13, 4, k13),
                   "example-3: errors located as 1 at position 3 and k at position 4"))
    if located is not None:
        l1, v1, l2, v2 = located
        root1 = v1 * code13.h_rows[0][l1]
        root2 = v2 * code13.h_rows[0][l2]
        locator = root2 * root1
        checks.append((locator == m13.reduce(Quaternion(0, 0, 0, -2)),
                       "example-3: locator value of the recovered roots is -2k"))
    else:
        checks.append((False, "example-3: locator value of the recovered roots is -2k"))
    report13 = code13.decode(received13)
    corrected13 = tuple(m13.reduce(q) for q in parse_word("(3,3,1,0,0,0)"))
    checks.append((report13.kind == "double" and report13.corrected == corrected13,
                   "example-3: corrected word is (3,3,1,0,0,0)"))
    return checks


def _suite_omec7() -> List[Check]:
    code = _omec7()
    codewords = enumerate_codewords(code)
    report = exhaustive_correction_suite(code, 1, codewords)
    return [
        (len(codewords) == 2401, f"omec7: {len(codewords)} codewords enumerated"),
        (report.ok and report.trials == 2401 * 25,
         f"omec7: {report.summary()}"),
    ]


def _suite_dec13() -> List[Check]:
    code = _dec13()
    sample = dec13_codeword_sample(code)
    report = exhaustive_correction_suite(code, 2, sample)
    return [
        (report.ok and report.trials == 200 * 1009,
         f"dec13: {report.summary()}"),
    ]


def _suite_mindist() -> List[Check]:
    code7 = _omec7()
    witness7 = min_distance_at_most(syndrome_fn_for(code7), code7.n, 2, code7.modulus)
    code13 = _dec13()
    witness13 = min_distance_at_most(syndrome_fn_for(code13), code13.n, 3,
                                     code13.modulus)
    return [
        (witness7 is None, "mindist: no nonzero word of weight <= 2 is an "
                           "omec7 codeword (d >= 3)"),
        (witness13 is None, "mindist: no nonzero word of weight <= 3 is a "
                            "dec13 codeword (d >= 4)"),
    ]


def _cmd_verify(args) -> Tuple[int, str]:
    suites = {
        "tables": _suite_tables,
        "examples": _suite_examples,
        "omec7": _suite_omec7,
        "dec13": _suite_dec13,
        "mindist": _suite_mindist,
    }
    checks = suites[args.suite]()
    lines = [("PASS " if ok else "FAIL ") + text for ok, text in checks]
    passed = sum(1 for ok, _ in checks if ok)
    lines.append(f"{args.suite}: {passed}/{len(checks)} checks passed")
    return (0 if passed == len(checks) else 1), "\n".join(lines) + "\n"


_HANDLERS = {
    "tables": _cmd_tables,
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "verify": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        status, text = _HANDLERS[args.command](args)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    out_path = getattr(args, "out", None)
    if out_path:
        with open(out_path, "w", encoding="ascii") as handle:
            handle.write(text)
    return status


def entry() -> None:
    raise SystemExit(main())
