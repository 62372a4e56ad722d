"""Acceptance suite: every criterion is exact (integer arithmetic throughout).

Run with `pytest tests/test_acceptance.py -v -s` to see one line per
criterion.  The heavy criteria (6 and 7) are exhaustive over their full
stated spaces.
"""

import random

from quatcodes import (
    Modulus,
    Quaternion,
    enumerate_codewords,
    exhaustive_correction_suite,
    min_distance_at_most,
    qm_distance,
    syndrome_fn_for,
    units,
)
from quatcodes.cli import dec13_codeword_sample
from quatcodes.textio import format_quaternion, parse_quaternion

from conftest import res, word

TABLE_I = ["1", "1-i-j-k", "-i-j-k", "-1", "-1+i+j+k", "i+j+k", "1", "1-i-j-k"]
TABLE_II = ["1", "2", "-2+i+j+k", "1-i-j-k", "3", "i+j+k", "-1", "-2",
            "2-i-j-k", "-1+i+j+k", "-3", "-i-j-k", "1", "2", "-2+i+j+k",
            "1-i-j-k"]


def _ok(number: int, text: str) -> None:
    print(f"ACCEPTANCE {number} PASS: {text}")


def test_criterion_1_table_i(mod7):
    alpha = res(mod7, "1-i-j-k")
    rows = [format_quaternion((alpha ** s).rep) for s in range(8)]
    assert rows == TABLE_I
    _ok(1, "powers alpha^0..alpha^7 match all 8 reference rows exactly")


def test_criterion_2_table_ii(mod13):
    beta = res(mod13, "2")
    rows = [format_quaternion((beta ** s).rep) for s in range(16)]
    assert rows == TABLE_II
    assert rows[4] == "3" and rows[6] == "-1" and rows[7] == "-2" and rows[10] == "-3"
    _ok(2, "powers beta^0..beta^15 match all 16 reference rows exactly")


def test_criterion_3_residue_counts(mod3, mod7, mod13):
    assert len(mod3.residues) == 9
    assert len(mod7.residues) == 49
    assert len(mod13.residues) == 169
    unit_classes = {mod3.reduce(q).key for q in [Quaternion()] + list(units())}
    assert {r.key for r in mod3.residues} == unit_classes
    _ok(3, "residue counts 9/49/169; norm-3 residues are the unit classes")


def test_criterion_4_single_error_example(code7, mod7):
    received = word(mod7, "(1-i-j-k,1+i,-1+i+j+k)")
    syndrome = code7.syndrome(received)
    assert syndrome == res(mod7, "1+i+j-k")
    i_unit = res(mod7, "i")
    assert i_unit * code7.alpha == syndrome
    assert code7.alpha in syndrome.left_associates()
    report = code7.decode(received)
    assert report.kind == "single"
    assert report.errors == ((1, i_unit),)
    assert report.corrected == word(mod7, "(1-i-j-k,1,-1+i+j+k)")
    _ok(4, "single-error example: syndrome 1+i+j-k = i*alpha, error i at "
           "position 1, corrected word reproduced")


def test_criterion_5_double_error_example(code13, mod13):
    received = word(mod13, "(3,3,1,1,k,0)")
    s1, s3 = code13.syndromes(received)
    assert mod13.congruent(s1.rep, Quaternion(1, -1, -1, 2))
    assert mod13.congruent(s3.rep, Quaternion(-1, 1, 1, 2))
    assert code13.classify(s1, s3)[0] == "double"
    located = code13.locate_double(s1, s3)
    assert located == (3, mod13.one, 4, res(mod13, "k"))
    l1, v1, l2, v2 = located
    locator = (v2 * code13.h_rows[0][l2]) * (v1 * code13.h_rows[0][l1])
    assert locator == res(mod13, "-2k")
    report = code13.decode(received)
    assert report.kind == "double"
    assert report.errors == ((3, mod13.one), (4, res(mod13, "k")))
    assert report.corrected == word(mod13, "(3,3,1,0,0,0)")
    _ok(5, "double-error example: syndromes 1-i-j+2k/-1+i+j+2k, single test "
           "fails, locator -2k, errors {(3,1),(4,k)}, corrected (3,3,1,0,0,0)")


def test_criterion_6_exhaustive_single_correction(code7):
    codewords = enumerate_codewords(code7)
    assert len(codewords) == 2401
    report = exhaustive_correction_suite(code7, 1, codewords)
    assert report.trials == 2401 * 25  # 24 weight-one patterns + the empty one
    assert report.decoder_failures == 0, report.mismatches[:5]
    assert report.oracle_failures == 0
    assert report.disagreements == 0
    _ok(6, f"one-error correction at p=7: {report.trials} trials, 100% recovery")


def test_criterion_7_double_correction_with_oracle(code13):
    sample = dec13_codeword_sample(code13, 200)
    report = exhaustive_correction_suite(code13, 2, sample)
    assert report.trials == 200 * 1009
    assert report.decoder_failures == 0, report.mismatches[:5]
    assert report.oracle_failures == 0
    assert report.disagreements == 0
    _ok(7, f"two-error correction at p=13: {report.trials} trials, decoder "
           "and brute-force oracle both 100%, pattern-for-pattern agreement")


def test_criterion_8_minimum_distance(code7, code13, mod7, mod13):
    assert min_distance_at_most(syndrome_fn_for(code7), code7.n, 2, mod7) is None
    assert min_distance_at_most(syndrome_fn_for(code13), code13.n, 3, mod13) is None
    _ok(8, "no nonzero word of weight <= 2 (p=7) or <= 3 (p=13) has zero "
           "syndromes: d >= 3 and d >= 4 certified exhaustively")


def test_criterion_9_negacyclic_closure(code13):
    sample = dec13_codeword_sample(code13, 200)
    for cw in sample:
        shifted = code13.negacyclic_shift(cw)
        assert code13.is_codeword(shifted)
        current = cw
        for _ in range(2 * code13.n):
            current = code13.negacyclic_shift(current)
        assert current == cw
    _ok(9, "negacyclic shift maps all 200 test codewords to codewords; "
           "2n shifts restore the original")


def test_criterion_10_property_suites(mod7, mod13):
    rng = random.Random(2026)

    def rand_q(bound=60):
        return Quaternion(*(rng.randint(-bound, bound) for _ in range(4)))

    for _ in range(1000):
        a, b = rand_q(), rand_q()
        assert (a * b).norm() == a.norm() * b.norm()

    for _ in range(1000):
        a, b = rand_q(), rand_q()
        assert (a * b).conjugate() == b.conjugate() * a.conjugate()

    for m in (mod7, mod13):
        for _ in range(500):
            q = rand_q()
            r = m.reduce(q)
            assert m.reduce(r.rep) == r
            shift = Quaternion(*(rng.randint(-5, 5) for _ in range(4)))
            assert m.reduce(q + shift * m.pi) == r

    for _ in range(1000):
        x, y, z = (mod13.reduce(rand_q()) for _ in range(3))
        assert qm_distance(x, z) <= qm_distance(x, y) + qm_distance(y, z)

    for _ in range(1000):
        q = Quaternion(*(rng.randint(-99, 99) for _ in range(4)))
        assert parse_quaternion(format_quaternion(q)) == q

    _ok(10, "property suites (norm multiplicativity, conjugation reversal, "
            "reduction idempotence/class-constancy, triangle inequality, "
            "parse/print round-trip): 1000+ cases each, zero failures")
