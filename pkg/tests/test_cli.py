import pytest

from quatcodes.cli import main

TABLE_I = (
    "0\t1\n1\t1-i-j-k\n2\t-i-j-k\n3\t-1\n"
    "4\t-1+i+j+k\n5\ti+j+k\n6\t1\n7\t1-i-j-k\n"
)

OMEC_FLAGS = ["--family", "omec", "--pi", "2+i+j+k", "--alpha", "1-i-j-k"]
DEC_FLAGS = ["--family", "dec", "--pi", "1+2i+2j+2k", "--beta", "2"]


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestTables:
    def test_table_i(self, capsys):
        status, out, _ = run(capsys, "tables", "--pi", "2+i+j+k",
                             "--alpha", "1-i-j-k", "--count", "8")
        assert status == 0
        assert out == TABLE_I

    def test_table_ii_rows(self, capsys):
        status, out, _ = run(capsys, "tables", "--pi", "1+2i+2j+2k",
                             "--beta", "2", "--count", "16")
        assert status == 0
        lines = out.splitlines()
        assert lines[4] == "4\t3"
        assert lines[7] == "7\t-2"
        assert lines[10] == "10\t-3"
        assert lines[15] == "15\t1-i-j-k"

    def test_single_row(self, capsys):
        status, out, _ = run(capsys, "tables", "--pi", "2+i+j+k",
                             "--alpha", "1-i-j-k", "--count", "1")
        assert status == 0 and out == "0\t1\n"

    def test_rejects_bad_modulus(self, capsys):
        status, _, err = run(capsys, "tables", "--pi", "1+i",
                             "--alpha", "1", "--count", "2")
        assert status == 2
        assert "not a quaternion prime" in err

    def test_requires_exactly_one_generator(self, capsys):
        status, _, err = run(capsys, "tables", "--pi", "2+i+j+k", "--count", "2")
        assert status == 2
        status, _, err = run(capsys, "tables", "--pi", "2+i+j+k",
                             "--alpha", "1", "--beta", "2", "--count", "2")
        assert status == 2


class TestEncode:
    def test_worked_message(self, capsys):
        status, out, _ = run(capsys, "encode", *OMEC_FLAGS, "(1,-1+i+j+k)")
        assert status == 0
        assert out == "(1-i-j-k,1,-1+i+j+k)\n"

    def test_zero_message(self, capsys):
        status, out, _ = run(capsys, "encode", *OMEC_FLAGS, "(0,0)")
        assert status == 0 and out == "(0,0,0)\n"

    def test_dec_generator_word(self, capsys):
        status, out, _ = run(capsys, "encode", *DEC_FLAGS, "(1,0,0,0)")
        assert status == 0 and out == "(3,3,1,0,0,0)\n"

    def test_wrong_length_exits_two(self, capsys):
        status, _, err = run(capsys, "encode", *OMEC_FLAGS, "(1,0,0)")
        assert status == 2
        assert "expected n-1 = 2 symbols" in err


class TestDecode:
    def test_single_error_example(self, capsys):
        status, out, _ = run(capsys, "decode", *OMEC_FLAGS,
                             "(1-i-j-k,1+i,-1+i+j+k)")
        assert status == 0
        assert out == "single; position 1 value i; corrected (1-i-j-k,1,-1+i+j+k)\n"

    def test_double_error_example(self, capsys):
        status, out, _ = run(capsys, "decode", *DEC_FLAGS, "(3,3,1,1,k,0)")
        assert status == 0
        assert out == ("double; position 3 value 1; position 4 value k; "
                       "corrected (3,3,1,0,0,0)\n")

    def test_codeword(self, capsys):
        status, out, _ = run(capsys, "decode", *DEC_FLAGS, "(3,3,1,0,0,0)")
        assert status == 0
        assert out.startswith("no error")

    def test_uncorrectable_exits_one(self, capsys):
        status, out, _ = run(capsys, "decode", *DEC_FLAGS, "(1+i,0,0,0,0,0)")
        assert status == 1
        assert out == "uncorrectable\n"

    def test_parse_error_names_token(self, capsys):
        status, _, err = run(capsys, "decode", *OMEC_FLAGS, "(1,zz,0)")
        assert status == 2
        assert "zz" in err

    def test_wrong_arity_exits_two(self, capsys):
        status, _, err = run(capsys, "decode", *OMEC_FLAGS, "(1,0)")
        assert status == 2
        assert "expected 3 symbols" in err


class TestVerify:
    def test_tables_suite(self, capsys):
        status, out, _ = run(capsys, "verify", "tables")
        assert status == 0
        assert "PASS table-i: 8 rows match" in out
        assert "PASS table-ii: 16 rows match" in out
        assert out.strip().endswith("tables: 2/2 checks passed")

    def test_examples_suite(self, capsys):
        status, out, _ = run(capsys, "verify", "examples")
        assert status == 0
        assert "FAIL" not in out
        assert "example-1" in out and "example-3" in out

    def test_mindist_suite(self, capsys):
        status, out, _ = run(capsys, "verify", "mindist")
        assert status == 0
        assert "d >= 3" in out and "d >= 4" in out

    def test_unknown_suite_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            main(["verify", "bogus"])
        assert exc_info.value.code == 2

    def test_deterministic_output(self, capsys):
        _, first, _ = run(capsys, "verify", "examples")
        _, second, _ = run(capsys, "verify", "examples")
        assert first == second


class TestOutFile:
    def test_out_writes_same_bytes(self, capsys, tmp_path):
        path = tmp_path / "report.txt"
        status, out, _ = run(capsys, "verify", "tables", "--out", str(path))
        assert status == 0
        assert path.read_bytes() == out.encode("ascii")

    def test_out_for_decode(self, capsys, tmp_path):
        path = tmp_path / "decoded.txt"
        status, out, _ = run(capsys, "decode", *DEC_FLAGS, "(3,3,1,1,k,0)",
                             "--out", str(path))
        assert status == 0
        assert path.read_text() == out
