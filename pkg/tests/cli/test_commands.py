"""Test the command-line surface end to end through run()."""

import json

import pytest

from cli.main import EXIT_FAIL, EXIT_INPUT, EXIT_OK, run

T41 = {"type": "4.1", "g": 1, "betas": ["2", "3"], "qs": [2]}
T41_BAD_Q = {"type": "4.1", "g": 1, "betas": ["2", "3"], "qs": [3]}
T2 = {"type": "2", "g": 1, "betas": ["1+0*tau", "0+1*tau"], "qs": [], "tau": [1, 1, 1, 1, 1, 1]}
T42 = {"type": "4.2", "g": 0, "betas": ["(1,0)", "(1,1)"], "qs": []}


@pytest.fixture
def spec_file(tmp_path):
    def write(data, name="spec.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return write


class TestSeriesCommand:
    def test_both_methods_verified(self, spec_file, capsys):
        """Formula series followed by VERIFIED."""
        code = run(["series", "--spec", spec_file(T41), "--bound", "7", "--method", "both"])
        lines = capsys.readouterr().out.splitlines()
        assert code == EXIT_OK
        assert lines[0] == "# bound=7 complete=true"
        assert lines[1:8] == [f"{v}\t1" for v in [0, 2, 3, 4, 5, 6, 7]]
        assert lines[8] == "VERIFIED"

    def test_enumeration_only(self, spec_file, capsys):
        """--method enum prints the enumerated series."""
        assert run(["series", "--spec", spec_file(T41), "--bound", "4", "--method", "enum"]) == EXIT_OK
        assert capsys.readouterr().out == "# bound=4 complete=true\n0\t1\n2\t1\n3\t1\n4\t1\n"

    def test_golden_ratio(self, spec_file, capsys):
        """Type 2 values print in tau order."""
        assert run(["series", "--spec", spec_file(T2), "--bound", "2", "--method", "both"]) == EXIT_OK
        out = capsys.readouterr().out.splitlines()
        assert [line.split("\t")[0] for line in out[1:5]] == ["0+0*tau", "1+0*tau", "0+1*tau", "2+0*tau"]

    def test_lex_box(self, spec_file, capsys):
        """Z^2 series print inside the box."""
        assert run(["series", "--spec", spec_file(T42), "--bound", "(2,2)"]) == EXIT_OK
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "# bound=(2,2) complete=true"
        assert len(out) == 7

    def test_divisorial_enumeration_is_input_error(self, spec_file, capsys):
        """Enumerating Type 0 exits with an input error."""
        spec = spec_file({"type": "0", "g": 1, "betas": ["2", "3"], "qs": [2]})
        assert run(["series", "--spec", spec, "--bound", "6", "--method", "enum"]) == EXIT_INPUT
        assert "DivisorialUnsupported" in capsys.readouterr().err

    def test_divisorial_both_writes_nothing_to_stdout(self, spec_file, capsys):
        """An input error on the enumeration side leaves stdout empty."""
        spec = spec_file({"type": "0", "g": 1, "betas": ["2", "3"], "qs": [2]})
        assert run(["series", "--spec", spec, "--bound", "6", "--method", "both"]) == EXIT_INPUT
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "DivisorialUnsupported" in captured.err

    def test_uncertified_type_one_both_writes_nothing_to_stdout(self, spec_file, capsys):
        """Type 1 without a next-beta certificate cannot be enumerated."""
        spec = spec_file({"type": "1", "betas": ["1", "3/2"], "qs": [2]})
        assert run(["series", "--spec", spec, "--bound", "3", "--method", "both"]) == EXIT_INPUT
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "MissingNextBetaBound" in captured.err

    def test_divisorial_formula(self, spec_file, capsys):
        """The formula alone serves Type 0."""
        spec = spec_file({"type": "0", "g": 1, "betas": ["2", "3"], "qs": [2]})
        assert run(["series", "--spec", spec, "--bound", "6"]) == EXIT_OK
        assert "6\t2" in capsys.readouterr().out.splitlines()


class TestVerifyCommand:
    def test_pass(self, spec_file, capsys):
        """Unique representation up to 12 passes."""
        assert run(["verify", "--spec", spec_file(T41), "--bound", "12"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "PASS (12 values checked)"

    def test_wrong_q_fails_at_six(self, spec_file, capsys):
        """A wrong q fails with the first colliding value."""
        assert run(["verify", "--spec", spec_file(T41_BAD_Q), "--bound", "12"]) == EXIT_FAIL
        out = capsys.readouterr().out.splitlines()
        assert out[0].startswith("FAIL at 6")
        assert out[1] == "6: 2 admissible (0,2) (3,0)"


class TestOtherCommands:
    def test_classify_from_declared_type(self, spec_file, capsys):
        """Without a block the declared type's row is used."""
        assert run(["classify", "--spec", spec_file(T2)]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "candidates: 2"

    def test_classify_shared_row(self, spec_file, capsys):
        """Types 3 and 4.2 share one row."""
        data = dict(T42, classification={"rank": 2, "rational_rank": 2, "dimension": 0, "discrete": True})
        assert run(["classify", "--spec", spec_file(data)]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "candidates: 3, 4.2"

    def test_classify_mismatch(self, spec_file, capsys):
        """A declared type outside the candidates fails."""
        data = dict(T41, classification={"rank": 1, "rational_rank": 2, "dimension": 0, "discrete": False})
        assert run(["classify", "--spec", spec_file(data)]) == EXIT_FAIL

    def test_q(self, spec_file, capsys):
        """Each piece prints with its p and q."""
        data = {"type": "4.1", "g": 1, "betas": ["4", "9"], "pieces": [[2, 3]]}
        assert run(["q", "--spec", spec_file(data)]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "[2,3]\tp=9\tq=4"

    def test_q_without_pieces(self, spec_file):
        """The q command needs pieces."""
        assert run(["q", "--spec", spec_file(T41)]) == EXIT_INPUT

    def test_factors(self, spec_file, capsys):
        """The product prints on one line."""
        assert run(["factors", "--spec", spec_file(T41)]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "1/(1-t^2) * (1-t^6)/(1-t^3)"

    def test_oracle(self, spec_file, capsys):
        """Every representation of each value is listed."""
        assert run(["oracle", "--spec", spec_file(T41), "--bound", "6"]) == EXIT_OK
        assert "6\t(0,2) (3,0)" in capsys.readouterr().out.splitlines()

    def test_represent(self, spec_file, capsys):
        """A member prints with its representation."""
        assert run(["represent", "--spec", spec_file(T41), "--value", "7"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "7\t(2,1)"

    def test_represent_gap(self, spec_file, capsys):
        """A gap prints "not in S" and fails."""
        assert run(["represent", "--spec", spec_file(T41), "--value", "1"]) == EXIT_FAIL
        assert capsys.readouterr().out.strip() == "1\tnot in S"


class TestInputErrors:
    def test_invalid_spec(self, spec_file, capsys):
        """Validation errors go to stderr with exit 2."""
        spec = spec_file({"type": "4.1", "g": 1, "betas": ["2", "3"], "qs": []})
        assert run(["series", "--spec", spec, "--bound", "5"]) == EXIT_INPUT
        assert "BadQsLength" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        """A missing spec file is an input error."""
        assert run(["verify", "--spec", str(tmp_path / "absent.json"), "--bound", "5"]) == EXIT_INPUT

    def test_bad_bound(self, spec_file):
        """A bound outside the value group is an input error."""
        assert run(["series", "--spec", spec_file(T41), "--bound", "tau"]) == EXIT_INPUT

    def test_unknown_command(self):
        """Unknown commands exit 2."""
        assert run(["integrate"]) == EXIT_INPUT

    def test_malformed_json(self, tmp_path, capsys):
        """JSON errors name the line."""
        path = tmp_path / "broken.json"
        path.write_text('{"type": "4.1",\n "betas": [2 3]}', encoding="utf-8")
        assert run(["factors", "--spec", str(path)]) == EXIT_INPUT
        assert "line 2" in capsys.readouterr().err
