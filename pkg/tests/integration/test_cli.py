import io
import json

import pytest

from app.main import run


def invoke(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestFlagCommand:
    def test_tilting_flag_json(self):
        code, out, _ = invoke("flag", "--kind", "tilting", "--zeta", "generic", "--weight", "1,-1,-1")
        assert code == 0
        assert json.loads(out) == {
            "-2,-2,-2": 1,
            "-1,-1,-1": 2,
            "-1,-1,1": 1,
            "-1,1,-1": 1,
            "0,0,0": 1,
            "1,-1,-1": 1,
        }

    def test_json_keys_are_lexicographic(self):
        _, out, _ = invoke("flag", "--zeta", "generic", "--weight", "1,-1,-1")
        keys = list(json.loads(out))
        assert keys[0] == "-2,-2,-2" and keys[-1] == "1,-1,-1"

    def test_output_is_deterministic(self):
        first = invoke("flag", "--zeta", "3/2", "--weight", "4,1,6")
        second = invoke("flag", "--zeta", "3/2", "--weight", "4,1,6")
        assert first == second

    def test_negative_weight_syntax(self):
        code, out, _ = invoke("flag", "--zeta", "generic", "--weight=-2,-2,-2")
        assert code == 0
        assert json.loads(out) == {"-3,-3,-3": 1, "-2,-2,-2": 1}

    def test_text_format_is_height_descending(self):
        code, out, _ = invoke("flag", "--format", "text", "--zeta", "generic", "--weight", "1,-1,-1")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "1 M(1,-1,-1)"
        assert lines[-1] == "1 M(-2,-2,-2)"
        assert "2 M(-1,-1,-1)" in lines

    def test_projective(self):
        code, out, _ = invoke("flag", "--kind", "projective", "--zeta", "generic", "--weight", "1,1,1")
        assert code == 0
        assert json.loads(out) == {"1,1,1": 1, "2,2,2": 1}


class TestOtherCommands:
    def test_comp(self):
        code, out, _ = invoke("comp", "--zeta", "generic", "--weight", "0,0,0")
        assert code == 0
        factors = json.loads(out)
        assert len(factors) == 5
        assert factors["-1,-1,-1"] == 2

    def test_comp_scan(self):
        _, closed, _ = invoke("comp", "--zeta", "generic", "--weight", "0,0,0")
        _, scanned, _ = invoke("comp", "--zeta", "generic", "--weight", "0,0,0", "--method", "scan")
        assert closed == scanned

    def test_classify(self):
        code, out, _ = invoke("classify", "--zeta", "2/1", "--weight", "0,2,1")
        assert code == 0
        payload = json.loads(out)
        assert payload["block"] == "B_1"
        assert payload["index"] == {"k": 1, "n": 0, "signs": "o++"}
        assert payload["regime"] == "kd1"
        assert payload["casimir"] == "6"

    def test_char(self):
        code, out, _ = invoke("char", "--kind", "simple", "--zeta", "generic", "--weight", "1,1,1", "--height", "8")
        assert code == 0
        coefficients = {tuple(item["weight"]): item["coefficient"] for item in json.loads(out)}
        assert coefficients[(0, 0, 0)] == 3

    def test_blocks(self):
        code, out, _ = invoke("blocks", "--zeta", "generic", "--k", "0", "--range", "1")
        assert code == 0
        assert len(json.loads(out)) == 9

    def test_table(self):
        code, out, _ = invoke("table", "--zeta", "3/2")
        assert code == 0
        assert json.loads(out)["field"] == "3/2"

    def test_verify_jacobi(self):
        code, out, _ = invoke("verify", "--suite", "jacobi", "--zeta", "generic")
        assert code == 0
        report = json.loads(out)
        assert report["passed"] == report["total"]


class TestExitCodes:
    def test_help(self):
        assert invoke("--help")[0] == 0

    def test_unknown_command(self):
        assert invoke("frobnicate")[0] == 2

    @pytest.mark.parametrize(
        "argv",
        [
            ("flag", "--zeta", "generic", "--weight", "1,2"),
            ("flag", "--zeta", "2/4", "--weight", "1,1,1"),
            ("flag", "--zeta", "banana", "--weight", "1,1,1"),
            ("flag", "--zeta", "generic"),
            ("blocks", "--zeta", "generic", "--k", "1"),
        ],
    )
    def test_usage_errors(self, argv):
        code, out, err = invoke(*argv)
        assert code == 2
        assert out == ""
        assert json.loads(err)["success"] is False

    def test_computation_error(self, mocker):
        from app.core.exceptions import PoleException

        mocker.patch("app.api.commands.tilting_flag", side_effect=PoleException("Denominator vanishes at zeta=1/1"))
        code, _, err = invoke("flag", "--zeta", "1/1", "--weight", "1,1,1")
        assert code == 3
        assert "vanishes" in json.loads(err)["message"]

    def test_verification_failure(self, mocker):
        from app.features.verify.schema import Failure, Report

        report = Report(suite="flags", total=2, passed=1, failed=1, failures=[Failure(detail="mismatch")])
        mocker.patch("app.api.commands.run_request", return_value=report)
        code, out, _ = invoke("verify", "--suite", "flags", "--regime", "generic")
        assert code == 1
        assert json.loads(out)["failed"] == 1
