import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from qvenn.cli import main, parse_complex


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestParseComplex:
    @pytest.mark.parametrize(
        "text, value",
        [
            ("0.6", 0.6),
            ("-1", -1),
            ("0.8i", 0.8j),
            ("-i", -1j),
            ("i", 1j),
            ("0.6+0.8i", 0.6 + 0.8j),
            ("0.6-0.8i", 0.6 - 0.8j),
            ("1e-1+2e-1i", 0.1 + 0.2j),
            (".5-i", 0.5 - 1j),
        ],
    )
    def test_accepts(self, text, value):
        assert parse_complex(text) == value

    @pytest.mark.parametrize("text", ["", "abc", "1+2j", "0.6+", "1i2"])
    def test_rejects(self, text):
        with pytest.raises(Exception):
            parse_complex(text)


class TestEncode:
    def test_rep3(self, capsys):
        code, out, _ = run(capsys, "encode", "--code", "rep3", "--alpha0", "0.6", "--alpha1", "0.8")
        assert code == 0
        assert out.splitlines() == ["000: 0.6", "111: 0.8"]

    def test_five_sixteen_lines(self, capsys):
        _, out, _ = run(capsys, "encode", "--code", "five", "--alpha0", "1", "--alpha1", "0")
        lines = out.splitlines()
        assert len(lines) == 16
        assert all(line.split(": ")[1] in ("0.25", "-0.25") for line in lines)

    def test_shor9(self, capsys):
        _, out, _ = run(capsys, "encode", "--code", "shor9", "--alpha0", "0", "--alpha1", "1")
        values = [line.split(": ")[1] for line in out.splitlines()]
        assert len(values) == 8
        assert set(values) == {"0.353553391", "-0.353553391"}

    def test_json(self, capsys):
        _, out, _ = run(capsys, "encode", "--code", "rep3", "--alpha0", "0.6", "--alpha1", "0.8i",
                        "--format", "json")
        data = json.loads(out)
        assert data["amplitudes"] == {"000": [0.6, 0.0], "111": [0.0, 0.8]}

    def test_renormalization_warning(self, capsys):
        code, out, err = run(capsys, "encode", "--code", "rep3", "--alpha0", "0.6000001",
                             "--alpha1", "0.8")
        assert code == 0 and "renormalizing" in err

    def test_unnormalized_is_usage_error(self, capsys):
        code, out, err = run(capsys, "encode", "--code", "rep3", "--alpha0", "1", "--alpha1", "1")
        assert code == 1 and not out and "error" in err

    def test_bad_complex(self, capsys):
        code, _, _ = run(capsys, "encode", "--code", "rep3", "--alpha0", "x", "--alpha1", "1")
        assert code == 1

    def test_unknown_code(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["encode", "--code", "steane", "--alpha0", "1", "--alpha1", "0"])
        assert exc.value.code == 1

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "state.txt"
        code, out, _ = run(capsys, "--output", str(target), "encode", "--code", "rep3",
                           "--alpha0", "1", "--alpha1", "0")
        assert code == 0 and out == ""
        assert target.read_text() == "000: 1\n"


class TestPipeline:
    def test_five_z4(self, capsys):
        code, out, _ = run(capsys, "pipeline", "--code", "five", "--alpha0", "0.6",
                           "--alpha1", "0.8", "--error", "Z4")
        data = json.loads(out)
        assert code == 0
        assert data["syndrome"] == [-1, 1, 1, -1]
        assert data["applied"] == "Z4"
        assert data["fidelity"] == 1.0
        assert data["recovered"] == [[0.6, 0.0], [0.8, 0.0]]

    def test_rep3_identity(self, capsys):
        _, out, _ = run(capsys, "pipeline", "--code", "rep3", "--alpha0", "0.6",
                        "--alpha1", "0.8i", "--error", "I")
        data = json.loads(out)
        assert data["syndrome"] == [1, 1] and data["fidelity"] == 1.0

    def test_shor9_z3(self, capsys):
        _, out, _ = run(capsys, "pipeline", "--code", "shor9", "--alpha0", "0.7071067811865476",
                        "--alpha1", "0.7071067811865476", "--error", "Z3")
        data = json.loads(out)
        assert data["applied"] == "Z2" and data["fidelity"] == 1.0

    def test_rep3_phase_flip_reports_failure(self, capsys):
        code, out, _ = run(capsys, "pipeline", "--code", "rep3", "--alpha0", "0.7071067811865476",
                           "--alpha1", "0.7071067811865476", "--error", "Z1")
        data = json.loads(out)
        assert code == 0
        assert data["applied"] == "I" and data["fidelity"] == 0.0 and not data["success"]

    def test_uncorrectable_exit_2(self, capsys):
        code, out, err = run(capsys, "pipeline", "--code", "shor9", "--alpha0", "1",
                             "--alpha1", "0", "--error", "X1X4")
        assert code == 2 and not out and "decoding failed" in err

    def test_bad_error_string(self, capsys):
        code, _, _ = run(capsys, "pipeline", "--code", "five", "--alpha0", "1",
                         "--alpha1", "0", "--error", "Q9")
        assert code == 1

    def test_text_format(self, capsys):
        _, out, _ = run(capsys, "pipeline", "--code", "five", "--alpha0", "1", "--alpha1", "0",
                        "--error", "X1", "--format", "text")
        assert "applied:   X1" in out


class TestTableVerifyBound:
    def test_rep3_table(self, capsys):
        code, out, _ = run(capsys, "table", "--code", "rep3")
        assert code == 0
        for label in ("I", "X1", "X2", "X3"):
            assert label in out

    def test_five_json(self, capsys):
        _, out, _ = run(capsys, "table", "--code", "five", "--format", "json")
        assert len(json.loads(out)["classes"]) == 16
        _, again, _ = run(capsys, "table", "--code", "five", "--format", "json")
        assert again == out

    def test_verify(self, capsys):
        code, out, err = run(capsys, "verify")
        assert code == 0
        assert out.strip() == "five: 1 known erratum (Y2); rep3: OK; shor9: OK"
        assert "X5" in err

    def test_verify_json(self, capsys):
        _, out, _ = run(capsys, "verify", "--format", "json")
        data = json.loads(out)
        assert data["five"]["discrepancies"] == [
            {"error": "Y2", "printed": [-1, -1, 1, 1], "derived": [-1, -1, 1, -1], "known": True}
        ]

    @pytest.mark.parametrize(
        "args, text",
        [(("5", "1", "1"), "32 ≤ 32 PERFECT"), (("9", "1", "1"), "56 ≤ 512 SATISFIED"),
         (("3", "1", "1"), "20 > 8 VIOLATED")],
    )
    def test_bound(self, capsys, args, text):
        code, out, _ = run(capsys, "bound", *args)
        assert code == 0 and out.strip() == text

    def test_bound_invalid(self, capsys):
        code, _, _ = run(capsys, "bound", "3", "5", "1")
        assert code == 1


class TestVenn:
    def test_rep3_ascii(self, capsys):
        code, out, _ = run(capsys, "venn", "--code", "rep3", "--format", "ascii")
        assert code == 0 and "X1" in out and "X3" in out

    def test_five_svg_file(self, capsys, tmp_path):
        target = tmp_path / "five.svg"
        code, out, _ = run(capsys, "venn", "--code", "five", "--format", "svg", "-o", str(target),
                           "--highlight", "1,-1,-1,1")
        assert code == 0 and out == ""
        ET.fromstring(target.read_text())

    def test_shor9_unsupported(self, capsys):
        code, out, err = run(capsys, "venn", "--code", "shor9")
        assert code == 3 and not out
        assert err.strip() == "8 stabilizers: region listing only (use table)"

    def test_bad_highlight(self, capsys):
        code, _, _ = run(capsys, "venn", "--code", "five", "--format", "svg", "--highlight", "1,1")
        assert code == 1


class TestSimulate:
    ARGS = ("simulate", "--code", "five", "--p", "0.1", "--trials", "200", "--seed", "42")

    def test_deterministic_bytes(self, capsys):
        _, first, _ = run(capsys, *self.ARGS)
        _, second, _ = run(capsys, *self.ARGS)
        assert first == second
        data = json.loads(first)
        assert data["conditional_success_rate"] == 1.0

    def test_noiseless(self, capsys):
        _, out, _ = run(capsys, "simulate", "--code", "five", "--p", "0", "--trials", "10",
                        "--seed", "1")
        assert json.loads(out)["success_rate"] == 1.0

    def test_log(self, capsys, tmp_path):
        log = tmp_path / "trials.jsonl"
        run(capsys, *self.ARGS, "--log", str(log))
        lines = log.read_text().splitlines()
        assert len(lines) == 200
        assert json.loads(lines[0])["trial"] == 0

    def test_fixed_alpha(self, capsys):
        code, out, _ = run(capsys, *self.ARGS, "--alpha0", "0.6", "--alpha1", "0.8i")
        assert code == 0 and json.loads(out)["trials"] == 200

    def test_half_alpha_is_usage_error(self, capsys):
        code, _, _ = run(capsys, *self.ARGS, "--alpha0", "1")
        assert code == 1

    def test_bad_p(self, capsys):
        code, _, _ = run(capsys, "simulate", "--code", "five", "--p", "2", "--trials", "1",
                         "--seed", "1")
        assert code == 1

    def test_seed_required(self):
        with pytest.raises(SystemExit) as exc:
            main(["simulate", "--code", "five", "--p", "0.1", "--trials", "1"])
        assert exc.value.code == 1


def test_unknown_subcommand():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qvenn.cli", "bound", "5", "1", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "32 ≤ 32 PERFECT"
