"""Command-line interface: exit codes, formats, determinism, file IO."""

import json

import pytest

from qeuler.cli import main
from qeuler.series import LaurentSeries
from qeuler.qfield import QR_ONE


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSeriesCommand:
    def test_exq_matches_builder(self, capsys):
        code, out, _ = run(capsys, "series", "--which", "exq", "--prec", "6")
        assert code == 0
        obj = json.loads(out)
        from qeuler.constructions import euler_hat_xq

        assert LaurentSeries.from_json(obj) == euler_hat_xq(6)

    def test_eq_series(self, capsys):
        code, out, _ = run(capsys, "series", "--which", "Eq", "--prec", "5")
        assert code == 0
        obj = json.loads(out)
        assert obj["val"] == 0 and obj["prec"] == 5

    def test_pn_series(self, capsys):
        code, out, _ = run(
            capsys, "series", "--which", "pn", "--P", "one", "--n", "3", "--prec", "8"
        )
        assert code == 0
        obj = json.loads(out)
        from qeuler.constructions import build_Pn
        from qeuler.verify import resolve_base_series

        expect = build_Pn(resolve_base_series("one"), 3).truncate(8)
        assert LaurentSeries.from_json(obj) == expect

    def test_q_value_specialization(self, capsys):
        code, out, _ = run(
            capsys, "series", "--which", "eq", "--prec", "5", "--q-value", "1"
        )
        assert code == 0
        obj = json.loads(out)
        # at q = 1 the monomial analog collapses to the alternating series
        assert obj["coeffs"][1]["num"] == ["-1/1"]

    def test_unknown_series_name(self, capsys):
        code, _, err = run(capsys, "series", "--which", "nope")
        assert code == 2
        assert "error" in err


class TestOperatorAndNewton:
    def test_newton_lnn_cleared(self, capsys):
        code, out, _ = run(capsys, "newton", "--builtin", "Lnn", "--n", "2", "--cleared")
        assert code == 0
        obj = json.loads(out)
        assert obj["slopes"] == [[1, 1, 1], [2, 1, 1]]
        assert obj["order"] == {"kind": "summable", "levels": [1, 2]}

    def test_newton_euler(self, capsys):
        code, out, _ = run(capsys, "newton", "--builtin", "euler")
        assert code == 0
        obj = json.loads(out)
        assert obj["order"]["levels"] == [1]

    def test_operator_roundtrip(self, capsys):
        from qeuler.qdiff import QDiffOperator

        code, out, _ = run(capsys, "operator", "--builtin", "e2", "--prec", "8")
        assert code == 0
        QDiffOperator.from_json(json.loads(out))  # schema is loadable

    def test_unknown_builtin(self, capsys):
        code, _, err = run(capsys, "operator", "--builtin", "nope")
        assert code == 2


class TestVerifyCommand:
    def test_pass_exit_zero(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--identity", "fn", "--P", "one", "--n", "3", "--prec", "16"
        )
        assert code == 0
        assert json.loads(out)["status"] == "pass"

    def test_unknown_identity_exit_two(self, capsys):
        code, _, err = run(capsys, "verify", "--identity", "nope")
        assert code == 2
        assert "error" in err

    def test_verify_all(self, capsys):
        code, out, _ = run(capsys, "verify-all", "--prec", "16")
        assert code == 0
        reports = json.loads(out)
        assert all(r["status"] == "pass" for r in reports)


class TestValidationAndIO:
    def test_prec_too_small(self, capsys):
        code, _, err = run(capsys, "series", "--which", "eq", "--prec", "2")
        assert code == 2

    def test_n_must_be_positive(self, capsys):
        code, _, err = run(capsys, "series", "--which", "pn", "--n", "0")
        assert code == 2

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "out.json"
        code, out, _ = run(
            capsys, "series", "--which", "eq", "--prec", "5", "--output", str(target)
        )
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["prec"] == 5

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, "series", "--which", "eq", "--prec", "5", "--format", "text")
        assert code == 0
        assert "val: 0" in out

    def test_p_file_input(self, capsys, tmp_path):
        series = LaurentSeries.from_x_poly([QR_ONE, QR_ONE], prec=12)
        p_file = tmp_path / "p.json"
        p_file.write_text(json.dumps(series.to_json()))
        code, out, _ = run(
            capsys,
            "series",
            "--which",
            "pn",
            "--P-file",
            str(p_file),
            "--n",
            "2",
            "--prec",
            "8",
        )
        assert code == 0
        from qeuler.constructions import build_Pn

        expect = build_Pn(series, 2).truncate(8)
        assert LaurentSeries.from_json(json.loads(out)) == expect

    def test_deterministic_output(self, capsys):
        _, out1, _ = run(capsys, "newton", "--builtin", "Lnn", "--n", "3", "--cleared")
        _, out2, _ = run(capsys, "newton", "--builtin", "Lnn", "--n", "3", "--cleared")
        assert out1 == out2
