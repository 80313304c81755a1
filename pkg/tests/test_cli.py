"""Command line behavior: parsing, emission formats, exit codes."""

import json
import math

import pytest

from rfho.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def rows(csv_text):
    lines = csv_text.strip().splitlines()
    header = lines[0].split(",")
    parsed = [[float(v) for v in line.split(",")] for line in lines[1:]]
    return header, parsed


class TestHermite:
    def test_json_table(self, capsys):
        code, out = run(capsys, "hermite", "--n", "2")
        assert code == 0
        members = json.loads(out)
        assert [m["n"] for m in members] == [0, 1, 2]
        assert len(members[2]["terms"]) == 2
        assert members[0]["terms"][0]["coeff"] == ["1"]

    def test_fixed_index_table(self, capsys):
        code, out = run(capsys, "hermite", "--n", "4", "--alpha", "3/2")
        assert code == 0
        members = json.loads(out)
        exps = {t["exponent"] for t in members[4]["terms"]}
        assert exps == {"3", "5/4", "-1/2", "-9/4"}

    def test_csv_table(self, capsys):
        code, out = run(capsys, "hermite", "--n", "1", "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "n,coeff,sgn,j,m"

    def test_n_cap(self, capsys):
        code, _ = run(capsys, "hermite", "--n", "21")
        assert code == 2

    def test_bad_rational_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["hermite", "--n", "2", "--alpha", "fast"])
        assert exc.value.code == 2


class TestState:
    def test_ground_sample(self, capsys):
        code, out = run(capsys, "state", "--n", "0", "--alpha", "1", "--grid", "-1:1:3")
        assert code == 0
        header, data = rows(out)
        assert header == ["k", "re", "im"]
        assert len(data) == 3
        k1 = data[2]
        assert k1[0] == 1.0
        assert k1[1] == pytest.approx(math.exp(-2 / 3), abs=1e-15)
        assert k1[2] == 0.0

    def test_odd_member_zero_real_column(self, capsys):
        code, out = run(capsys, "state", "--n", "1", "--alpha", "2", "--grid", "0:1:2")
        assert code == 0
        lines = out.strip().splitlines()[1:]
        assert all(line.split(",")[1] == "0" for line in lines)
        last = lines[-1].split(",")
        assert float(last[2]) == pytest.approx(2 * math.exp(-0.5), abs=1e-15)

    def test_singular_origin_row_omitted(self, capsys):
        code, out = run(capsys, "state", "--n", "2", "--alpha", "1", "--grid", "-1:1:5")
        assert code == 0
        _, data = rows(out)
        assert len(data) == 4
        assert all(r[0] != 0.0 for r in data)

    def test_x_space_gaussian(self, capsys):
        code, out = run(capsys, "state", "--n", "0", "--alpha", "2",
                        "--space", "x", "--grid", "0:1:2")
        assert code == 0
        _, data = rows(out)
        assert data[0][1] == pytest.approx(math.sqrt(2 * math.pi), rel=1e-12)

    def test_divergent_transform_fails_cleanly(self, capsys):
        code = main(["state", "--n", "4", "--alpha", "1", "--space", "x",
                     "--grid", "0:1:2"])
        err = capsys.readouterr().err
        assert code == 1
        assert "integrable" in err

    def test_bad_grid_exits_2(self):
        for bad in ("5:1:10", "0:1:1", "0:1", "a:b:c"):
            with pytest.raises(SystemExit) as exc:
                main(["state", "--n", "0", "--alpha", "1", "--grid", bad])
            assert exc.value.code == 2


class TestEigenvalue:
    def test_classical_plateau(self, capsys):
        code, out = run(capsys, "eigenvalue", "--n", "0", "--alpha", "2",
                        "--grid", "-2:2:5")
        assert code == 0
        _, data = rows(out)
        assert all(r[1] == pytest.approx(0.5) and r[2] == 0.0 for r in data)

    def test_quarter_at_k4(self, capsys):
        code, out = run(capsys, "eigenvalue", "--n", "0", "--alpha", "1",
                        "--grid", "4:5:2")
        assert code == 0
        _, data = rows(out)
        assert data[0][1] == pytest.approx(0.25)

    def test_skewed_value(self, capsys):
        code, out = run(capsys, "eigenvalue", "--n", "0", "--alpha", "1",
                        "--theta", "1", "--grid", "1:2:2")
        assert code == 0
        _, data = rows(out)
        assert data[0][1] == pytest.approx(-0.5, abs=1e-14)
        assert data[0][2] == pytest.approx(1.0, abs=1e-14)

    def test_pole_rows_omitted(self, capsys):
        code, out = run(capsys, "eigenvalue", "--n", "1", "--alpha", "2",
                        "--grid", "-1:1:3")
        assert code == 0
        _, data = rows(out)
        assert [r[0] for r in data] == [-1.0, 1.0]


class TestNonGauss:
    def test_flat_at_index2(self, capsys):
        code, out = run(capsys, "nongauss", "--alpha", "2", "--grid", "-2:2:9")
        assert code == 0
        _, data = rows(out)
        assert all(r[1] == 0.0 for r in data)

    def test_positive_below_crossing(self, capsys):
        code, out = run(capsys, "nongauss", "--alpha", "1", "--grid", "0.1:1:4")
        assert code == 0
        _, data = rows(out)
        assert all(r[1] > 0 for r in data)


class TestFactorize:
    def test_equal_orders_scaled_constant(self, capsys):
        code, out = run(capsys, "factorize", "--delta", "2", "--gamma", "2")
        assert code == 0
        assert "scaled remainder: 1/2" in out

    def test_equal_orders_32(self, capsys):
        code, out = run(capsys, "factorize", "--delta", "3/2", "--gamma", "3/2")
        assert code == 0
        assert "1/2*D^(-1/4)" in out

    def test_mixed_orders_show_both(self, capsys):
        code, out = run(capsys, "factorize", "--delta", "1", "--gamma", "2")
        assert code == 0
        assert "forward remainder:" in out and "reverted remainder:" in out
        assert "scaled" not in out
        # x terms appear with opposite signs across the two lines
        fwd, rev = out.strip().splitlines()
        assert "+ x*D^(1)" in fwd and "- x*D^(1)" in rev

    def test_k_space_dump(self, capsys):
        code, out = run(capsys, "factorize", "--delta", "2", "--gamma", "2",
                        "--space", "k")
        assert code == 0
        assert "multiplier c0:" in out

    def test_k_space_integer_theta(self, capsys):
        code = main(["factorize", "--delta", "2", "--gamma", "2",
                     "--space", "k", "--theta", "1/2"])
        assert code == 2

    def test_json_format(self, capsys):
        code, out = run(capsys, "factorize", "--delta", "2", "--gamma", "2",
                        "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["scaled"] == [{"coeff": "1/2", "xpow": 0, "dorder": "0"}]


class TestValidate:
    def test_full_suite_green(self, capsys):
        code, out = run(capsys, "validate", "--format", "json")
        assert code == 0
        report = json.loads(out)
        primary = [r for r in report if r["kind"] == "primary"]
        info = [r for r in report if r["kind"] == "info"]
        assert len(primary) == 12 and all(r["passed"] for r in primary)
        assert len(info) == 2

    def test_text_report_has_no_fail_lines(self, capsys):
        code, out = run(capsys, "validate")
        assert code == 0
        assert "FAIL" not in out
        assert out.count("INFO") == 2


class TestPlumbing:
    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "table.json"
        code, out = run(capsys, "hermite", "--n", "1", "--out", str(target))
        assert code == 0 and out == ""
        assert json.loads(target.read_text())[1]["n"] == 1

    def test_deterministic_bytes(self, capsys):
        _, a = run(capsys, "state", "--n", "2", "--alpha", "3/2", "--grid", "-2:2:9")
        _, b = run(capsys, "state", "--n", "2", "--alpha", "3/2", "--grid", "-2:2:9")
        assert a == b

    def test_csv_roundtrip_precision(self, capsys):
        _, out = run(capsys, "state", "--n", "0", "--alpha", "3/2", "--grid", "0:3:7")
        from rfho.spectral import ground_state
        from fractions import Fraction as F

        state = ground_state(F(3, 2))
        _, data = rows(out)
        for k, re, im in data:
            assert complex(re, im) == state.eval(k)
