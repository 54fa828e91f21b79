"""Command-line interface: reports, exit codes, configuration."""

import json

import pytest

from hecke_bz.cli import main
from hecke_bz.reports import DEFAULTS, make_report, render_table, resolve_config


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for var in ("HECKEBZ_Q0", "HECKEBZ_TOL",
                "HECKEBZ_CLUSTER_TOL", "HECKEBZ_THREADS"):
        monkeypatch.delenv(var, raising=False)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(argv, capsys):
    code, out, err = run(argv, capsys)
    return code, json.loads(out), err


class TestDeriveSpeh:
    def test_single_box_strip(self, capsys):
        code, report, _ = run_json(
            ["derive-speh", "--shape", "3,1", "--i", "1"], capsys)
        assert code == 0
        assert report["command"] == "derive-speh"
        assert report["pass"] is True
        assert report["results"]["predicted"] == [[3], [2, 1]]
        assert report["results"]["computed"] == [[3], [2, 1]]

    def test_two_box_strip(self, capsys):
        code, report, _ = run_json(
            ["derive-speh", "--shape", "2,2", "--i", "2"], capsys)
        assert code == 0
        assert report["results"]["computed"] == [[1, 1]]

    def test_numeric_cross_check(self, capsys):
        code, report, _ = run_json(
            ["derive-speh", "--shape", "2,1", "--i", "1",
             "--kappa", "0.25"], capsys)
        assert code == 0
        assert report["inputs"]["q0"] == DEFAULTS["q0"]
        assert report["results"]["numeric_dim"] == report["results"]["dim"]

    def test_failing_report_exits_one(self, capsys, monkeypatch):
        monkeypatch.setattr(
            "hecke_bz.cli.pieri_verify",
            lambda shape, i: {"shape": list(shape), "i": i, "dim": 0,
                              "predicted": [], "computed": [[1]],
                              "pass": False})
        code, report, _ = run_json(
            ["derive-speh", "--shape", "2,1", "--i", "1"], capsys)
        assert code == 1
        assert report["pass"] is False


class TestPrincipal:
    def test_rank_two(self, capsys):
        code, report, _ = run_json(
            ["principal", "--n", "2", "--t", "1,4"], capsys)
        assert code == 0
        assert report["results"]["dim"] == 2
        assert report["results"]["relations"]["pass"] is True

    def test_rank_one_reports_theta(self, capsys):
        code, report, _ = run_json(
            ["principal", "--n", "1", "--t", "5"], capsys)
        assert code == 0
        assert report["results"]["theta_1"] == "5"

    def test_derivative_dimension(self, capsys):
        code, report, _ = run_json(
            ["principal", "--n", "3", "--t", "1,2,4", "--derive", "1"],
            capsys)
        assert code == 0
        d = report["results"]["derivative"]
        assert d["i"] == 1 and d["dim"] == 6
        assert d["free_rank_prediction"] == 6

    def test_fractional_coordinates(self, capsys):
        code, report, _ = run_json(
            ["principal", "--n", "2", "--t", "1/2,7/3"], capsys)
        assert code == 0
        assert report["inputs"]["t"] == ["1/2", "7/3"]


class TestUsageErrors:
    def test_bad_partition(self, capsys):
        code, out, err = run(
            ["derive-speh", "--shape", "3,x", "--i", "1"], capsys)
        assert code == 2
        assert out == ""
        assert err.startswith("hecke-bz:")

    def test_non_monotone_shape(self, capsys):
        code, _, err = run(
            ["derive-speh", "--shape", "1,3", "--i", "1"], capsys)
        assert code == 2 and "partition" in err

    def test_order_out_of_range(self, capsys):
        code, _, err = run(
            ["derive-speh", "--shape", "2,1", "--i", "7"], capsys)
        assert code == 2 and "0..3" in err

    def test_zero_character_coordinate(self, capsys):
        code, _, err = run(["principal", "--n", "2", "--t", "0,4"], capsys)
        assert code == 2 and "nonzero" in err

    def test_character_length_mismatch(self, capsys):
        code, _, err = run(["principal", "--n", "3", "--t", "1,2"], capsys)
        assert code == 2 and "coordinates" in err

    def test_missing_required_flag(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["derive-speh", "--i", "1"])
        assert info.value.code == 2

    def test_unknown_suite(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["verify", "no-such-suite"])
        assert info.value.code == 2

    def test_bad_env_value(self, capsys, monkeypatch):
        monkeypatch.setenv("HECKEBZ_Q0", "not-a-number")
        with pytest.raises(SystemExit) as info:
            main(["principal", "--n", "1", "--t", "2"])
        assert info.value.code == 2


class TestConfiguration:
    def test_defaults(self):
        assert resolve_config() == DEFAULTS

    def test_env_overrides_defaults(self, capsys, monkeypatch):
        monkeypatch.setenv("HECKEBZ_Q0", "2.0")
        code, report, _ = run_json(
            ["derive-speh", "--shape", "2", "--i", "1",
             "--kappa", "0.5"], capsys)
        assert code == 0
        assert report["inputs"]["q0"] == 2.0

    def test_flag_overrides_env(self, capsys, monkeypatch):
        monkeypatch.setenv("HECKEBZ_Q0", "2.0")
        code, report, _ = run_json(
            ["derive-speh", "--shape", "2", "--i", "1",
             "--kappa", "0.5", "--q", "5.0"], capsys)
        assert code == 0
        assert report["inputs"]["q0"] == 5.0

    def test_thread_count_must_be_positive(self):
        with pytest.raises(ValueError):
            resolve_config(threads=0)


class TestRendering:
    def test_reports_are_byte_stable(self, capsys):
        argv = ["principal", "--n", "2", "--t", "1,4", "--derive", "1"]
        _, first, _ = run(argv, capsys)
        _, second, _ = run(argv, capsys)
        assert first == second

    def test_timings_are_opt_in(self, capsys):
        argv = ["principal", "--n", "1", "--t", "3"]
        _, report, _ = run_json(argv, capsys)
        assert "timings" not in report
        _, report, _ = run_json(argv + ["--timings"], capsys)
        assert "timings" in report and "seconds" in report["timings"]

    def test_report_key_order(self, capsys):
        _, report, _ = run_json(["principal", "--n", "1", "--t", "3"], capsys)
        assert list(report) == ["command", "inputs", "results", "pass"]

    def test_table_format(self, capsys):
        code, out, _ = run(
            ["principal", "--n", "2", "--t", "1,4", "--format", "table"],
            capsys)
        assert code == 0
        lines = out.splitlines()
        assert any(line.startswith("command") for line in lines)
        assert any(line.startswith("results.dim") for line in lines)

    def test_table_flattens_lists(self):
        report = make_report("demo", {"xs": [1, 2]}, {"rows": []}, True)
        table = render_table(report)
        assert "inputs.xs" in table and "[1, 2]" in table
        assert "results.rows" in table


class TestVerifySuites:
    """One tiny-bound run per registered suite."""

    def test_pieri(self, capsys):
        code, report, _ = run_json(
            ["verify", "pieri", "--max-n", "3"], capsys)
        assert code == 0
        assert report["pass"] is True
        assert report["results"]["cases"] == 20
        assert report["results"]["failures"] == []

    def test_finite_relations(self, capsys):
        code, report, _ = run_json(
            ["verify", "finite-relations", "--max-n", "3"], capsys)
        assert code == 0 and report["pass"] is True

    def test_affine_oracle(self, capsys):
        code, report, _ = run_json(
            ["verify", "affine-oracle", "--max-n", "2"], capsys)
        assert code == 0 and report["pass"] is True

    def test_graded_relations(self, capsys):
        code, report, _ = run_json(
            ["verify", "graded-relations", "--max-n", "3"], capsys)
        assert code == 0 and report["pass"] is True

    def test_leibniz(self, capsys):
        code, report, _ = run_json(
            ["verify", "leibniz", "--max-n", "2"], capsys)
        assert code == 0 and report["pass"] is True

    def test_bridge(self, capsys):
        code, report, _ = run_json(
            ["verify", "bridge", "--max-n", "2"], capsys)
        assert code == 0 and report["pass"] is True

    def test_antispherical(self, capsys):
        code, report, _ = run_json(
            ["verify", "antispherical", "--max-n", "2"], capsys)
        assert code == 0 and report["pass"] is True

    def test_n_is_an_alias_for_max_n(self, capsys):
        code, report, _ = run_json(
            ["verify", "pieri", "--n", "2"], capsys)
        assert code == 0
        assert report["results"]["cases"] == 8
