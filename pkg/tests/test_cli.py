import json

import pytest

from gatemin.cli import (EXIT_INFEASIBLE, EXIT_OK, EXIT_TIMEOUT, EXIT_USAGE,
                         main, parse_time_limit)


def write_problem(tmp_path, name="p.json", **overrides):
    data = {
        "variables": 2,
        "outputs": ["6"],
        "levels": 1,
        "gates_per_level": 1,
        "connectivity": "previous-level",
        "gate_set": "all",
    }
    data.update(overrides)
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return path


class TestParseTimeLimit:
    def test_plain_seconds(self):
        assert parse_time_limit("30") == 30.0

    def test_suffixes(self):
        assert parse_time_limit("30s") == 30.0
        assert parse_time_limit("10m") == 600.0
        assert parse_time_limit("2h") == 7200.0

    def test_bad(self):
        import argparse
        with pytest.raises(argparse.ArgumentTypeError):
            parse_time_limit("soon")
        with pytest.raises(argparse.ArgumentTypeError):
            parse_time_limit("-5s")


class TestSynth:
    def test_optimal_exit_zero(self, tmp_path, capsys):
        path = write_problem(tmp_path)
        assert main(["synth", str(path)]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["status"] == "optimal"
        assert data["cost"] == 1
        assert data["circuit"]["gates"][0]["kind"] == "XOR"

    def test_infeasible_exit_two(self, tmp_path, capsys):
        path = write_problem(tmp_path, outputs=["9"], gate_set=["AND", "OR"])
        assert main(["synth", str(path)]) == EXIT_INFEASIBLE

    def test_timeout_exit_three(self, tmp_path):
        path = write_problem(
            tmp_path, variables=4, outputs=["22d5"], levels=8,
            gates_per_level=1, connectivity="all-previous", gate_set=["NAND"])
        code = main(["synth", str(path), "--time-limit", "0.05s",
                     "--upper-bound", "0"])
        assert code == EXIT_TIMEOUT

    def test_missing_file(self, tmp_path, capsys):
        assert main(["synth", str(tmp_path / "nope.json")]) == EXIT_USAGE
        assert "error" in capsys.readouterr().err

    def test_grow_retries(self, tmp_path, capsys):
        # 6b is infeasible on a 2x2 grid but fits once the ladder deepens
        path = write_problem(tmp_path, variables=3, outputs=["6b"],
                             levels=2, gates_per_level=2)
        assert main(["synth", str(path), "--grow", "4"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["status"] == "optimal"
        assert data["cost"] == 4

    def test_emit_artifacts(self, tmp_path, capsys):
        path = write_problem(tmp_path)
        out = tmp_path / "artifacts"
        code = main(["synth", str(path), "--emit", "json", "--emit", "dot",
                     "--emit", "gams", "--out", str(out)])
        assert code == EXIT_OK
        assert (out / "p.circuit.json").exists()
        assert (out / "p.dot").exists()
        assert (out / "p.gms").exists()


class TestVerify:
    def test_roundtrip(self, tmp_path, capsys):
        path = write_problem(tmp_path)
        out = tmp_path / "a"
        main(["synth", str(path), "--emit", "json", "--out", str(out)])
        capsys.readouterr()
        code = main(["verify", str(out / "p.circuit.json"), str(path)])
        assert code == EXIT_OK
        assert json.loads(capsys.readouterr().out)["pass"] is True

    def test_mismatch(self, tmp_path, capsys):
        path = write_problem(tmp_path)
        out = tmp_path / "a"
        main(["synth", str(path), "--emit", "json", "--out", str(out)])
        capsys.readouterr()
        other = write_problem(tmp_path, name="q.json", outputs=["8"])
        code = main(["verify", str(out / "p.circuit.json"), str(other)])
        assert code == EXIT_INFEASIBLE
        assert json.loads(capsys.readouterr().out)["pass"] is False


class TestBaseline:
    def test_runs_and_bounds(self, tmp_path, capsys):
        path = write_problem(tmp_path, variables=3, outputs=["6b"],
                             levels=3, gates_per_level=2)
        assert main(["baseline", str(path)]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["kind"] == "shannon"
        assert data["outputs"][0]["cost"] <= data["outputs"][0]["bound_3n"] == 27

    def test_davio_kind(self, tmp_path, capsys):
        path = write_problem(tmp_path, variables=3, outputs=["96"],
                             levels=3, gates_per_level=2)
        assert main(["baseline", str(path), "--kind", "positive-davio"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["kind"] == "positive-davio"


class TestEmitGams:
    def test_stdout(self, tmp_path, capsys):
        path = write_problem(tmp_path, variables=3, outputs=["6b"],
                             levels=3, gates_per_level=2)
        assert main(["emit-gams", str(path)]) == EXIT_OK
        text = capsys.readouterr().out
        assert "set ii no. of levels /1*3/;" in text
        assert "(1-r(ii,jj,'7'))" in text

    def test_out_file_and_options(self, tmp_path):
        path = write_problem(tmp_path, variables=3, outputs=["6b"],
                             levels=3, gates_per_level=2)
        target = tmp_path / "model.gms"
        code = main(["emit-gams", str(path), "--out", str(target),
                     "--reslim", "60", "--threads", "2"])
        assert code == EXIT_OK
        assert "mplex.reslim = 60;" in target.read_text()

    def test_rejects_all_previous(self, tmp_path, capsys):
        path = write_problem(tmp_path, connectivity="all-previous")
        assert main(["emit-gams", str(path)]) == EXIT_USAGE


class TestBench:
    def test_custom_suite(self, tmp_path, capsys):
        suite = {
            "cases": [
                {
                    "name": "xor",
                    "reference_cost": 1,
                    "spec": {
                        "variables": 2, "outputs": ["6"], "levels": 1,
                        "gates_per_level": 1, "gate_set": "all",
                    },
                },
                {
                    "name": "slow", "stretch": True, "reference_cost": 12,
                    "spec": {
                        "variables": 3, "outputs": ["96"], "levels": 12,
                        "gates_per_level": 1, "connectivity": "all-previous",
                        "gate_set": ["NAND"],
                    },
                },
            ]
        }
        path = tmp_path / "suite.json"
        path.write_text(json.dumps(suite))
        assert main(["bench", str(path)]) == EXIT_OK
        out = capsys.readouterr().out
        assert "xor" in out and "optimal" in out
        assert "skipped (stretch)" in out

    def test_builtin_suite_loads(self):
        from gatemin.cli import load_suite
        cases = load_suite(None)
        names = [c["name"] for c in cases]
        for expected in ("ab", "e8", "a7f1", "22d5", "4a6a"):
            assert expected in names

    def test_missing_suite_file(self, tmp_path, capsys):
        assert main(["bench", str(tmp_path / "no.json")]) == EXIT_USAGE
