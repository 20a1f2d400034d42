"""Command-line interface: exit codes, artifact/stream separation, flag
validation, and the enumerate subcommand."""

import json
import subprocess
import sys

import pytest

from spectral_turan.cli import main


def run_cli(*argv, capsys=None):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestExitCodes:
    def test_pass_exits_zero(self, capsys):
        code, out, err = run_cli("check", "ex-kp3", "--n", "5", "--k", "2",
                                 capsys=capsys)
        assert code == 0
        assert "ex-kp3 n=5: Pass" in err

    def test_fail_exits_one(self, capsys):
        code, _, err = run_cli("check", "ex-bip-kp3", "--n", "7", "--k", "2",
                               capsys=capsys)
        assert code == 1
        assert "ex-bip-kp3 n=7: Fail" in err

    def test_unknown_exits_two(self, capsys):
        code, _, err = run_cli("check", "hong-bound", "--n", "11",
                               capsys=capsys)
        assert code == 2
        assert "Unknown" in err

    def test_fail_beats_unknown_in_a_range(self, capsys):
        # bipartite counts: honest Fails at small n, so the range exits 1
        code, _, _ = run_cli("check", "ex-bip-kp3", "--n", "6..8", "--k", "2",
                             capsys=capsys)
        assert code == 1

    def test_parameter_error_exits_two(self, capsys):
        code, _, err = run_cli("check", "ex-kp3", "--n", "5", "--k", "0",
                               capsys=capsys)
        assert code == 2
        assert err.startswith("error:")

    def test_infeasible_section5_exits_two(self, capsys):
        code, _, err = run_cli("section5", "1", "--n", "40", capsys=capsys)
        assert code == 2
        assert "h >= 1" in err


class TestFlagValidation:
    def test_unknown_theorem_id_rejected_by_parser(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["check", "ex-kp4", "--n", "5"])
        assert exc.value.code == 2

    def test_objective_contradiction(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["check", "ex-kp3", "--n", "5", "--k", "2",
                  "--objective", "rho"])
        assert exc.value.code == 2
        assert "contradicts" in capsys.readouterr().err

    def test_class_contradiction(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["check", "ex-bip-kp3", "--n", "7", "--k", "2",
                  "--class", "all"])
        assert exc.value.code == 2
        assert "runs on class bipartite" in capsys.readouterr().err

    def test_grid_checks_take_no_objective(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["check", "hong-bound", "--n", "6", "--objective", "edges"])
        assert exc.value.code == 2
        assert "does not take --objective" in capsys.readouterr().err

    def test_agreeing_flags_are_accepted(self, capsys):
        code, _, _ = run_cli("check", "ex-kp3", "--n", "5", "--k", "2",
                             "--objective", "edges", "--class", "all",
                             capsys=capsys)
        assert code == 0


class TestArtifacts:
    def test_stdout_artifact_with_stamp_on_stderr(self, capsys):
        code, out, err = run_cli("check", "ex-kp3", "--n", "5", "--k", "2",
                                 capsys=capsys)
        data = json.loads(out)
        assert data["verdict"] == "Pass"
        assert "generated_at" in err
        assert "generated_at" not in out

    def test_single_n_is_an_object_a_range_an_array(self, capsys):
        _, out, _ = run_cli("check", "ex-kp3", "--n", "5", "--k", "2",
                            capsys=capsys)
        assert isinstance(json.loads(out), dict)
        _, out, _ = run_cli("check", "ex-kp3", "--n", "5..6", "--k", "2",
                            capsys=capsys)
        assert [c["params"]["n"] for c in json.loads(out)] == [5, 6]

    def test_out_file_is_timestamp_free(self, tmp_path, capsys):
        target = tmp_path / "report.json"
        code, out, _ = run_cli("check", "ex-kp3", "--n", "5", "--k", "2",
                               "--out", str(target), capsys=capsys)
        assert code == 0
        assert f"wrote {target}" in out
        assert "generated_at" in out
        text = target.read_text(encoding="ascii")
        assert "generated_at" not in text
        assert json.loads(text)["computed_value"] == 10

    def test_identical_runs_identical_bytes(self, tmp_path, capsys):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run_cli("check", "ex-kp3", "--n", "4..6", "--k", "2",
                "--out", str(a), capsys=capsys)
        run_cli("check", "ex-kp3", "--n", "4..6", "--k", "2",
                "--out", str(b), capsys=capsys)
        assert a.read_bytes() == b.read_bytes()

    def test_csv_format(self, capsys):
        _, out, _ = run_cli("check", "ex-kp3", "--n", "5", "--k", "2",
                            "--format", "csv", capsys=capsys)
        header, row = out.splitlines()[:2]
        assert header.startswith("theorem_id,params,")
        assert row.startswith("ex-kp3,")

    def test_revalidate_flag(self, capsys):
        code, out, _ = run_cli("check", "ex-kp3", "--n", "5", "--k", "2",
                               "--revalidate", capsys=capsys)
        assert code == 0
        assert json.loads(out)["verdict"] == "Pass"


class TestSearchKnobs:
    def test_stochastic_knobs_recorded(self, capsys):
        code, out, _ = run_cli(
            "check", "ex-kp3", "--n", "12", "--k", "2",
            "--seed", "3", "--restarts", "2", "--budget", "400",
            capsys=capsys,
        )
        assert code == 0
        params = json.loads(out)["params"]
        assert params["seed"] == 3
        assert params["restarts"] == 2
        assert params["step_budget"] == 400

    def test_cache_dir_flag(self, tmp_path, capsys):
        cache = tmp_path / "cache"
        run_cli("check", "ex-kp3", "--n", "5", "--k", "2",
                "--cache-dir", str(cache), capsys=capsys)
        assert sorted(p.suffix for p in cache.iterdir()) == [".g6", ".json"]

    def test_cache_dir_env(self, tmp_path, capsys, monkeypatch):
        cache = tmp_path / "envcache"
        monkeypatch.setenv("SPECTRAL_TURAN_CACHE", str(cache))
        run_cli("check", "ex-kp3", "--n", "5", "--k", "2", capsys=capsys)
        assert any(cache.iterdir())

    def test_flag_overrides_env(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("SPECTRAL_TURAN_CACHE", str(tmp_path / "unused"))
        cache = tmp_path / "flagged"
        run_cli("check", "ex-kp3", "--n", "5", "--k", "2",
                "--cache-dir", str(cache), capsys=capsys)
        assert any(cache.iterdir())
        assert not (tmp_path / "unused").exists()


class TestSection5:
    def test_example_report(self, capsys):
        code, out, err = run_cli("section5", "2", "--n", "40", "--h", "2",
                                 capsys=capsys)
        assert code == 0
        data = json.loads(out)
        assert data["example_id"] == "2"
        assert data["verdict"] == "Pass"
        assert "example 2: Pass" in err

    def test_prop5_knobs(self, capsys):
        code, out, _ = run_cli(
            "section5", "prop5", "--n", "30", "--k", "2",
            "--samples", "40", "--seed", "5", capsys=capsys,
        )
        assert code == 0
        params = json.loads(out)["params"]
        assert params == {"n": 30, "k": 2, "samples": 40, "seed": 5}


class TestEnumerate:
    def test_stream_all_classes(self, capsys):
        code, out, _ = run_cli("enumerate", "--n", "4", capsys=capsys)
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 11
        assert len(set(lines)) == 11

    def test_filter_vacuous_on_small_orders(self, capsys):
        # a (3,2)-forest needs five vertices, so every 4-vertex graph is free
        _, out, _ = run_cli("enumerate", "--n", "4", "--filter", "3,2",
                            capsys=capsys)
        assert len(out.splitlines()) == 11

    def test_filter_prunes(self, capsys):
        _, all_out, _ = run_cli("enumerate", "--n", "5", capsys=capsys)
        _, free_out, _ = run_cli("enumerate", "--n", "5", "--filter", "3,2",
                                 capsys=capsys)
        assert len(free_out.splitlines()) < len(all_out.splitlines())

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "graphs.g6"
        code, out, _ = run_cli("enumerate", "--n", "4", "--out", str(target),
                               capsys=capsys)
        assert code == 0
        assert f"wrote 11 graphs to {target}" in out
        assert len(target.read_text().splitlines()) == 11

    def test_zero_order_rejected(self, capsys):
        code, _, err = run_cli("enumerate", "--n", "0", capsys=capsys)
        assert code == 2
        assert "error:" in err

    def test_size_cap_is_a_clean_error(self, capsys):
        code, _, err = run_cli("enumerate", "--n", "11", capsys=capsys)
        assert code == 2
        assert "capped" in err


class TestEntryPoint:
    def test_installed_script(self):
        proc = subprocess.run(
            ["spectral-turan", "check", "ex-kp3", "--n", "5", "--k", "2"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["verdict"] == "Pass"
        assert "generated_at" in proc.stderr

    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "spectral_turan.cli", "section5", "4",
             "--n", "30", "--k", "2"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["verdict"] == "Pass"
