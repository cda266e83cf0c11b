import filecmp
import json
from pathlib import Path

from click.testing import CliRunner

from partition_atlas.cli import main


def _tree(root: Path) -> dict[str, bytes]:
    return {
        str(p.relative_to(root)): p.read_bytes()
        for p in sorted(root.rglob("*"))
        if p.is_file()
    }


def test_compute_small_range(tmp_path):
    out = tmp_path / "artifacts"
    result = CliRunner().invoke(
        main, ["compute", "--n-min", "1", "--n-max", "7", "--out", str(out)]
    )
    assert result.exit_code == 0, result.output
    for n in range(1, 8):
        d = out / f"n{n:02d}"
        for name in ("edges.txt", "framework.json", "profile.csv", "profile.json"):
            assert (d / name).exists()
    # zone files go up to tau_max of each n
    assert (out / "n07" / "zones_r3.json").exists()
    assert not (out / "n07" / "zones_r4.json").exists()
    assert not (out / "n01" / "zones_r1.json").exists()
    doc = json.loads((out / "n07" / "profile.json").read_text())
    assert doc["tau_max"] == 3


def test_compute_is_idempotent(tmp_path):
    out = tmp_path / "artifacts"
    runner = CliRunner()
    assert runner.invoke(main, ["compute", "--n-max", "6", "--out", str(out)]).exit_code == 0
    before = _tree(out)
    assert runner.invoke(main, ["compute", "--n-max", "6", "--out", str(out)]).exit_code == 0
    assert _tree(out) == before


def test_compute_parallel_matches_serial(tmp_path):
    runner = CliRunner()
    serial = tmp_path / "serial"
    parallel = tmp_path / "parallel"
    assert runner.invoke(main, ["compute", "--n-max", "6", "--out", str(serial)]).exit_code == 0
    assert (
        runner.invoke(
            main, ["compute", "--n-max", "6", "--out", str(parallel), "--jobs", "2"]
        ).exit_code
        == 0
    )
    assert _tree(serial) == _tree(parallel)


def test_compute_soft_caps_range(tmp_path):
    out = tmp_path / "artifacts"
    result = CliRunner().invoke(
        main,
        ["compute", "--n-min", "29", "--n-max", "32", "--out", str(out)],
    )
    assert result.exit_code == 0, result.output
    assert "capping" in result.output
    assert (out / "n30").exists()
    assert not (out / "n31").exists()


def test_compute_rejects_bad_range(tmp_path):
    result = CliRunner().invoke(
        main, ["compute", "--n-min", "5", "--n-max", "2", "--out", str(tmp_path)]
    )
    assert result.exit_code == 2


def test_tables_reuses_compute_artifacts(tmp_path):
    out = tmp_path / "artifacts"
    runner = CliRunner()
    assert runner.invoke(main, ["compute", "--n-max", "7", "--out", str(out)]).exit_code == 0
    result = runner.invoke(main, ["tables", "--n-max", "7", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert (out / "first_occurrences.csv").read_text() == "r,n_r\n2,4\n3,7\n"


def test_tables_small_ranges(tmp_path):
    runner = CliRunner()
    out = tmp_path / "a"
    assert runner.invoke(main, ["tables", "--n-max", "6", "--out", str(out)]).exit_code == 0
    assert (out / "first_occurrences.csv").read_text() == "r,n_r\n2,4\n"
    out2 = tmp_path / "b"
    assert runner.invoke(main, ["tables", "--n-max", "3", "--out", str(out2)]).exit_code == 0
    lines = (out2 / "first_occurrences.csv").read_text().strip().split("\n")
    assert lines[0] == "r,n_r"
    assert lines[1].startswith("#")


def test_tables_no_recompute_needs_artifacts(tmp_path):
    result = CliRunner().invoke(
        main,
        ["tables", "--n-max", "5", "--out", str(tmp_path / "x"), "--no-recompute"],
    )
    assert result.exit_code == 2
    assert "missing artifact" in result.output


def test_tables_rejects_partial_start(tmp_path):
    result = CliRunner().invoke(
        main, ["tables", "--n-min", "3", "--n-max", "6", "--out", str(tmp_path)]
    )
    assert result.exit_code == 2


def test_atlas_writes_svg(tmp_path):
    result = CliRunner().invoke(
        main, ["atlas", "--n", "4", "--mode", "thickness", "--out", str(tmp_path)]
    )
    assert result.exit_code == 0, result.output
    path = tmp_path / "atlas_n4_thickness.svg"
    assert path.exists()
    assert path.read_text().count("<circle") == 5


def test_atlas_rejects_unverified_n(tmp_path):
    result = CliRunner().invoke(main, ["atlas", "--n", "31", "--out", str(tmp_path)])
    assert result.exit_code == 2


def test_atlas_mode_validation(tmp_path):
    result = CliRunner().invoke(
        main, ["atlas", "--n", "4", "--mode", "heatmap", "--out", str(tmp_path)]
    )
    assert result.exit_code == 2


def test_graph_dump_stdout():
    result = CliRunner().invoke(main, ["graph-dump", "--n", "4"])
    assert result.exit_code == 0
    assert result.output == "4\t3,1\n3,1\t2,2\n3,1\t2,1,1\n2,2\t2,1,1\n2,1,1\t1,1,1,1\n"


def test_graph_dump_to_file(tmp_path):
    path = tmp_path / "edges.txt"
    result = CliRunner().invoke(main, ["graph-dump", "--n", "5", "--out", str(path)])
    assert result.exit_code == 0
    assert path.exists()
    assert all("\t" in line for line in path.read_text().strip().split("\n"))


def test_compute_n1_trivial_profile(tmp_path):
    out = tmp_path / "artifacts"
    result = CliRunner().invoke(main, ["compute", "--n-max", "1", "--out", str(out)])
    assert result.exit_code == 0, result.output
    doc = json.loads((out / "n01" / "profile.json").read_text())
    assert doc == {"n": 1, "tau_max": 0, "max_locus": ["1"], "tau": {"1": 0}}


def test_verify_small_range_passes():
    result = CliRunner().invoke(main, ["verify", "--n-max", "8"])
    assert result.exit_code == 0, result.output
    assert "[FAIL]" not in result.output
    assert "checks passed" in result.output


def test_verify_reports_failures_with_exit_1(monkeypatch):
    from partition_atlas import cli as cli_module
    from partition_atlas.verify import CheckResult

    monkeypatch.setattr(
        cli_module,
        "run_checks",
        lambda n_min, n_max: [
            CheckResult("good", True, ""),
            CheckResult("bad", False, "some vertices disagree"),
        ],
    )
    result = CliRunner().invoke(main, ["verify", "--n-max", "4"])
    assert result.exit_code == 1
    assert "[FAIL] bad" in result.output
    assert "1/2 checks passed" in result.output


def test_usage_error_exit_code():
    result = CliRunner().invoke(main, ["compute", "--n-min", "0"])
    assert result.exit_code == 2
