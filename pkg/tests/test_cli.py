import json
import subprocess
import sys

import pytest

from hullkit.cli import main

from conftest import extended_hamming


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info_on_bundled_seed(capsys):
    code, out, _ = run_cli(capsys, "info", "D11", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert (doc["n"], doc["k"]) == (56, 28)
    assert doc["self_dual"] and doc["doubly_even"]
    assert doc["hull_dim"] == 28


def test_info_with_minweight(capsys):
    code, out, _ = run_cli(capsys, "info", "a381310", "--minweight", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["d"] == 10 and doc["lcd"]


def test_build_circulant_and_file_round_trip(tmp_path, capsys):
    path = tmp_path / "d11.code"
    code, _, _ = run_cli(capsys, "build-circulant", "D11", "-o", str(path))
    assert code == 0
    text = path.read_text()
    assert text.splitlines()[0] == "2 56 28"
    code, out, _ = run_cli(capsys, "info", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["self_dual"]


def test_build_circulant_pure_row(capsys, tmp_path):
    path = tmp_path / "ham.code"
    code, _, _ = run_cli(capsys, "build-circulant", "0111", "--pure", "-o", str(path))
    assert code == 0
    from hullkit import parse_code

    assert parse_code(path.read_text()).generator == extended_hamming().generator


def test_transform_pipeline(capsys, tmp_path):
    out_path = tmp_path / "c37226.code"
    code, _, _ = run_cli(capsys, "transform", "--seed", "a37225",
                         "--pair", "c37226", "-o", str(out_path))
    assert code == 0
    code, out, _ = run_cli(capsys, "minweight", str(out_path), "--format", "json")
    assert code == 0
    assert json.loads(out)["d"] == 6


def test_minweight_with_distribution(capsys, tmp_path):
    path = tmp_path / "ham.code"
    run_cli(capsys, "build-circulant", "0111", "--pure", "-o", str(path))
    code, out, _ = run_cli(capsys, "minweight", str(path), "--distribution",
                           "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["d"] == 4
    assert doc["counts"] == [[0, 1], [4, 14], [8, 1]]


def test_minweight_abort_above(capsys):
    code, out, _ = run_cli(capsys, "minweight", "a37225", "--abort-above", "6",
                           "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["d"] < 6
    assert "verdict" in doc


def test_distribution_json(capsys, tmp_path):
    path = tmp_path / "ham.code"
    run_cli(capsys, "build-circulant", "0111", "--pure", "-o", str(path))
    code, out, _ = run_cli(capsys, "distribution", str(path), "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["counts"] == [[0, 1], [4, 14], [8, 1]]


def test_invariant_json(capsys, tmp_path):
    path = tmp_path / "ham.code"
    run_cli(capsys, "build-circulant", "0111", "--pure", "-o", str(path))
    code, out, _ = run_cli(capsys, "invariant", str(path), "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["weight"] == 4
    assert doc["sequence"][0] == 14


def test_equiv_json(capsys, tmp_path):
    p1 = tmp_path / "a.code"
    p2 = tmp_path / "b.code"
    run_cli(capsys, "build-circulant", "0111", "--pure", "-o", str(p1))
    run_cli(capsys, "build-circulant", "1110", "--pure", "-o", str(p2))
    code, out, _ = run_cli(capsys, "equiv", str(p1), str(p2), "--format", "json")
    assert code == 0
    assert json.loads(out)["verdict"] in ("equivalent", "inequivalent")


def test_shorten_puncture(capsys, tmp_path):
    path = tmp_path / "ham.code"
    run_cli(capsys, "build-circulant", "0111", "--pure", "-o", str(path))
    code, out, _ = run_cli(capsys, "puncture", str(path), "--coords", "8")
    assert code == 0
    assert out.splitlines()[0] == "2 7 4"
    code, out, _ = run_cli(capsys, "shorten", str(path), "--coords", "1,2")
    assert code == 0
    assert out.splitlines()[0].startswith("2 6")


def test_search_and_replay(capsys, tmp_path):
    records = tmp_path / "lcd.jsonl"
    code, out, _ = run_cli(capsys, "search-lcd", "--seed", "a381310",
                           "--sample", "8", "--rng-seed", "3",
                           "--d-target", "8", "--out", str(records))
    assert code == 0
    lines = records.read_text().strip().splitlines()
    header = json.loads(lines[0])
    assert header["kind"] == "header"
    assert header["rng_seed"] == 3
    code, out, _ = run_cli(capsys, "replay", "--records", str(records))
    assert code == 0
    assert "replay OK" in out or len(lines) == 1


def test_search_sd_cli(capsys, tmp_path):
    seed_path = tmp_path / "ham.code"
    run_cli(capsys, "build-circulant", "0111", "--pure", "-o", str(seed_path))
    records = tmp_path / "sd.jsonl"
    code, out, _ = run_cli(capsys, "search-sd", "--seed", str(seed_path),
                           "--y", "y4", "--exhaustive", "--d-target", "4",
                           "--out", str(records))
    assert code == 0
    assert "1 record(s)" in out


def test_sample_requires_rng_seed(capsys, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["search-lcd", "--seed", "a381310", "--sample", "5",
              "--d-target", "8", "--out", str(tmp_path / "x.jsonl")])
    assert exc.value.code == 2


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_domain_error_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.code"
    bad.write_text("2 4 2\n1100\n1100\n")
    code, _, err = run_cli(capsys, "info", str(bad))
    assert code == 1
    assert "dependent" in err


def test_verify_paper_quick(capsys, tmp_path):
    report = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "verify-paper", "--quick", "--out", str(report))
    assert code == 0
    doc = json.loads(report.read_text())
    assert all(c["status"] == "pass" for c in doc["checks"])
    assert "PASSED" in out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hullkit.cli", "info", "a37225", "--format", "json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["lcd"] is True
