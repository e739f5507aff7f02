import csv
import os

from src.config.constants import EXIT_IO, EXIT_OK, EXIT_USAGE, MANIFEST_NAME
from src.main import main


def _csv(path):
    with open(path, encoding="utf-8", newline="") as f:
        return list(csv.reader(f))


def test_run_writes_fifteen_logs(tmp_path, capsys):
    out = tmp_path / "d"
    code = main(["run", "--algo", "HJ-5", "--func", "f1", "--dim", "20", "--seed", "1",
                 "--out", str(out), "--jobs", "1"])
    assert code == EXIT_OK
    files = os.listdir(out)
    assert MANIFEST_NAME in files
    assert len([name for name in files if name.endswith(".tlog")]) == 15
    assert "[15/15]" in capsys.readouterr().out


def test_run_twice_identical(tmp_path):
    args = ["run", "--algo", "BSrr", "--func", "f3", "--dim", "2", "--instances", "1-3",
            "--jobs", "1"]
    assert main(args + ["--out", str(tmp_path / "a")]) == EXIT_OK
    assert main(args + ["--out", str(tmp_path / "b")]) == EXIT_OK
    for name in os.listdir(tmp_path / "a"):
        if name != MANIFEST_NAME:
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_global_flags_before_command(tmp_path):
    code = main(["--seed", "3", "--out", str(tmp_path), "--jobs", "1", "run", "--algo", "HJ-9",
                 "--func", "f1", "--dim", "2", "--instances", "1"])
    assert code == EXIT_OK
    assert os.path.exists(tmp_path / MANIFEST_NAME)


def test_invalid_dimension_names_flag(tmp_path, capsys):
    code = main(["run", "--dim", "0", "--out", str(tmp_path), "--jobs", "1"])
    assert code == EXIT_USAGE
    err = capsys.readouterr().err
    assert "dim" in err
    assert "Traceback" not in err


def test_unknown_algorithm(tmp_path):
    assert main(["run", "--algo", "simplex", "--out", str(tmp_path)]) == EXIT_USAGE


def test_bsrr_multiplier_too_small_names_key(tmp_path, capsys):
    config = tmp_path / "suite.cfg"
    config.write_text("budget_multiplier_bsrr = 1\n", encoding="utf-8")
    code = main(["run", "--config", str(config), "--algo", "BSrr", "--func", "f1",
                 "--dim", "4", "--out", str(tmp_path / "out"), "--jobs", "1"])
    assert code == EXIT_USAGE
    assert "budget_multiplier_bsrr" in capsys.readouterr().err


def test_missing_config_file(tmp_path):
    code = main(["run", "--config", str(tmp_path / "none.cfg"), "--out", str(tmp_path)])
    assert code == EXIT_IO


def test_analyze_ert(log_dir, tmp_path):
    output = tmp_path / "ert.csv"
    code = main(["analyze", str(log_dir), "--mode", "ert", "--targets", "1,1e-8",
                 "--output", str(output)])
    assert code == EXIT_OK
    rows = _csv(output)
    assert ["f1", "2", "HJ-5", "1e-08", "650.0", "2", "3"] in rows
    assert ["f3", "2", "BSrr", "1e-08", "inf", "0", "3"] in rows


def test_analyze_default_output_path(log_dir):
    assert main(["analyze", str(log_dir)]) == EXIT_OK
    assert os.path.exists(log_dir / "ert.csv")


def test_analyze_ecdf_monotone(log_dir, tmp_path):
    output = tmp_path / "ecdf.csv"
    assert main(["analyze", str(log_dir), "--mode", "ecdf", "--output", str(output)]) == EXIT_OK
    rows = _csv(output)[1:]
    for group in ("HJ-5", "BSrr"):
        fractions = [float(row[2]) for row in rows if row[0] == group]
        assert fractions and fractions == sorted(fractions)


def test_analyze_ranksum(log_dir, tmp_path):
    output = tmp_path / "rs.csv"
    code = main(["analyze", str(log_dir), "--mode", "ranksum", "--alg-a", "HJ-5",
                 "--alg-b", "BSrr", "--output", str(output)])
    assert code == EXIT_OK
    assert _csv(output)[0] == ["function", "dim", "target", "alg_a", "alg_b", "U", "p"]


def test_analyze_ranksum_with_one_algorithm(log_dir):
    assert main(["analyze", str(log_dir), "--mode", "ranksum", "--alg-a", "HJ-5"]) == EXIT_USAGE
    assert main(["analyze", str(log_dir), "--mode", "ranksum", "--alg-a", "HJ-5",
                 "--alg-b", "HJ-9"]) == EXIT_USAGE


def test_analyze_bad_targets(log_dir):
    assert main(["analyze", str(log_dir), "--targets", "1,0.5"]) == EXIT_USAGE


def test_analyze_missing_manifest(tmp_path):
    assert main(["analyze", str(tmp_path)]) == EXIT_IO


def test_list(capsys):
    assert main(["list"]) == EXIT_OK
    out = capsys.readouterr().out
    for label in ("f1", "f2", "f3", "f4", "f5", "f6", "f8", "f10"):
        assert f" {label} " in f" {out} ".replace("\n", " ")
    for name in ("HJ-5", "HJ-9", "MTS-LS1-5", "MTS-LS1-9", "BSrr"):
        assert name in out


def test_timing_columns(capsys):
    assert main(["timing", "--dims", "2,3", "--algo", "HJ-5,BSrr"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    header = next(line for line in lines if line.strip().startswith("algoritmo"))
    assert header.split() == ["algoritmo", "D=2", "D=3"]
    rows = [line.split() for line in lines if line.strip().startswith(("HJ-5", "BSrr"))]
    assert len(rows) == 2
    for row in rows:
        assert all(float(value) >= 0 for value in row[1:])


def test_timing_default_rows(capsys):
    assert main(["timing", "--dims", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    for name in ("HJ-5", "HJ-9", "MTS-LS1-5", "MTS-LS1-9", "BSrr"):
        assert name in out


def test_timing_bad_dims():
    assert main(["timing", "--dims", "0"]) == EXIT_USAGE
