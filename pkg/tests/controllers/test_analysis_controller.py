import csv

import pytest

from src.controllers.analysis_controller import AnalysisController
from src.models.trial_log import TargetSet
from tests.conftest import fixture_logs


def _read(path):
    with open(path, encoding="utf-8", newline="") as f:
        return list(csv.reader(f))


@pytest.fixture
def controller():
    return AnalysisController(fixture_logs(), TargetSet((1.0, 1e-8)))


def test_ert_rows(controller):
    rows = controller.ert_rows()
    assert rows[0] == ("f1", 2, "BSrr", "1.0", "5000.0", 3, 3)
    assert rows[1] == ("f1", 2, "BSrr", "1e-08", "inf", 0, 3)
    assert ("f1", 2, "HJ-5", "1e-08", "650.0", 2, 3) in rows
    assert ("f1", 2, "HJ-5", "1.0", "300.0", 3, 3) in rows
    assert len(rows) == 2 * 2 * 2


def test_ert_csv(controller, tmp_path):
    path = tmp_path / "out" / "ert.csv"
    count = controller.write("ert", str(path))
    table = _read(path)
    assert table[0] == ["function", "dim", "algorithm", "target", "ert", "n_success", "n_trials"]
    assert len(table) == count + 1


def test_ecdf_rows_monotone(controller):
    rows = controller.ecdf_rows("algorithm")
    groups = {}
    for name, _, fraction in rows:
        groups.setdefault(name, []).append(float(fraction))
    assert set(groups) == {"BSrr", "HJ-5"}
    for fractions in groups.values():
        assert fractions == sorted(fractions)
        assert 0.0 <= fractions[0] and fractions[-1] <= 1.0
    assert groups["HJ-5"][-1] == pytest.approx(10 / 12)


def test_ecdf_by_function_group(controller):
    names = {row[0] for row in controller.ecdf_rows("group")}
    assert names == {"BSrr/all", "BSrr/separable", "HJ-5/all", "HJ-5/separable"}
    with pytest.raises(ValueError):
        controller.ecdf_rows("dimension")


def test_ranksum_rows(controller):
    rows = controller.ranksum_rows("HJ-5", "BSrr")
    assert len(rows) == 4
    function_id, dim, target, alg_a, alg_b, u, p = rows[0]
    assert (function_id, dim, target, alg_a, alg_b) == ("f1", 2, "1.0", "HJ-5", "BSrr")
    assert float(u) == 0.0
    assert float(p) == pytest.approx(0.1)


@pytest.mark.parametrize("alg_a, alg_b", [("HJ-5", "HJ-5"), ("HJ-5", "MTS-LS1-5")])
def test_ranksum_needs_two_known_algorithms(controller, alg_a, alg_b):
    with pytest.raises(ValueError):
        controller.ranksum_rows(alg_a, alg_b)


def test_scaling_rows(controller):
    rows = controller.scaling_rows()
    assert ("f1", "HJ-5", 2, "1e-08", "325.0") in rows
    assert ("f1", "BSrr", 2, "1e-08", "inf") in rows


def test_unknown_mode(controller, tmp_path):
    with pytest.raises(ValueError):
        controller.write("bootstrap", str(tmp_path / "x.csv"))


def test_requires_logs():
    with pytest.raises(ValueError):
        AnalysisController([])
