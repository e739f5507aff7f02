import pytest

from src.analysis.ert import compute_ert
from src.models.trial_log import TargetSet
from src.optimizers import Algorithm, OptimizerFactory, RestartPolicy, VARIANTS, run_trial
from src.optimizers.optimizer_factory import BUILTIN_VARIANTS
from src.problems import make_problem


def test_rejects_empty_budget():
    with pytest.raises(ValueError):
        run_trial(Algorithm.HJ, make_problem("f1", 2, 1), budget=0)


@pytest.mark.parametrize("algorithm", [Algorithm.HJ, Algorithm.MTSLS1])
def test_budget_is_exact_without_success(algorithm):
    problem = make_problem("f8", 10, 1)
    log = run_trial(algorithm, problem, budget=300, seed=3)
    assert log.total_evals == 300
    assert log.final_delta > 1e-8
    assert log.budget == 300


def test_runs_are_deterministic():
    problem = make_problem("f10", 5, 2)
    first = run_trial(Algorithm.HJ, problem, budget=2000, seed=11)
    second = run_trial(Algorithm.HJ, problem, budget=2000, seed=11)
    assert first == second


def test_events_strictly_decrease():
    log = run_trial(Algorithm.MTSLS1, make_problem("f3", 4, 1), budget=3000, seed=1)
    deltas = [delta for _, delta in log.events]
    indices = [index for index, _ in log.events]
    assert all(b < a for a, b in zip(deltas, deltas[1:]))
    assert all(b > a for a, b in zip(indices, indices[1:]))
    assert indices[0] == 1


def test_targets_hit_match_events():
    log = run_trial(Algorithm.HJ, make_problem("f1", 3, 1), budget=30_000, seed=1)
    for precision, index in log.targets_hit.items():
        assert log.first_hit(precision) == index


def test_stops_at_smallest_target_on_sphere():
    log = run_trial(Algorithm.HJ, make_problem("f1", 5, 1), budget=50_000, seed=1)
    assert log.final_delta <= 1e-8
    assert log.total_evals < 50_000
    assert log.total_evals == log.targets_hit[1e-8]


def test_timing_mode_consumes_whole_budget():
    log = run_trial(Algorithm.HJ, make_problem("f1", 2, 1), budget=400,
                    restart=RestartPolicy.disabled(), stop_at_target=False)
    assert log.total_evals == 400
    assert log.targets_hit == {}


def test_hj_reaches_linear_slope_vertex():
    problem = make_problem("f5", 80, 1)
    log = OptimizerFactory.create_optimizer("HJ-5").run(problem, budget=800_000, seed=1)
    assert log.final_delta == 0.0
    assert log.total_evals <= 2 * 80 + 2


def test_custom_targets():
    targets = TargetSet((1.0, 1e-8))
    log = run_trial(Algorithm.HJ, make_problem("f1", 2, 1), budget=20_000, targets=targets)
    assert set(log.targets_hit) == {1.0, 1e-8}


def test_factory_lookup():
    assert OptimizerFactory.create_optimizer("hj-9") is VARIANTS["HJ-9"]
    assert OptimizerFactory.create_optimizer(" BSRR ").algorithm is Algorithm.BSRR
    with pytest.raises(ValueError):
        OptimizerFactory.create_optimizer("nelder-mead")
    assert OptimizerFactory.available(include_extra=False) == BUILTIN_VARIANTS
    assert set(BUILTIN_VARIANTS) <= set(OptimizerFactory.available())


def test_variant_parameters():
    assert VARIANTS["HJ-5"].c == 0.5
    assert VARIANTS["MTS-LS1-9"].c == 0.9
    assert VARIANTS["HJR-5"].reinit_sigma
    assert VARIANTS["HJ-5"].default_budget(20) == 200_000
    assert VARIANTS["BSrr"].default_budget(20) == 20_000


def test_variant_label_in_log():
    log = VARIANTS["MTS-LS1-9"].run(make_problem("f2", 2, 1), budget=100, seed=5)
    assert log.algorithm_id == "MTS-LS1-9"
    assert log.function_id == "f2"


def _runs(name, fid, dimension):
    variant = VARIANTS[name]
    budget = variant.default_budget(dimension)
    return [variant.run(make_problem(fid, dimension, instance), budget=budget, seed=instance)
            for instance in range(1, 16)]


def _solved(logs, precision=1e-8):
    return sum(log.first_hit(precision) is not None for log in logs)


@pytest.mark.slow
def test_hj_exploits_linear_slope_on_all_instances():
    hits = [log.first_hit(1e-8) for log in _runs("HJ-5", "f5", 80)]
    assert sum(hit is not None and hit <= 250 for hit in hits) >= 14


@pytest.mark.slow
def test_slow_learning_rate_solves_separable_rastrigin():
    slow = _solved(_runs("MTS-LS1-9", "f3", 20))
    fast = _solved(_runs("MTS-LS1-5", "f3", 20))
    assert slow >= 14
    assert slow > fast


@pytest.mark.slow
@pytest.mark.parametrize("fid", ["f1", "f2"])
def test_unimodal_ert_ordering(fid):
    ert = {name: compute_ert(_runs(name, fid, 80), 1e-8).ert
           for name in ("HJ-5", "MTS-LS1-5", "MTS-LS1-9")}
    assert None not in ert.values()
    assert ert["MTS-LS1-9"] >= 2.0 * ert["MTS-LS1-5"]
    assert ert["HJ-5"] < ert["MTS-LS1-5"]


@pytest.mark.slow
def test_mts_struggles_on_buche_rastrigin():
    mts = [_solved(_runs(name, "f4", 20)) for name in ("MTS-LS1-5", "MTS-LS1-9")]
    bsrr = _solved(_runs("BSrr", "f4", 20), precision=1e-6)
    assert max(mts) <= 5
    assert bsrr > max(mts)
