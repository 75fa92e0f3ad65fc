"""End-to-end discovery runs; deselected by default, run with ``pytest -m slow``."""

import pytest

from gadget_qec.config import TrainConfig
from gadget_qec.pipeline import dedup
from gadget_qec.stabilizer import verify_distance_at_least
from gadget_qec.trainer import (
    CurriculumSchedule,
    compare_levels,
    evaluate_greedy,
    run_curriculum,
)

pytestmark = pytest.mark.slow


def _discover(cfg: TrainConfig):
    schedule = CurriculumSchedule.for_target(cfg.d, cfg.epochs, cfg.epochs_per_stage)
    result = run_curriculum(schedule, cfg)
    assert result.success, f"no [[{cfg.n},{cfg.k},{cfg.d}]] code found"
    for circuit in result.target_circuits:
        assert verify_distance_at_least(circuit.final_tableau(), cfg.d).passed
    return result


@pytest.mark.parametrize(
    "n, k, d, levels, epochs",
    [
        (7, 1, 3, "cx", 2000),
        (9, 1, 3, "cx", 2000),
        (13, 1, 4, "cx,dcx", 5000),
    ],
)
def test_desk_scale_discovery(n, k, d, levels, epochs, tmp_path):
    cfg = TrainConfig(n=n, k=k, d=d, levels=levels, epochs=epochs, out=str(tmp_path))
    result = _discover(cfg)
    kept, report = dedup(result.target_circuits)
    assert report.n_kept == len(kept) >= 1


def test_greedy_policy_of_a_trained_agent(tmp_path):
    cfg = TrainConfig(
        n=7, k=1, d=3, epochs=2000, min_discoveries=2000, out=str(tmp_path)
    )
    result = _discover(cfg)
    circuit, success, _ = evaluate_greedy(result.nets, cfg.env_config())
    assert success
    assert verify_distance_at_least(circuit.final_tableau(), 3).passed


def test_gadgets_speed_up_discovery(tmp_path):
    cfg = TrainConfig(n=13, k=1, d=4, epochs=5000, out=str(tmp_path))
    _, summary = compare_levels(cfg, [["cx"], ["cx", "dcx", "dcx4"]], seeds=[0, 1, 2])
    # runs without success never reached the target
    epochs = summary["median_epochs_to_success"].fillna(float("inf"))
    medians = dict(zip(summary["levels"], epochs))
    assert medians["0,1,2"] < medians["0"]
