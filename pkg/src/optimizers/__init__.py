"""
Path: src/optimizers/__init__.py
Hooke-Jeeves, MTS-LS1 y el envoltorio de ensayos con reinicios.
"""

from src.optimizers.bounds import (
    Algorithm,
    ReinitRule,
    RestartPolicy,
    clamp_to_bounds,
    initialize,
)
from src.optimizers.hooke_jeeves import HjState, hj_sweep
from src.optimizers.mts_ls1 import MtsLs1State, mts_ls1_sweep
from src.optimizers.optimizer_factory import OptimizerFactory, OptimizerVariant, VARIANTS
from src.optimizers.trial_runner import run_trial

__all__ = [
    "Algorithm",
    "HjState",
    "MtsLs1State",
    "OptimizerFactory",
    "OptimizerVariant",
    "ReinitRule",
    "RestartPolicy",
    "VARIANTS",
    "clamp_to_bounds",
    "hj_sweep",
    "initialize",
    "mts_ls1_sweep",
    "run_trial",
]
