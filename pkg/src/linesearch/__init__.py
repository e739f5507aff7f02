"""
Path: src/linesearch/__init__.py
Solvers univariados (Brent, STEP, Brent-STEP) y el driver multivariado BSrr.
"""

from src.linesearch.brent import BrentState, brent_minimize
from src.linesearch.brent_step import BrentStepSolver, Phase, brent_step_minimize
from src.linesearch.bsrr import BsrrState, bsrr_run_trial
from src.linesearch.step import StepState, step_minimize

__all__ = [
    "BrentState",
    "BrentStepSolver",
    "BsrrState",
    "Phase",
    "StepState",
    "brent_minimize",
    "brent_step_minimize",
    "bsrr_run_trial",
    "step_minimize",
]
