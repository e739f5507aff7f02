"""
Path: src/linesearch/bsrr.py
BSrr: Brent-STEP aplicado a cada coordenada en orden round-robin, con
actualización inmediata del incumbente. En funciones no separables los
valores cacheados de las demás rectas se invalidan cuando el incumbente cambia.
"""

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from src.config.constants import BRENT_PARTITIONS, BRENT_STEP_EPSILON, BRENT_TOL
from src.linesearch.brent_step import BrentStepSolver
from src.models.trial_log import TargetSet, TrialLog
from src.optimizers.bounds import Algorithm, initialize, should_stop
from src.problems.recorder import EvaluationRecorder
from src.utils.simple_logger import LoggerService

logger = LoggerService()


@dataclass
class BsrrState:
    """
    Estado de una ejecución de BSrr.

    Attributes:
        x: Incumbente
        f: Valor del incumbente (igual al best_f del recorder)
        solvers: Un BrentStepSolver por coordenada
        cursor: Coordenada que se visita a continuación (0-based)
    """
    x: np.ndarray
    f: float
    solvers: List[BrentStepSolver] = field(default_factory=list)
    cursor: int = 0


def make_bsrr_state(problem, x0: np.ndarray, f0: float, tol: float = BRENT_TOL,
                    epsilon: float = BRENT_STEP_EPSILON,
                    partitions: int = BRENT_PARTITIONS) -> BsrrState:
    "Crea un solver por coordenada anclado en el incumbente inicial."
    solvers = [
        BrentStepSolver((problem.lower_bounds[i], problem.upper_bounds[i]), tol=tol,
                        epsilon=epsilon, partitions=partitions, x0=x0[i], f0=f0)
        for i in range(problem.dimension)
    ]
    return BsrrState(x=np.array(x0, dtype=float), f=float(f0), solvers=solvers)


def bsrr_visit(state: BsrrState, problem, recorder) -> bool:
    """
    Da una iteración al solver de la coordenada `cursor` sobre la recta que pasa
    por el incumbente y avanza el cursor.

    Returns:
        True si se realizó una evaluación
    """
    i = state.cursor
    solver = state.solvers[i]
    base = state.x.copy()

    def along_line(t: float) -> float:
        point = base.copy()
        point[i] = t
        return problem.evaluate(point, recorder)

    evaluated = solver.advance(along_line)
    if evaluated:
        t, value = solver.last_evaluation
        if value < state.f:
            delta = value - state.f
            state.x[i] = t
            state.f = value
            separable = problem.info.separable
            for j, other in enumerate(state.solvers):
                if j == i:
                    continue
                # solo en funciones separables la recta j cambia en una constante
                if separable:
                    other.rebase(delta)
                else:
                    other.invalidate(state.x[j], value)
    state.cursor = (i + 1) % len(state.solvers)
    return evaluated


def bsrr_run_trial(problem, budget: int, seed: int, targets: Optional[TargetSet] = None,
                   algorithm_id: str = "BSrr", tol: float = BRENT_TOL,
                   epsilon: float = BRENT_STEP_EPSILON, stop_at_target: bool = True) -> TrialLog:
    """
    Ejecuta un ensayo de BSrr.

    Inicializa el incumbente uniforme en [-1, 3]^D, lo evalúa y recorre las
    coordenadas en round-robin hasta agotar el presupuesto, alcanzar el objetivo
    más exigente o completar un ciclo sin evaluaciones.

    Raises:
        ValueError: si budget < D + 1
    """
    if budget < problem.dimension + 1:
        logger.error(f"Presupuesto insuficiente para BSrr: {budget}")
        raise ValueError(f"budget debe ser >= D + 1 = {problem.dimension + 1}, recibido {budget}")
    targets = targets or TargetSet()
    logger.debug(f"Ensayo {algorithm_id} en {problem!r}, presupuesto {budget}, semilla {seed}")

    recorder = EvaluationRecorder(targets.precisions if stop_at_target else (),
                                  f_reference=problem.f_opt)
    x0 = initialize(Algorithm.BSRR, problem, seed)
    f0 = problem.evaluate(x0, recorder)
    state = make_bsrr_state(problem, x0, f0, tol=tol, epsilon=epsilon)

    idle_visits = 0
    while not should_stop(recorder, budget) and idle_visits < problem.dimension:
        if bsrr_visit(state, problem, recorder):
            idle_visits = 0
        else:
            idle_visits += 1

    step_count = sum(solver.used_step for solver in state.solvers)
    logger.debug(
        f"Fin de ensayo {algorithm_id}: {recorder.eval_count} evaluaciones, "
        f"Δf {state.f - problem.f_opt:.3e}, {step_count}/{problem.dimension} coordenadas en STEP"
    )
    return TrialLog.from_recorder(recorder, problem, algorithm_id, seed, budget)
