"""
Path: src/optimizers/trial_runner.py
Ejecución completa de un ensayo: punto inicial, barridos hasta agotar el
presupuesto o alcanzar el objetivo más exigente, y reinicios de HJ.
"""

from typing import Optional

import numpy as np

from src.config.constants import LEARNING_RATE_DEFAULT, SIGMA_INIT
from src.models.trial_log import TargetSet, TrialLog
from src.optimizers.bounds import (
    Algorithm,
    RestartPolicy,
    initialize,
    reinitialize,
    should_stop,
)
from src.optimizers.hooke_jeeves import HjState, hj_stalled, hj_sweep
from src.optimizers.mts_ls1 import MtsLs1State, mts_ls1_sweep
from src.problems.recorder import EvaluationRecorder
from src.utils.simple_logger import LoggerService

logger = LoggerService()


def run_trial(algorithm: Algorithm, problem, budget: int,
              restart: Optional[RestartPolicy] = None, seed: int = 0,
              c: float = LEARNING_RATE_DEFAULT, sigma_init: float = SIGMA_INIT,
              targets: Optional[TargetSet] = None, algorithm_id: Optional[str] = None,
              reinit_sigma: bool = False, stop_at_target: bool = True) -> TrialLog:
    """
    Ejecuta un ensayo de HJ, MTS-LS1 o BSrr sobre `problem`.

    Args:
        algorithm: Familia del optimizador
        problem: Instancia a optimizar
        budget: Máximo de evaluaciones (>= 1)
        restart: Política de reinicio de HJ (por defecto habilitada)
        seed: Semilla del ensayo (punto inicial de BSrr y reinicios)
        c: Tasa de aprendizaje
        sigma_init: Paso inicial
        targets: Precisiones Δf; el ensayo termina al alcanzar la más pequeña
        algorithm_id: Etiqueta que se escribe en el TrialLog
        reinit_sigma: Variante HJR (σ vuelve a sigma_init en lugar de reiniciar x)
        stop_at_target: Si es False se consume todo el presupuesto (protocolo de tiempos)

    Returns:
        TrialLog completo del ensayo

    Raises:
        ValueError: si budget < 1
    """
    if budget < 1:
        logger.error(f"Presupuesto inválido: {budget}")
        raise ValueError(f"budget debe ser >= 1, recibido {budget}")
    targets = targets or TargetSet()
    restart = restart or RestartPolicy()
    algorithm_id = algorithm_id or algorithm.value

    if algorithm is Algorithm.BSRR:
        # import diferido: linesearch depende de optimizers.bounds
        from src.linesearch.bsrr import bsrr_run_trial  # pylint: disable=import-outside-toplevel
        return bsrr_run_trial(problem, budget, seed, targets=targets, algorithm_id=algorithm_id,
                              stop_at_target=stop_at_target)

    logger.debug(f"Ensayo {algorithm_id} en {problem!r}, presupuesto {budget}, semilla {seed}")
    recorder = EvaluationRecorder(targets.precisions if stop_at_target else (),
                                  f_reference=problem.f_opt)
    rng = np.random.default_rng(seed)

    x0 = initialize(algorithm, problem, seed)
    f0 = problem.evaluate(x0, recorder)
    if algorithm is Algorithm.HJ:
        state = HjState(x=x0, f_x=f0, sigma=sigma_init, sigma_init=sigma_init, c=c,
                        reinit_sigma=reinit_sigma)
        sweep = hj_sweep
    else:
        state = MtsLs1State(x=x0, f_x=f0, sigma=sigma_init, sigma_init=sigma_init, c=c)
        sweep = mts_ls1_sweep

    restarts = 0
    while not should_stop(recorder, budget):
        state = sweep(state, problem, recorder, budget)
        if (algorithm is Algorithm.HJ and restart.enabled
                and hj_stalled(state, problem, restart.stall_sigma_threshold)
                and not should_stop(recorder, budget)):
            x_new = reinitialize(restart.reinit_rule, problem, rng)
            f_new = problem.evaluate(x_new, recorder)
            state = HjState(x=x_new, f_x=f_new, sigma=sigma_init, sigma_init=sigma_init,
                            c=c, reinit_sigma=reinit_sigma)
            restarts += 1

    logger.debug(
        f"Fin de ensayo {algorithm_id}: {recorder.eval_count} evaluaciones, "
        f"Δf {recorder.best_f - problem.f_opt:.3e}, reinicios {restarts}"
    )
    return TrialLog.from_recorder(recorder, problem, algorithm_id, seed, budget)
