"""
Path: src/optimizers/optimizer_factory.py
Registro de variantes de optimizadores y fábrica que las instancia por nombre.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from src.config.constants import (
    BUDGET_MULTIPLIER_BSRR,
    BUDGET_MULTIPLIER_HJ,
    BUDGET_MULTIPLIER_MTS,
    LEARNING_RATE_DEFAULT,
    LEARNING_RATE_SLOW,
    SIGMA_INIT,
)
from src.models.trial_log import TargetSet, TrialLog
from src.optimizers.bounds import Algorithm, RestartPolicy
from src.optimizers.trial_runner import run_trial
from src.utils.simple_logger import LoggerService

get_logger = LoggerService()


@dataclass(frozen=True)
class OptimizerVariant:
    """
    Variante con nombre de un optimizador (p. ej. HJ-5 = HJ con c = 0.5).

    Attributes:
        name: Etiqueta pública
        algorithm: Familia
        c: Tasa de aprendizaje (sin efecto en BSrr)
        sigma_init: Paso inicial (sin efecto en BSrr)
        reinit_sigma: σ vuelve a sigma_init en HJ (variantes HJR)
        description: Texto corto para `list`
    """
    name: str
    algorithm: Algorithm
    c: float = LEARNING_RATE_DEFAULT
    sigma_init: float = SIGMA_INIT
    reinit_sigma: bool = False
    description: str = ""

    def default_budget(self, dimension: int,
                       multipliers: Optional[Dict[Algorithm, int]] = None) -> int:
        "Presupuesto por defecto: multiplicador de la familia por D."
        multipliers = multipliers or DEFAULT_BUDGET_MULTIPLIERS
        return multipliers[self.algorithm] * dimension

    def run(self, problem, budget: int, seed: int, restart: Optional[RestartPolicy] = None,
            targets: Optional[TargetSet] = None, stop_at_target: bool = True) -> TrialLog:
        "Ejecuta un ensayo de esta variante."
        return run_trial(self.algorithm, problem, budget, restart=restart, seed=seed,
                         c=self.c, sigma_init=self.sigma_init, targets=targets,
                         algorithm_id=self.name, reinit_sigma=self.reinit_sigma,
                         stop_at_target=stop_at_target)


DEFAULT_BUDGET_MULTIPLIERS: Dict[Algorithm, int] = {
    Algorithm.HJ: BUDGET_MULTIPLIER_HJ,
    Algorithm.MTSLS1: BUDGET_MULTIPLIER_MTS,
    Algorithm.BSRR: BUDGET_MULTIPLIER_BSRR,
}

VARIANTS: Dict[str, OptimizerVariant] = {
    variant.name: variant for variant in (
        OptimizerVariant("HJ-5", Algorithm.HJ, LEARNING_RATE_DEFAULT,
                         description="Hooke-Jeeves con movimiento exploratorio"),
        OptimizerVariant("HJ-9", Algorithm.HJ, LEARNING_RATE_SLOW,
                         description="Hooke-Jeeves con movimiento exploratorio"),
        OptimizerVariant("MTS-LS1-5", Algorithm.MTSLS1, LEARNING_RATE_DEFAULT,
                         description="MTS-LS1, paso asimétrico y reinicio de σ"),
        OptimizerVariant("MTS-LS1-9", Algorithm.MTSLS1, LEARNING_RATE_SLOW,
                         description="MTS-LS1, paso asimétrico y reinicio de σ"),
        OptimizerVariant("BSrr", Algorithm.BSRR,
                         description="Brent-STEP por coordenada en round-robin"),
        OptimizerVariant("HJR-5", Algorithm.HJ, LEARNING_RATE_DEFAULT, reinit_sigma=True,
                         description="Hooke-Jeeves con reinicio de σ"),
        OptimizerVariant("HJR-9", Algorithm.HJ, LEARNING_RATE_SLOW, reinit_sigma=True,
                         description="Hooke-Jeeves con reinicio de σ"),
    )
}

BUILTIN_VARIANTS: Tuple[str, ...] = ("HJ-5", "HJ-9", "MTS-LS1-5", "MTS-LS1-9", "BSrr")


class OptimizerFactory:
    """
    Factory para obtener variantes de optimizadores a partir de su nombre.
    """

    @staticmethod
    def create_optimizer(name: str, logger=None) -> OptimizerVariant:
        """
        Devuelve la variante registrada con ese nombre (sin distinguir mayúsculas).

        Raises:
            ValueError: si el nombre no corresponde a ninguna variante
        """
        logger = logger or get_logger
        for key, variant in VARIANTS.items():
            if key.lower() == str(name).strip().lower():
                logger.debug(f"Variante seleccionada: {variant.name}")
                return variant
        logger.error(f"Algoritmo desconocido: {name}")
        raise ValueError(f"algoritmo desconocido: {name!r}; disponibles: {', '.join(VARIANTS)}")

    @staticmethod
    def available(include_extra: bool = True) -> Tuple[str, ...]:
        "Nombres de las variantes registradas."
        return tuple(VARIANTS) if include_extra else BUILTIN_VARIANTS
