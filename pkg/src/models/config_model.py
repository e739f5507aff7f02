"""
Path: src/models/config_model.py
Modelo de configuración de la suite de experimentos.
Carga un archivo plano `clave = valor`, aplica los overrides de la línea de
comandos, valida cada clave y completa las faltantes con valores predeterminados.
"""

import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Tuple

from src.config.constants import (
    BUDGET_MULTIPLIER_BSRR,
    BUDGET_MULTIPLIER_HJ,
    BUDGET_MULTIPLIER_MTS,
    DEFAULT_DIMENSIONS,
    DEFAULT_INSTANCES,
    DEFAULT_MASTER_SEED,
)
from src.optimizers.bounds import Algorithm, ReinitRule, RestartPolicy
from src.optimizers.optimizer_factory import BUILTIN_VARIANTS, OptimizerFactory, OptimizerVariant
from src.problems.functions import FunctionId
from src.utils.simple_logger import LoggerService

get_logger = LoggerService()

DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(os.path.dirname(__file__)), "config", "suite.cfg")

KNOWN_KEYS = (
    "algorithms", "functions", "dimensions", "instances",
    "budget_multiplier_hj", "budget_multiplier_mts", "budget_multiplier_bsrr",
    "seed", "output", "jobs", "restarts", "reinit_rule",
)

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


class ConfigError(ValueError):
    """Error de configuración; `key` nombra la clave (o el flag) culpable."""

    def __init__(self, key: str, message: str):
        super().__init__(f"{key}: {message}")
        self.key = key
        self.message = message


@dataclass(frozen=True)
class SuiteConfig:
    """Configuración validada e inmutable de una suite."""
    algorithms: Tuple[OptimizerVariant, ...]
    functions: Tuple[FunctionId, ...]
    dimensions: Tuple[int, ...]
    instances: Tuple[int, ...]
    budget_multipliers: Dict[Algorithm, int] = field(default_factory=dict)
    seed: int = DEFAULT_MASTER_SEED
    output: str = "results"
    jobs: int = 1
    restart: RestartPolicy = field(default_factory=RestartPolicy)

    def budget_for(self, variant: OptimizerVariant, dimension: int) -> int:
        "Presupuesto de la variante en dimensión D."
        return variant.default_budget(dimension, self.budget_multipliers)

    def describe(self) -> Dict[str, Any]:
        "Representación serializable (para el manifiesto)."
        return {
            "algorithms": [variant.name for variant in self.algorithms],
            "functions": [fid.label for fid in self.functions],
            "dimensions": list(self.dimensions),
            "instances": list(self.instances),
            "budget_multipliers": {alg.value: mult for alg, mult in self.budget_multipliers.items()},
            "seed": self.seed,
            "restarts": self.restart.enabled,
            "reinit_rule": self.restart.reinit_rule.value,
        }


def _split(value: str) -> List[str]:
    return [item.strip() for item in str(value).split(",") if item.strip()]


def _parse_int(key: str, value: Any, minimum: int) -> int:
    try:
        number = int(str(value).strip())
    except ValueError as e:
        raise ConfigError(key, f"se esperaba un entero, recibido {value!r}") from e
    if number < minimum:
        raise ConfigError(key, f"debe ser >= {minimum}, recibido {number}")
    return number


def _parse_int_list(key: str, value: Any, minimum: int) -> Tuple[int, ...]:
    items: List[int] = []
    for item in _split(value):
        if "-" in item.lstrip("-") and not item.startswith("-"):
            low, high = item.split("-", 1)
            first, last = _parse_int(key, low, minimum), _parse_int(key, high, minimum)
            if last < first:
                raise ConfigError(key, f"rango vacío {item!r}")
            items.extend(range(first, last + 1))
        else:
            items.append(_parse_int(key, item, minimum))
    if not items:
        raise ConfigError(key, "la lista no puede estar vacía")
    return tuple(dict.fromkeys(items))


class ConfigModel:
    """Clase responsable de cargar y validar la configuración de la suite."""

    def __init__(self, logger=None, config_path: Optional[str] = None):
        """
        Args:
            logger: Logger configurado (opcional)
            config_path: Archivo `clave = valor`; por defecto src/config/suite.cfg
        """
        self.logger = logger or get_logger
        self.config_file = config_path or DEFAULT_CONFIG_PATH
        self.logger.debug(f"ConfigModel inicializado con archivo de configuración: {self.config_file}")

    def load_config(self, overrides: Optional[Mapping[str, Any]] = None) -> SuiteConfig:
        """
        Carga el archivo, aplica overrides (flags) y valida.

        Raises:
            ConfigError: clave desconocida o valor inválido
            OSError: archivo indicado explícitamente pero ilegible
        """
        raw = self._load_config_file()
        for key, value in (overrides or {}).items():
            if value is not None:
                raw[key] = value
        completed = self._complete_config(raw)
        config = self._validate_config(completed)
        self.logger.debug(f"Configuración final cargada: {config.describe()}")
        return config

    def _load_config_file(self) -> Dict[str, Any]:
        if not os.path.exists(self.config_file) and self.config_file == DEFAULT_CONFIG_PATH:
            self.logger.warning(
                f"Archivo de configuración no encontrado: {self.config_file}. "
                "Se usarán valores predeterminados."
            )
            return {}
        with open(self.config_file, "r", encoding="utf-8") as f:
            text = f.read()
        config = self.parse_text(text)
        self.logger.info(f"Configuración cargada desde {self.config_file}")
        return config

    @staticmethod
    def parse_text(text: str) -> Dict[str, str]:
        """
        Interpreta líneas `clave = valor`; ignora líneas vacías y comentarios `#`.

        Raises:
            ConfigError: línea sin '=' o clave desconocida
        """
        config: Dict[str, str] = {}
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"línea {number}", f"se esperaba 'clave = valor', recibido {raw!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in KNOWN_KEYS:
                raise ConfigError(key, "clave de configuración desconocida")
            config[key] = value
        return config

    def _complete_config(self, config: Dict[str, Any]) -> Dict[str, Any]:
        defaults = self._get_default_config()
        for key, value in defaults.items():
            if key not in config:
                self.logger.warning(f"Clave '{key}' no encontrada, usando valor predeterminado")
                config[key] = value
        unknown = [key for key in config if key not in KNOWN_KEYS]
        if unknown:
            raise ConfigError(unknown[0], "clave de configuración desconocida")
        return config

    def _validate_config(self, config: Dict[str, Any]) -> SuiteConfig:
        algorithms = []
        for name in _split(config["algorithms"]):
            try:
                algorithms.append(OptimizerFactory.create_optimizer(name, self.logger))
            except ValueError as e:
                raise ConfigError("algorithms", str(e)) from e
        if not algorithms:
            raise ConfigError("algorithms", "la lista no puede estar vacía")

        functions = []
        for label in _split(config["functions"]):
            try:
                functions.append(FunctionId.parse(label))
            except ValueError as e:
                raise ConfigError("functions", str(e)) from e
        if not functions:
            raise ConfigError("functions", "la lista no puede estar vacía")

        restarts = str(config["restarts"]).strip().lower()
        if restarts not in _TRUE | _FALSE:
            raise ConfigError("restarts", f"se esperaba true/false, recibido {config['restarts']!r}")
        try:
            reinit_rule = ReinitRule(str(config["reinit_rule"]).strip().lower())
        except ValueError as e:
            raise ConfigError("reinit_rule", f"regla desconocida {config['reinit_rule']!r}") from e

        output = str(config["output"]).strip()
        if not output:
            raise ConfigError("output", "el directorio de salida no puede estar vacío")
        jobs = _parse_int("jobs", config["jobs"], 0) or (os.cpu_count() or 1)

        return SuiteConfig(
            algorithms=tuple(dict.fromkeys(algorithms)),
            functions=tuple(dict.fromkeys(functions)),
            dimensions=_parse_int_list("dimensions", config["dimensions"], 1),
            instances=_parse_int_list("instances", config["instances"], 1),
            budget_multipliers={
                Algorithm.HJ: _parse_int("budget_multiplier_hj", config["budget_multiplier_hj"], 1),
                Algorithm.MTSLS1: _parse_int("budget_multiplier_mts", config["budget_multiplier_mts"], 1),
                Algorithm.BSRR: _parse_int("budget_multiplier_bsrr", config["budget_multiplier_bsrr"], 2),
            },
            seed=_parse_int("seed", config["seed"], 0),
            output=output,
            jobs=jobs,
            restart=RestartPolicy(enabled=restarts in _TRUE, reinit_rule=reinit_rule),
        )

    @staticmethod
    def _get_default_config() -> Dict[str, str]:
        return {
            "algorithms": ",".join(BUILTIN_VARIANTS),
            "functions": ",".join(fid.label for fid in FunctionId),
            "dimensions": ",".join(str(d) for d in DEFAULT_DIMENSIONS),
            "instances": f"{DEFAULT_INSTANCES[0]}-{DEFAULT_INSTANCES[-1]}",
            "budget_multiplier_hj": str(BUDGET_MULTIPLIER_HJ),
            "budget_multiplier_mts": str(BUDGET_MULTIPLIER_MTS),
            "budget_multiplier_bsrr": str(BUDGET_MULTIPLIER_BSRR),
            "seed": str(DEFAULT_MASTER_SEED),
            "output": "results",
            "jobs": "0",
            "restarts": "true",
            "reinit_rule": ReinitRule.UNIFORM_RANDOM.value,
        }
