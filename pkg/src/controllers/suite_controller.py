"""
Path: src/controllers/suite_controller.py
Controlador de la suite: arma la lista de ensayos a partir de la configuración,
los ejecuta (en paralelo si jobs > 1), escribe un archivo por ensayo y el
manifiesto con sumas de verificación.
"""

import hashlib
import json
import os
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Dict, List, Optional

from src.config.constants import MANIFEST_NAME
from src.models.config_model import SuiteConfig
from src.models.trial_log import LogFormatError, TrialLog
from src.optimizers.bounds import RestartPolicy
from src.optimizers.optimizer_factory import OptimizerFactory
from src.problems.functions import FunctionId
from src.problems.instances import make_problem
from src.utils.event_system import EventSystem, EventType
from src.utils.seeding import trial_seed
from src.utils.simple_logger import LoggerService

logger = LoggerService()


@dataclass(frozen=True)
class TrialTask:
    """Descripción serializable de un ensayo (se envía a los procesos de trabajo)."""
    algorithm_id: str
    function_id: FunctionId
    dimension: int
    instance_id: int
    budget: int
    seed: int
    restart: RestartPolicy

    @property
    def label(self) -> str:
        return (f"{self.algorithm_id} {self.function_id.label} D={self.dimension} "
                f"instancia {self.instance_id}")


def execute_task(task: TrialTask) -> TrialLog:
    "Ejecuta un ensayo; función de nivel de módulo para poder usarse en un pool de procesos."
    problem = make_problem(task.function_id, task.dimension, task.instance_id)
    variant = OptimizerFactory.create_optimizer(task.algorithm_id)
    return variant.run(problem, task.budget, task.seed, restart=task.restart)


def file_checksum(path: str) -> str:
    "SHA-256 del contenido de un archivo."
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for block in iter(lambda: f.read(65536), b""):
            digest.update(block)
    return digest.hexdigest()


class SuiteController:
    """Orquesta la ejecución de una suite y la persistencia de sus resultados."""

    def __init__(self, config: SuiteConfig, event_system: Optional[EventSystem] = None,
                 logger_service=None):
        self.config = config
        self.logger = logger_service or logger
        self.events = event_system or EventSystem(self.logger)

    def build_tasks(self) -> List[TrialTask]:
        "Un ensayo por (variante, función, dimensión, instancia), en orden determinista."
        tasks = []
        for variant in self.config.algorithms:
            for function_id in self.config.functions:
                for dimension in self.config.dimensions:
                    budget = self.config.budget_for(variant, dimension)
                    for instance_id in self.config.instances:
                        seed = trial_seed(self.config.seed, variant.name, function_id.value,
                                          dimension, instance_id)
                        tasks.append(TrialTask(variant.name, function_id, dimension,
                                               instance_id, budget, seed, self.config.restart))
        return tasks

    def run_suite(self) -> List[TrialLog]:
        """
        Ejecuta todos los ensayos y escribe los archivos en config.output.

        Returns:
            Registros ordenados por (algoritmo, función, dimensión, instancia)

        Raises:
            OSError: si el directorio de salida no puede crearse o escribirse
        """
        os.makedirs(self.config.output, exist_ok=True)
        tasks = self.build_tasks()
        self.logger.info(f"Ejecutando {len(tasks)} ensayos con {self.config.jobs} proceso(s)")

        if self.config.jobs > 1 and len(tasks) > 1:
            logs = self._run_parallel(tasks)
        else:
            logs = self._run_sequential(tasks)
        logs.sort(key=lambda log: log.sort_key)

        self.write_logs(logs)
        self.events.publish(EventType.SUITE_FINISHED, {"trials": len(logs),
                                                       "output": self.config.output})
        return logs

    def _run_sequential(self, tasks: List[TrialTask]) -> List[TrialLog]:
        logs = []
        for number, task in enumerate(tasks, start=1):
            self.events.publish(EventType.TRIAL_STARTED, {"task": task, "index": number,
                                                          "total": len(tasks)})
            log = execute_task(task)
            logs.append(log)
            self._publish_finished(log, number, len(tasks))
        return logs

    def _run_parallel(self, tasks: List[TrialTask]) -> List[TrialLog]:
        logs = []
        with ProcessPoolExecutor(max_workers=self.config.jobs) as executor:
            futures = {}
            for number, task in enumerate(tasks, start=1):
                self.events.publish(EventType.TRIAL_STARTED, {"task": task, "index": number,
                                                              "total": len(tasks)})
                futures[executor.submit(execute_task, task)] = task
            for number, future in enumerate(as_completed(futures), start=1):
                log = future.result()
                logs.append(log)
                self._publish_finished(log, number, len(tasks))
        return logs

    def _publish_finished(self, log: TrialLog, number: int, total: int) -> None:
        self.events.publish(EventType.TRIAL_FINISHED, {"log": log, "index": number, "total": total})

    def write_logs(self, logs: List[TrialLog]) -> str:
        """
        Escribe un archivo por ensayo y el manifiesto.

        Returns:
            Ruta del manifiesto
        """
        entries = []
        for log in logs:
            path = os.path.join(self.config.output, log.file_name)
            with open(path, "w", encoding="utf-8", newline="\n") as f:
                f.write(log.to_text())
            entries.append({
                "file": log.file_name,
                "algorithm": log.algorithm_id,
                "function": log.function_id,
                "dim": log.dimension,
                "instance": log.instance_id,
                "seed": log.seed,
                "budget": log.budget,
                "total_evals": log.total_evals,
                "sha256": file_checksum(path),
            })
        manifest = {
            "created_at": datetime.now(timezone.utc).isoformat(),
            "config": self.config.describe(),
            "trials": entries,
        }
        manifest_path = os.path.join(self.config.output, MANIFEST_NAME)
        with open(manifest_path, "w", encoding="utf-8", newline="\n") as f:
            json.dump(manifest, f, indent=2)
            f.write("\n")
        self.logger.debug(f"Manifiesto escrito en {manifest_path}")
        return manifest_path


def run_suite(config: SuiteConfig, event_system: Optional[EventSystem] = None) -> List[TrialLog]:
    "Atajo funcional de SuiteController.run_suite."
    return SuiteController(config, event_system).run_suite()


def read_manifest(directory: str) -> Dict:
    """
    Raises:
        FileNotFoundError: si el directorio no tiene manifiesto
    """
    path = os.path.join(directory, MANIFEST_NAME)
    with open(path, "r", encoding="utf-8") as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise LogFormatError(f"manifiesto inválido en {path}: {e}") from e


def load_logs(directory: str, verify: bool = True) -> List[TrialLog]:
    """
    Lee todos los ensayos listados en el manifiesto de `directory`.

    Raises:
        OSError: manifiesto o archivo de ensayo ausente
        LogFormatError: suma de verificación distinta o archivo mal formado
    """
    manifest = read_manifest(directory)
    logs = []
    for entry in manifest.get("trials", []):
        path = os.path.join(directory, entry["file"])
        if verify and file_checksum(path) != entry.get("sha256"):
            raise LogFormatError(f"suma de verificación distinta en {path}")
        with open(path, "r", encoding="utf-8") as f:
            logs.append(TrialLog.from_text(f.read()))
    logger.debug(f"{len(logs)} ensayos leídos desde {directory}")
    return sorted(logs, key=lambda log: log.sort_key)
