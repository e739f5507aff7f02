"""
Path: src/views/notifier.py
Define la interfaz abstracta para notificaciones al usuario y su
implementación de consola.

Estrategia de Notificaciones:
----------------------------
1. Logging: registro técnico para depuración (LoggerService)
2. Notificaciones: lo que ve el usuario (progreso, tablas, listados, errores)

Un notificador puede además reflejar cada mensaje en el log.
"""

import sys
from abc import ABC, abstractmethod
from typing import Any, Dict, Optional, Sequence, TextIO

from src.config.constants import TIMING_UNIT


class Notifier(ABC):
    """
    Interfaz abstracta para sistemas de notificación.
    Los notificadores NO reemplazan el logging.
    """

    @abstractmethod
    def notify_trial(self, data: Dict[str, Any]) -> str:
        """
        Notifica el fin de un ensayo.

        Args:
            data: {'log': TrialLog, 'index': int, 'total': int}

        Returns:
            Línea de progreso mostrada
        """

    @abstractmethod
    def notify_error(self, message: str, error: Optional[Exception] = None) -> None:
        """Notifica un error sin traza."""

    @abstractmethod
    def notify_info(self, message: str, data: Optional[Dict[str, Any]] = None) -> None:
        """Notifica información general."""

    @abstractmethod
    def notify_table(self, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
        """Muestra una tabla alineada y la devuelve como texto."""


class ConsoleNotifier(Notifier):
    """
    Notificador de consola: imprime en `stream` (stdout por defecto) y los
    errores en stderr; opcionalmente replica en el logger.
    """

    def __init__(self, logger=None, stream: Optional[TextIO] = None,
                 error_stream: Optional[TextIO] = None):
        self.logger = logger
        self.stream = stream
        self.error_stream = error_stream

    def _out(self, text: str) -> None:
        print(text, file=self.stream or sys.stdout)

    def notify_trial(self, data: Dict[str, Any]) -> str:
        log = data["log"]
        delta = log.final_delta
        mensaje = (f"[{data['index']}/{data['total']}] {log.algorithm_id} {log.function_id} "
                   f"D={log.dimension} inst={log.instance_id}: {log.total_evals} evals, "
                   f"Δf={delta:.3e}")
        self._out(mensaje)
        if self.logger:
            self.logger.debug(mensaje)
        return mensaje

    def notify_error(self, message: str, error: Optional[Exception] = None) -> None:
        error_msg = f"ERROR: {message}"
        if error:
            error_msg += f" - {error}"
        print(error_msg, file=self.error_stream or sys.stderr)
        if self.logger:
            self.logger.error(error_msg)

    def notify_info(self, message: str, data: Optional[Dict[str, Any]] = None) -> None:
        info_msg = message
        if data:
            info_msg += f" - {data}"
        self._out(info_msg)
        if self.logger:
            self.logger.info(info_msg)

    def notify_table(self, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
        cells = [[str(value) for value in header]] + [[str(value) for value in row] for row in rows]
        widths = [max(len(row[k]) for row in cells) for k in range(len(header))]
        lines = ["  ".join(value.rjust(width) for value, width in zip(row, widths)) for row in cells]
        lines.insert(1, "  ".join("-" * width for width in widths))
        table = "\n".join(lines)
        self._out(table)
        return table

    def notify_timing(self, results, dimensions: Sequence[int]) -> str:
        """Tabla de tiempos: filas por optimizador, columnas por dimensión (10⁻⁵ s)."""
        header = ["algoritmo"] + [f"D={d}" for d in dimensions]
        rows = []
        for result in results:
            row = [result.algorithm_id]
            for dimension in dimensions:
                value = result.in_units(dimension, TIMING_UNIT)
                row.append("Na" if value is None else f"{value:.2f}")
            rows.append(row)
        self._out(f"Tiempo por evaluación (unidades de {TIMING_UNIT:g} s)")
        return self.notify_table(header, rows)
