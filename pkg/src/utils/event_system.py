"""
Path: src/utils/event_system.py
Sistema de eventos para comunicar el progreso de la suite sin acoplar
el controlador a la interfaz de consola (patrón publish/subscribe).
"""

from enum import Enum, auto
from typing import Any, Callable, Dict, List, Optional

from src.utils.simple_logger import LoggerService


class EventType(Enum):
    """Tipos de eventos del sistema"""
    TRIAL_STARTED = auto()
    TRIAL_FINISHED = auto()
    SUITE_FINISHED = auto()


class EventSystem:
    """
    Registro de suscriptores por tipo de evento.
    Un callback que falla se registra en el log y no interrumpe a los demás.
    """

    def __init__(self, logger=None):
        self.logger = logger or LoggerService()
        self.subscribers: Dict[EventType, List[Callable]] = {event_type: [] for event_type in EventType}
        self.logger.debug("Sistema de eventos inicializado")

    def subscribe(self, event_type: EventType, callback: Callable) -> None:
        """
        Suscribe un callback a un tipo de evento.

        Args:
            event_type: Tipo de evento al que suscribirse
            callback: Función a llamar cuando ocurra el evento
        """
        if callback in self.subscribers[event_type]:
            self.logger.warning(f"Callback ya suscrito a evento {event_type.name}")
            return
        self.subscribers[event_type].append(callback)
        self.logger.debug(f"Suscrito a evento {event_type.name}")

    def unsubscribe(self, event_type: EventType, callback: Callable) -> None:
        "Cancela la suscripción de un callback."
        if callback in self.subscribers[event_type]:
            self.subscribers[event_type].remove(callback)
            self.logger.debug(f"Desuscrito de evento {event_type.name}")

    def publish(self, event_type: EventType, data: Optional[Any] = None) -> None:
        """
        Publica un evento para todos los suscriptores.

        Args:
            event_type: Tipo de evento a publicar
            data: Datos asociados al evento (opcional)
        """
        for callback in list(self.subscribers[event_type]):
            try:
                if data is not None:
                    callback(data)
                else:
                    callback()
            except Exception as e:  # pylint: disable=broad-except
                self.logger.error(f"Error en callback de evento {event_type.name}: {e}")
