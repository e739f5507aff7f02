"""
Path: src/interfaces/ILogger.py
Contrato de logging que reciben ConfigModel, EventSystem, los controladores
y el notificador de consola. LoggerService es la implementación de la
aplicación; los tests inyectan implementaciones que solo acumulan mensajes.
"""

import abc


class ILogger(abc.ABC):
    """
    Interfaz para un servicio de logging con niveles y modo detallado.
    Los mensajes llegan ya formateados (f-strings); los argumentos extra se
    reenvían tal cual a la implementación.
    """
    @abc.abstractmethod
    def debug(self, msg: str, *args, **kwargs) -> None:
        "Traza de depuración (inicio y fin de ensayos, reinicios)."

    @abc.abstractmethod
    def info(self, msg: str, *args, **kwargs) -> None:
        "Progreso de la suite y archivos escritos."

    @abc.abstractmethod
    def warning(self, msg: str, *args, **kwargs) -> None:
        "Situaciones recuperables: claves de configuración completadas con defaults."

    @abc.abstractmethod
    def error(self, msg: str, *args, **kwargs) -> None:
        "Errores de validación antes de propagar la excepción."

    @abc.abstractmethod
    def exception(self, msg: str, *args, **kwargs) -> None:
        "Errores inesperados, con la traza."

    @abc.abstractmethod
    def set_verbose(self, verbose: bool) -> None:
        "Activa o desactiva los mensajes de depuración."

    @abc.abstractmethod
    def is_debug(self) -> bool:
        "True si los mensajes de depuración se emiten."
