"""
Path: src/main.py
Punto de entrada de la línea de comandos.
Comandos: run, analyze, timing, list. Códigos de salida: 0 éxito,
1 error inesperado, 2 error de uso o configuración, 3 error de E/S.
"""

import argparse
import os
from typing import Dict, List, Optional, Sequence

from src.config.constants import (
    EXIT_IO,
    EXIT_OK,
    EXIT_UNEXPECTED,
    EXIT_USAGE,
    TIMING_DIMENSIONS,
)
from src.controllers.analysis_controller import GROUP_BY_CHOICES, AnalysisController
from src.controllers.suite_controller import SuiteController, load_logs
from src.controllers.timing_controller import TimingController
from src.models.config_model import ConfigError, ConfigModel
from src.models.trial_log import LogFormatError, TargetSet
from src.optimizers.optimizer_factory import DEFAULT_BUDGET_MULTIPLIERS, VARIANTS
from src.problems.functions import FUNCTION_INFO
from src.utils.event_system import EventSystem, EventType
from src.utils.simple_logger import LoggerService
from src.views.notifier import ConsoleNotifier

logger = LoggerService()

# clave de configuración -> flag de la línea de comandos
FLAG_FOR_KEY: Dict[str, str] = {
    "algorithms": "--algo",
    "functions": "--func",
    "dimensions": "--dim",
    "instances": "--instances",
    "seed": "--seed",
    "output": "--out",
    "jobs": "--jobs",
    "restarts": "--restarts",
    "reinit_rule": "--reinit-rule",
}

ANALYSIS_MODES = ("ert", "ecdf", "ranksum", "scaling")


def _global_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", default=argparse.SUPPRESS, help="semilla maestra")
    parser.add_argument("--out", default=argparse.SUPPRESS, help="directorio de salida")
    parser.add_argument("--jobs", default=argparse.SUPPRESS,
                        help="procesos en paralelo (0 = procesadores disponibles)")
    parser.add_argument("--config", default=argparse.SUPPRESS,
                        help="archivo de configuración clave = valor")
    parser.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS,
                        help="mensajes de depuración")


def build_parser() -> argparse.ArgumentParser:
    "Parser de argumentos con los cuatro subcomandos."
    parser = argparse.ArgumentParser(
        prog="dfo-bench",
        description="Hooke-Jeeves, MTS-LS1 y BSrr sobre funciones de prueba tipo BBOB",
    )
    _global_flags(parser)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common)
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", parents=[common], help="ejecuta una suite de ensayos")
    run.add_argument("--algo", help="variantes separadas por comas (p. ej. HJ-5,BSrr)")
    run.add_argument("--func", help="funciones separadas por comas (p. ej. f1,f3)")
    run.add_argument("--dim", help="dimensiones separadas por comas")
    run.add_argument("--instances", help="instancias, p. ej. 1-15 o 1,2,3")
    run.add_argument("--restarts", help="true/false: reinicios de HJ")
    run.add_argument("--reinit-rule", dest="reinit_rule", help="center o uniform_random")

    analyze = commands.add_parser("analyze", parents=[common], help="calcula métricas en CSV")
    analyze.add_argument("logs", help="directorio con manifest.json")
    analyze.add_argument("--mode", choices=ANALYSIS_MODES, default="ert")
    analyze.add_argument("--targets", help="precisiones Δf separadas por comas")
    analyze.add_argument("--output", help="archivo CSV de salida (por defecto <logs>/<mode>.csv)")
    analyze.add_argument("--alg-a", dest="alg_a", help="primer algoritmo (ranksum)")
    analyze.add_argument("--alg-b", dest="alg_b", help="segundo algoritmo (ranksum)")
    analyze.add_argument("--group-by", dest="group_by", choices=GROUP_BY_CHOICES,
                         default="algorithm", help="agrupación de la ECDF")

    timing = commands.add_parser("timing", parents=[common], help="protocolo de tiempos de CPU")
    timing.add_argument("--algo", help="variantes separadas por comas")
    timing.add_argument("--dims", help="dimensiones separadas por comas")
    timing.add_argument("--repetitions", default="1", help="repeticiones por problema")

    commands.add_parser("list", parents=[common], help="lista funciones y variantes")
    return parser


def _int_list(flag: str, text: Optional[str], default: Sequence[int]) -> List[int]:
    if text is None:
        return list(default)
    try:
        values = [int(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise ConfigError(flag, f"se esperaban enteros separados por comas, recibido {text!r}") from e
    if not values or any(value < 1 for value in values):
        raise ConfigError(flag, f"se esperaban enteros >= 1, recibido {text!r}")
    return values


def _targets(text: Optional[str]) -> TargetSet:
    if text is None:
        return TargetSet()
    try:
        return TargetSet.from_values(float(item) for item in text.split(",") if item.strip())
    except ValueError as e:
        raise ConfigError("--targets", str(e)) from e


def cmd_run(args: argparse.Namespace, notifier: ConsoleNotifier) -> int:
    "Ejecuta la suite configurada y escribe los ensayos."
    overrides = {
        "algorithms": args.algo,
        "functions": args.func,
        "dimensions": args.dim,
        "instances": args.instances,
        "seed": getattr(args, "seed", None),
        "output": getattr(args, "out", None),
        "jobs": getattr(args, "jobs", None),
        "restarts": args.restarts,
        "reinit_rule": args.reinit_rule,
    }
    config = ConfigModel(logger, getattr(args, "config", None)).load_config(overrides)
    events = EventSystem(logger)
    events.subscribe(EventType.TRIAL_FINISHED, notifier.notify_trial)
    logs = SuiteController(config, events).run_suite()
    notifier.notify_info(f"{len(logs)} ensayos escritos en {config.output}")
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace, notifier: ConsoleNotifier) -> int:
    "Escribe el CSV del modo pedido a partir de los ensayos de un directorio."
    targets = _targets(args.targets)
    if args.mode == "ranksum" and not (args.alg_a and args.alg_b):
        raise ConfigError("--alg-a/--alg-b", "el modo ranksum requiere exactamente dos algoritmos")
    logs = load_logs(args.logs)
    if not logs:
        raise LogFormatError(f"el manifiesto de {args.logs} no lista ensayos")
    controller = AnalysisController(logs, targets)
    output = args.output or os.path.join(args.logs, f"{args.mode}.csv")
    try:
        rows = controller.write(args.mode, output, group_by=args.group_by,
                                alg_a=args.alg_a, alg_b=args.alg_b)
    except ValueError as e:
        raise ConfigError("--alg-a/--alg-b" if args.mode == "ranksum" else "--mode", str(e)) from e
    notifier.notify_info(f"{rows} filas escritas en {output}")
    return EXIT_OK


def cmd_timing(args: argparse.Namespace, notifier: ConsoleNotifier) -> int:
    "Muestra la tabla de tiempos por evaluación."
    dimensions = _int_list("--dims", args.dims, TIMING_DIMENSIONS)
    repetitions = _int_list("--repetitions", args.repetitions, (1,))[0]
    names = [name.strip() for name in args.algo.split(",")] if args.algo else None
    try:
        controller = TimingController(names, dimensions, repetitions)
    except ValueError as e:
        raise ConfigError("--algo", str(e)) from e
    notifier.notify_timing(controller.run(), dimensions)
    return EXIT_OK


def cmd_list(_args: argparse.Namespace, notifier: ConsoleNotifier) -> int:
    "Lista funciones disponibles y variantes con sus parámetros."
    notifier.notify_table(
        ["id", "nombre", "grupo", "descripción"],
        [[fid.label, info.name, info.group, info.description] for fid, info in FUNCTION_INFO.items()],
    )
    notifier.notify_table(
        ["variante", "c", "sigma_init", "presupuesto", "descripción"],
        [[v.name, v.c, v.sigma_init, f"{DEFAULT_BUDGET_MULTIPLIERS[v.algorithm]}*D", v.description]
         for v in VARIANTS.values()],
    )
    return EXIT_OK


COMMANDS = {"run": cmd_run, "analyze": cmd_analyze, "timing": cmd_timing, "list": cmd_list}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Función principal: interpreta argumentos y despacha el subcomando."""
    parser = build_parser()
    args = parser.parse_args(argv)
    logger.set_verbose(bool(getattr(args, "verbose", False)))
    notifier = ConsoleNotifier(logger)
    try:
        return COMMANDS[args.command](args, notifier)
    except ConfigError as e:
        flag = FLAG_FOR_KEY.get(e.key, e.key)
        notifier.notify_error(f"configuración inválida en '{flag}': {e.message}")
        return EXIT_USAGE
    except LogFormatError as e:
        notifier.notify_error("archivo de ensayo inválido", e)
        return EXIT_IO
    except OSError as e:
        notifier.notify_error("error de entrada/salida", e)
        return EXIT_IO
    except ValueError as e:
        notifier.notify_error("argumento inválido", e)
        return EXIT_USAGE
    except Exception as e:  # pylint: disable=broad-except
        logger.exception(f"Error inesperado: {e}")
        return EXIT_UNEXPECTED
