"""
Path: src/problems/__init__.py
Funciones de prueba escalables, generación de instancias y registro de evaluaciones.
"""

from src.problems.functions import FUNCTION_INFO, FunctionId, functions_in_group
from src.problems.instances import make_problem
from src.problems.problem import Problem, evaluate
from src.problems.recorder import EvaluationRecorder
from src.problems.transforms import lambda_alpha, t_asy, t_osz

__all__ = [
    "FUNCTION_INFO",
    "EvaluationRecorder",
    "FunctionId",
    "Problem",
    "evaluate",
    "functions_in_group",
    "lambda_alpha",
    "make_problem",
    "t_asy",
    "t_osz",
]
