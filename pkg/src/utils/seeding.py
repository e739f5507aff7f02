"""
Path: src/utils/seeding.py
Generador pseudoaleatorio de 64 bits basado en mezcla (SplitMix64).

Se usa para construir instancias de problemas y para derivar las semillas de
cada ensayo a partir de la semilla maestra de la suite. Trabaja solo con
enteros de Python, por lo que la secuencia es idéntica en cualquier plataforma.
"""

import hashlib
import math

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """Función de finalización de SplitMix64 (biyectiva sobre 64 bits)."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(*parts: int) -> int:
    """
    Combina una secuencia de enteros no negativos en una semilla de 64 bits.

    Args:
        parts: Componentes de la clave (p. ej. función, dimensión, instancia)

    Returns:
        Semilla determinista en [0, 2^64)
    """
    state = 0
    for part in parts:
        state = mix64(state + GOLDEN_GAMMA + (int(part) & MASK64))
    return state


class SplitMix64:
    """Flujo de números pseudoaleatorios con estado de 64 bits."""

    def __init__(self, seed: int):
        self._state = int(seed) & MASK64

    def next_u64(self) -> int:
        "Devuelve el siguiente entero de 64 bits."
        self._state = (self._state + GOLDEN_GAMMA) & MASK64
        return mix64(self._state)

    def uniform(self, low: float = 0.0, high: float = 1.0) -> float:
        "Uniforme en [low, high) con 53 bits de resolución."
        unit = (self.next_u64() >> 11) * (1.0 / (1 << 53))
        return low + (high - low) * unit

    def uniforms(self, count: int, low: float = 0.0, high: float = 1.0) -> list:
        "Lista de `count` uniformes consecutivos."
        return [self.uniform(low, high) for _ in range(count)]

    def gaussian(self) -> float:
        # Box-Muller, rama coseno; u1 en (0, 1] evita log(0)
        u1 = 1.0 - self.uniform()
        u2 = self.uniform()
        return math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)

    def gaussians(self, count: int) -> list:
        "Lista de `count` normales estándar consecutivas."
        return [self.gaussian() for _ in range(count)]


def text_key(text: str) -> int:
    "Entero de 64 bits estable derivado de un texto (nombre de algoritmo)."
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def trial_seed(master_seed: int, algorithm_id: str, function_number: int,
               dimension: int, instance_id: int) -> int:
    "Semilla de un ensayo; independiente del orden de ejecución."
    return derive_seed(master_seed, text_key(algorithm_id), function_number, dimension, instance_id)
