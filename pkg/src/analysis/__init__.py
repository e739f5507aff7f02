"""
Path: src/analysis/__init__.py
Métricas de desempeño: ERT, ECDF y test de suma de rangos.
"""
