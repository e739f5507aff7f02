"""
Archivo de inicialización para el paquete src.
"""
