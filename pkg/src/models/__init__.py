"""
Path: src/models/__init__.py
Inicializador del paquete models.
"""
