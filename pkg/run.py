"""
Path: run.py
Archivo de entrada simplificado para iniciar la línea de comandos.
"""

import sys
from src.main import main

if __name__ == "__main__":
    sys.exit(main())
