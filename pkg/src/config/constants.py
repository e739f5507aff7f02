"""
Path: src/config/constants.py
Central configuration module for benchmark constants and magic numbers.
"""

# Search domain of every benchmark problem
LOWER_BOUND = -5.0
UPPER_BOUND = 5.0

# Instance generation
XOPT_RANGE = 4.0
XOPT_RANGE_ROSENBROCK = 3.0
FOPT_RANGE = 1000.0
FOPT_DECIMALS = 2

# Hooke-Jeeves / MTS-LS1 defaults
SIGMA_INIT = 0.4
LEARNING_RATE_DEFAULT = 0.5
LEARNING_RATE_SLOW = 0.9
MTS_PLUS_FACTOR = 0.5
SIGMA_REINIT_THRESHOLD = 1e-15
HJ_STALL_THRESHOLD = 1e-15

# BSrr defaults
BSRR_INIT_LOWER = -1.0
BSRR_INIT_UPPER = 3.0
BRENT_PARTITIONS = 4
BRENT_TOL = 1e-9
BRENT_STEP_EPSILON = 1e-10
STEP_MIN_WIDTH = 1e-13

# Budgets (multiplicadores de la dimensión)
BUDGET_MULTIPLIER_HJ = 10_000
BUDGET_MULTIPLIER_MTS = 10_000
BUDGET_MULTIPLIER_BSRR = 1_000

# Targets Δf
TARGET_PRECISIONS = (1e2, 1e1, 1e0, 1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8)
SMALLEST_TARGET = 1e-8

# Suite defaults
DEFAULT_DIMENSIONS = (20, 40, 80, 160)
TIMING_DIMENSIONS = (20, 40, 80, 160)
DEFAULT_INSTANCES = tuple(range(1, 16))
DEFAULT_MASTER_SEED = 1
ECDF_DECADES = (0.0, 4.0)
ECDF_STEP_DECADES = 0.2

# Output formats
LOG_FILE_SUFFIX = ".tlog"
MANIFEST_NAME = "manifest.json"
TIMING_UNIT = 1e-5

# CLI exit codes
EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2
EXIT_IO = 3
