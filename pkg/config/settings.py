# config/settings.py

"""
Settings for the lieamk kernel and CLI.
These values are editable directly without changing logic elsewhere.
"""

import os

# -------- TRUNCATION --------
# Default filtration degree N for truncated U(r) and truncated polynomial
# algebras. The CE differential needs one extra degree on top of it.
DEFAULT_TRUNCATION = 4

# Degree bound for the Hopf / PBW axiom suites and for H-bases
# enumerated by the smash checks.
HOPF_CHECK_DEGREE = 3

# -------- RANDOMIZED CHECKS --------
RANDOM_CASES = 200
RANDOM_SEED = 20040517

# -------- HOMOLOGY --------
# Per-degree rank jobs of a Betti table run in a small thread pool.
HOMOLOGY_WORKERS = 4

# -------- REPORTS --------
REPORT_SCHEMA = "lieamk/1"

EXIT_OK = 0
EXIT_VALIDATION_FAILURE = 1
EXIT_CHECK_FAILURE = 2
EXIT_INPUT_ERROR = 3

# -------- LOGGING / LEDGER --------
LOG_LEVEL = os.environ.get("LIEAMK_LOG_LEVEL", "WARNING")

RUN_LEDGER_PATH = "logs/runs/all_runs.csv"
"""
Master CSV that receives one row per CLI run when --ledger is given.
"""
