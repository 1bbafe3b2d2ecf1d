# utils/log.py

import logging
import sys

from config.settings import LOG_LEVEL

_FORMAT = "%(asctime)s [%(name)s] %(message)s"
_configured = False


def configure(level: str = LOG_LEVEL):
    """
    Route diagnostics to stderr so stdout stays reserved for reports.
    Safe to call more than once; the last level wins.
    """
    global _configured

    root = logging.getLogger("lieamk")
    if not _configured:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(_FORMAT, datefmt="%H:%M:%S"))
        root.addHandler(handler)
        root.propagate = False
        _configured = True

    root.setLevel(level.upper())


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(f"lieamk.{name}")
