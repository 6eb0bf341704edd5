# src/tiltwall/infrastructure/config.py

import os
from typing import Dict, Optional

from dotenv import dotenv_values

THREADS_ENV = "TILTWALL_THREADS"


def load_cli_config(path: Optional[str]) -> Dict[str, str]:
    """
    Read a key=value config file with python-dotenv.

    Keys are long flag names; dashes and underscores are interchangeable, so
    "alpha-sq-min" and "alpha_sq_min" name the same option.

    Args:
        path: The config file, or None for no config

    Returns:
        A mapping from argparse destination names to raw string values
    """
    if path is None:
        return {}
    if not os.path.isfile(path):
        raise FileNotFoundError(f"Config file not found: {path}")
    values = dotenv_values(path)
    return {key.strip().replace("-", "_"): value for key, value in values.items() if value is not None}


def resolve_thread_count(value: Optional[str] = None) -> Optional[int]:
    """
    Pick the verification worker count: the given value (flag or config), then TILTWALL_THREADS.

    Returns:
        A positive integer, or None to let the executor decide
    """
    for raw in (value, os.getenv(THREADS_ENV)):
        if raw is None or str(raw).strip() == "":
            continue
        try:
            threads = int(str(raw).strip())
        except ValueError:
            raise ValueError(f"Thread count must be a positive integer, got {raw!r}") from None
        if threads < 1:
            raise ValueError(f"Thread count must be a positive integer, got {raw!r}")
        return threads
    return None
