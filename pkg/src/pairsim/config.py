"""Process-wide numeric configuration.

Amplitude precision is a global switch, not a per-state parameter: every
state created after a switch uses the new float width.  Mixing precisions
is unsupported; switch only while no states are live.  The default can be
overridden at startup with the environment flag ``PAIRSIM_SINGLE=1``.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

import numpy as np
import psutil

_DTYPES = {"single": np.dtype(np.float32), "double": np.dtype(np.float64)}

# Norm drift allowance per precision mode, used by diagnostics and tests.
NORM_TOLERANCE = {"single": 1e-4, "double": 1e-10}

_precision = "single" if os.environ.get("PAIRSIM_SINGLE", "") in ("1", "true", "on") else "double"
_memory_limit: int | None = (
    int(os.environ["PAIRSIM_MEMORY_LIMIT"]) if os.environ.get("PAIRSIM_MEMORY_LIMIT") else None
)


def set_precision(mode: str) -> None:
    """Select the float width ("single" or "double") for new states."""
    if mode not in _DTYPES:
        raise ValueError(f"unknown precision mode {mode!r}; expected 'single' or 'double'")
    global _precision
    _precision = mode


def get_precision() -> str:
    return _precision


def float_dtype() -> np.dtype:
    """Dtype backing amplitude components under the current precision."""
    return _DTYPES[_precision]


@contextmanager
def use_precision(mode: str):
    """Temporarily switch precision (restores the previous mode on exit)."""
    previous = _precision
    set_precision(mode)
    try:
        yield
    finally:
        set_precision(previous)


def memory_limit_bytes() -> int:
    """Allocation ceiling for state storage; defaults to 75% of physical RAM."""
    if _memory_limit is not None:
        return _memory_limit
    return int(psutil.virtual_memory().total * 0.75)


def set_memory_limit(limit: int | None) -> None:
    """Override the allocation ceiling in bytes; None restores the default."""
    if limit is not None and limit <= 0:
        raise ValueError("memory limit must be positive")
    global _memory_limit
    _memory_limit = limit
