"""Kernel backend selection.

The compiled extension is preferred; set E2CRIT_PURE_PYTHON=1 to force the
pure-Python kernels (used by the benchmark and as a build-failure fallback).
Access the kernels through this module's `kernels` attribute so callers pick
up a swap performed at runtime (the benchmark relies on this).
"""

import os

from . import _kernels_py

if os.environ.get("E2CRIT_PURE_PYTHON"):
    kernels = _kernels_py
else:
    try:
        from . import _kernels_cy as kernels  # type: ignore[no-redef]
    except ImportError:
        kernels = _kernels_py


def backend_name() -> str:
    return "cython" if kernels.__name__.endswith("_kernels_cy") else "python"
