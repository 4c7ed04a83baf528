"""Pick the RK4 kernel implementation at import time.

The compiled ``_kernels`` extension is used when it was built; otherwise the
pure-Python ``_kernels_py``. Setting ``ADS_LORENTZ_PURE_PYTHON=1`` forces the
fallback.
"""

import importlib
import os

BACKENDS = {"cython": "ads_lorentz._kernels", "python": "ads_lorentz._kernels_py"}


def load(name: str):
    return importlib.import_module(BACKENDS[name])


def _select():
    if os.environ.get("ADS_LORENTZ_PURE_PYTHON", "") not in ("", "0"):
        return "python", load("python")
    try:
        return "cython", load("cython")
    except ImportError:
        return "python", load("python")


BACKEND, kernels = _select()
