"""Kernel backend selection: numba-compiled loops or the pure-NumPy twin.

The default is numba when importable; set FRACWEAR_DISABLE_NUMBA=1 (or call
set_backend("numpy")) to force the fallback.  Both backends implement the same
three array kernels and agree to ~1e-13 relative; benchmarks/bench_backends.py
compares their throughput.
"""
from __future__ import annotations

import os

from . import _kernels_numpy

_IMPL = {"numpy": _kernels_numpy}
_numba_import_error: Exception | None = None

if os.environ.get("FRACWEAR_DISABLE_NUMBA", "").strip().lower() not in ("1", "true", "yes"):
    try:
        from . import _kernels_numba

        _IMPL["numba"] = _kernels_numba
    except Exception as exc:  # pragma: no cover - depends on environment
        _numba_import_error = exc

_active = "numba" if "numba" in _IMPL else "numpy"


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_IMPL))


def backend_name() -> str:
    return _active


def set_backend(name: str) -> None:
    """Switch kernel backend ("numba" or "numpy").  Not thread-safe."""
    global _active
    if name not in _IMPL:
        detail = f" (numba import failed: {_numba_import_error})" if name == "numba" else ""
        raise ValueError(f"unknown or unavailable backend {name!r}{detail}")
    _active = name


def kernels():
    """Module implementing ml_neg_arr / ml_neg_m1_arr / cal_e_arr."""
    return _IMPL[_active]
