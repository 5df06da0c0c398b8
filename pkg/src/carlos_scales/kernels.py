"""Backend selection for the parameter-sweep kernel.

The compiled extension is used when it imports; otherwise the pure-Python
kernel. Both produce bit-identical results.
"""
from __future__ import annotations

import numpy as np

from carlos_scales import _sweep_py

try:
    from carlos_scales import _sweep as _compiled
except ImportError:  # extension not built
    _compiled = None

_KERNELS = {"python": _sweep_py.sweep}
if _compiled is not None:
    _KERNELS["compiled"] = _compiled.sweep

_active = "compiled" if _compiled is not None else "python"


def available_backends() -> list[str]:
    return sorted(_KERNELS)


def get_backend() -> str:
    return _active


def set_backend(name: str) -> None:
    global _active
    if name not in _KERNELS:
        raise ValueError(f"backend {name!r} unavailable; have {available_backends()}")
    _active = name


def sweep(steps, log2s, cents, backend: str | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate many step allocations against one list of just targets.

    Returns ``(unit_log2, max_abs_deviation_cents)`` arrays, one entry per
    row of ``steps``.
    """
    fn = _KERNELS[backend or _active]
    steps = np.ascontiguousarray(steps, dtype=np.int64)
    if steps.ndim != 2:
        raise ValueError("steps must be a 2-D array")
    log2s = np.ascontiguousarray(log2s, dtype=np.float64)
    cents = np.ascontiguousarray(cents, dtype=np.float64)
    return fn(steps, log2s, cents)
