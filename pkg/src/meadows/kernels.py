"""Kernel backend selection.

Imports the compiled extension when present, otherwise falls back to the
pure-Python twins.  Set MEADOWS_PURE=1 to force the fallback (useful for
benchmarking and for debugging the compiled code against it).
"""
from __future__ import annotations

import os
from types import ModuleType

from meadows import _kernels_py

_compiled: ModuleType | None = None
if os.environ.get("MEADOWS_PURE", "") not in ("1", "true", "yes"):
    try:
        from meadows import _ckernels as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

_impl: ModuleType = _compiled if _compiled is not None else _kernels_py

#: Name of the active backend: "compiled" or "pure".
BACKEND: str = "compiled" if _compiled is not None else "pure"

axiom_witnesses = _impl.axiom_witnesses
basicprop_witnesses = _impl.basicprop_witnesses
inverse_scan = _impl.inverse_scan


def available_backends() -> dict[str, ModuleType]:
    """All importable kernel backends, keyed by name."""
    out: dict[str, ModuleType] = {"pure": _kernels_py}
    if _compiled is not None:
        out["compiled"] = _compiled
    return out
