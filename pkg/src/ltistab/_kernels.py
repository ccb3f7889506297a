"""Backend selection for the hot kernels.

The compiled extension is preferred; the NumPy fallback has identical
semantics.  Set ``LTISTAB_NO_SPEEDUPS=1`` to force the fallback (used by the
benchmark and by backend-equivalence tests).
"""
from __future__ import annotations

import os

if os.environ.get("LTISTAB_NO_SPEEDUPS"):
    from ltistab import _fallback as _impl

    BACKEND = "fallback"
else:
    try:
        from ltistab import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from ltistab import _fallback as _impl  # type: ignore[no-redef]

        BACKEND = "fallback"

convolve_uniform = _impl.convolve_uniform
aberth_roots = _impl.aberth_roots


def backend() -> str:
    """Name of the active kernel backend: ``"compiled"`` or ``"fallback"``."""
    return BACKEND
