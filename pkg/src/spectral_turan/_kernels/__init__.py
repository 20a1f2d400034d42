"""Kernel backend selection.

The compiled containment kernel (spectral_turan._kernels._core) is used when
it built successfully; otherwise the pure-Python twin takes over. Override
with the environment variable SPECTRAL_TURAN_KERNEL=auto|c|pure (read at
import time). The compiled kernel works on machine words, so graphs beyond
64 vertices always take the pure path; canonical labeling has a single
shared implementation (its integer keys outgrow machine words and it is not
the hot path).
"""

from __future__ import annotations

import os

from . import pure as _pure
from .pure import BUDGET_EXHAUSTED, FOUND, NOT_FOUND, canon_bits

find_forest = _pure.find_forest
BACKEND = "pure"

_choice = os.environ.get("SPECTRAL_TURAN_KERNEL", "auto")
if _choice not in ("auto", "c", "pure"):
    raise ValueError(
        f"SPECTRAL_TURAN_KERNEL must be auto, c, or pure, not {_choice!r}"
    )
if _choice in ("auto", "c"):
    try:
        from . import _core as _compiled
    except ImportError:
        if _choice == "c":
            raise ImportError(
                "SPECTRAL_TURAN_KERNEL=c but the compiled kernel is not built"
            ) from None
    else:
        BACKEND = "c"

        def find_forest(n, adj, parts, budget=10**9):
            if n <= _compiled.MAX_WORD_VERTICES:
                return _compiled.find_forest(n, adj, parts, budget)
            return _pure.find_forest(n, adj, parts, budget)

__all__ = [
    "find_forest",
    "canon_bits",
    "BACKEND",
    "NOT_FOUND",
    "FOUND",
    "BUDGET_EXHAUSTED",
]
