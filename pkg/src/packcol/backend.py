"""Select the compiled kernel when present, the pure-Python twin otherwise."""

from __future__ import annotations

try:
    from . import _core as kernels

    BACKEND = "compiled"
except ImportError:  # extension not built; the fallback is feature-identical
    from . import _pycore as kernels

    BACKEND = "python"

FOUND = 1
NONE = 0
TIMEOUT = -2

solve_scoloring = kernels.solve_scoloring
enumerate_scoloring = kernels.enumerate_scoloring
canon_form = kernels.canon_form
pair_bit = kernels.pair_bit


def backend_name() -> str:
    return BACKEND
