"""Hot numeric kernels with a numba path and a pure-numpy fallback.

The numba path is used when numba imports cleanly and the environment
variable ``ZDG_NUMBA`` is not set to ``0``.  Both paths return identical
results; ``benchmarks/bench_kernels.py`` compares their speed.
"""

import os

from . import _numpy as numpy_kernels
from ._numpy import C4, P4, TWO_K2

try:
    from . import _numba as numba_kernels

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a hard dependency in practice
    numba_kernels = None
    NUMBA_AVAILABLE = False

USE_NUMBA = NUMBA_AVAILABLE and os.environ.get("ZDG_NUMBA", "1") != "0"
BACKEND = "numba" if USE_NUMBA else "numpy"

_impl = numba_kernels if USE_NUMBA else numpy_kernels

# int64 products stay exact while both factors are below 2**31
MODULAR_KERNEL_LIMIT = 2**31
# uint64 masks
BOOLEAN_KERNEL_LIMIT = 64

PATTERN_NAMES = {C4: "C4", P4: "P4", TWO_K2: "2K2"}


def modular_zero_products(values, modulus):
    """Boolean matrix ``M[i, j] = (values[i] * values[j]) % modulus == 0``."""
    import numpy as np

    return _impl.modular_zero_products(np.asarray(values, dtype=np.int64), modulus)


def disjoint_masks(masks):
    """Boolean matrix ``M[i, j] = masks[i] & masks[j] == 0``."""
    import numpy as np

    return _impl.disjoint_masks(np.asarray(masks, dtype=np.uint64))


def first_forbidden_quad(adj):
    """First 4-subset (lexicographic) of an adjacency matrix inducing C4, P4 or 2K2.

    Returns ``None`` or ``((a, b, c, d), pattern_name)``.
    """
    out = _impl.first_forbidden_quad(adj)
    if out[0] < 0:
        return None
    return tuple(int(x) for x in out[:4]), PATTERN_NAMES[int(out[4])]


__all__ = [
    "BACKEND",
    "NUMBA_AVAILABLE",
    "USE_NUMBA",
    "numpy_kernels",
    "numba_kernels",
    "modular_zero_products",
    "disjoint_masks",
    "first_forbidden_quad",
]
