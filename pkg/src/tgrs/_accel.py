"""numba switch.

Set ``TGRS_NO_NUMBA=1`` to force the pure-numpy kernels; the switch is read
once at import time. If numba is not importable the numpy path is used.
"""

from __future__ import annotations

import os

try:
    import numba as _numba
except ImportError:  # pragma: no cover
    _numba = None

HAVE_NUMBA = _numba is not None
USE_NUMBA = HAVE_NUMBA and os.environ.get("TGRS_NO_NUMBA", "").strip() not in ("1", "true", "yes")


def njit(func):
    """``numba.njit(cache=True)`` when numba exists, identity otherwise."""
    if _numba is None:  # pragma: no cover
        return func
    return _numba.njit(cache=True)(func)
