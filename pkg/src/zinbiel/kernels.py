"""Selects the compiled integer kernels when available.

Both backends compute the same thing; ``BACKEND`` records which one is live.
The compiled defect scan works in 64-bit arithmetic, so callers go through
:func:`first_violation`, which routes tables whose constants could overflow
to the arbitrary-precision fallback.  Setting ``ZINBIEL_PURE_PYTHON`` in
the environment forces the fallback even when the extension is built.
"""

import os
from array import array

from . import _kernels_py

_compiled = None
if not os.environ.get("ZINBIEL_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

_LIMIT = 1 << 62


def first_violation(n, flat):
    if _compiled is not None:
        bound = max((abs(v) for v in flat), default=0)
        if 3 * n * bound * bound < _LIMIT:
            return _compiled.first_violation(n, array("q", flat))
    return _kernels_py.first_violation(n, flat)


def bareiss_echelon(rows, ncols):
    impl = _compiled if _compiled is not None else _kernels_py
    return impl.bareiss_echelon(rows, ncols)
