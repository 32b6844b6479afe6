"""Kernel selection.

The compiled kernel is used when the extension imports and
``LIECOHO_PURE`` is unset. Matrices whose elimination overflows int64 are
rerun through the pure-Python kernel, so results never depend on which
backend ran.
"""

import os
from array import array
from itertools import chain

from . import _echelon_py

try:
    if os.environ.get("LIECOHO_PURE"):
        raise ImportError("pure backend requested")
    from . import _echelon_c
except ImportError:
    _echelon_c = None

BACKEND = "cython" if _echelon_c is not None else "python"


def echelon(rows, ncols, reduce=True, backend=None):
    """Echelon form of an integer matrix given as a list of int lists.

    Returns ``(rows, pivots)`` with fresh row lists; the input is not
    modified. ``backend`` forces ``"python"`` or ``"cython"``.
    """
    backend = backend or BACKEND
    if backend == "cython":
        if _echelon_c is None:
            raise RuntimeError("compiled kernel is not available")
        nrows = len(rows)
        try:
            buf = array("q", chain.from_iterable(rows))
        except OverflowError:
            buf = None
        if buf is not None:
            try:
                pivots = _echelon_c.echelon(buf, nrows, ncols, reduce)
            except OverflowError:
                pass
            else:
                flat = buf.tolist()
                return [flat[i * ncols:(i + 1) * ncols] for i in range(nrows)], pivots
    work = [list(r) for r in rows]
    pivots = _echelon_py.echelon(work, ncols, reduce)
    return work, pivots
