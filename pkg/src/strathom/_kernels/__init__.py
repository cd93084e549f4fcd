"""Elimination kernels with a compiled fast path.

The Cython module ``_ckernels`` is used for integer matrices when it was
built; ``STRATHOM_PURE_PYTHON=1`` forces the reference implementation.
Non-integer rings always take the pure-Python path.
"""

import os

from . import _pykernels
from ..algebra.rings import ZZ

try:
    if os.environ.get("STRATHOM_PURE_PYTHON"):
        raise ImportError("pure-python kernels requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"


def invariant_factors(ring, rows, ncols, backend=None):
    """Nonzero invariant factors of the sparse matrix given by ``rows``."""
    use_c = (backend or BACKEND) == "cython" and _ckernels is not None
    if ring is ZZ and use_c:
        try:
            return _ckernels.int_invariant_factors(list(rows), ncols)
        except OverflowError:
            pass
    return _pykernels.invariant_factors(ring, rows, ncols)


def column_echelon_kernel(ring, cols, nrows, backend=None):
    """``(basis, left_inverse_rows, rank)`` for the kernel of the column list."""
    use_c = (backend or BACKEND) == "cython" and _ckernels is not None
    if ring is ZZ and use_c:
        try:
            return _ckernels.int_column_echelon_kernel(list(cols), nrows)
        except OverflowError:
            pass
    return _pykernels.column_echelon_kernel(ring, cols, nrows)


snf_dense = _pykernels.snf_dense
column_echelon = _pykernels.column_echelon

__all__ = ["BACKEND", "invariant_factors", "column_echelon", "column_echelon_kernel", "snf_dense"]
