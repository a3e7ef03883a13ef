"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module is used.  Setting ``FLAGCOB_PURE=1`` forces the fallback.
"""

import os

from flagcob import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("FLAGCOB_PURE", "") not in ("1", "true", "yes"):
    try:
        from flagcob import _kernels_c as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py
    else:
        BACKEND = "cython"

seq_add = _impl.seq_add
poly_mul = _impl.poly_mul
tensor_mul = _impl.tensor_mul
flag_reduce = _impl.flag_reduce
flag_mul_masks = _impl.flag_mul_masks
flag_mul = _impl.flag_mul


def compiled_available():
    try:
        from flagcob import _kernels_c  # noqa: F401
    except ImportError:
        return False
    return True
