"""Kernel backend selection.

Imports the compiled extension when it was built, the pure-Python fallback
otherwise.  Set TWOCOLOR_PURE=1 in the environment to force the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("TWOCOLOR_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND = "pure" if _impl is _kernels_py else "compiled"

dp_counts = _impl.dp_counts
mul_int = _impl.mul_int
mul_mod = _impl.mul_mod
invert_int = _impl.invert_int
invert_mod = _impl.invert_mod
qproduct_int = _impl.qproduct_int
qproduct_mod = _impl.qproduct_mod
