"""Backend selection for the polynomial kernels.

The compiled extension ``flagcsm._kernels`` is used when it was built;
otherwise the pure-Python implementation takes over. Setting the
environment variable ``FLAGCSM_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("FLAGCSM_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:  # extension not built
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND
mul = _impl.mul
addmul = _impl.addmul
dot = _impl.dot

__all__ = ["BACKEND", "mul", "addmul", "dot"]
