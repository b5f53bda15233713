"""Kernel backend chosen at import: compiled ``_core`` if built, else ``_pycore``.

Set ``COBWEBS_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pycore as python_kernels

try:
    if os.environ.get("COBWEBS_PURE_PYTHON"):
        raise ImportError("pure-Python backend forced")
    from . import _core as compiled_kernels
except ImportError:
    compiled_kernels = None

_impl = compiled_kernels or python_kernels
BACKEND = "cython" if compiled_kernels is not None else "python"

bool_product = _impl.bool_product
bool_closure = _impl.bool_closure
count_chain_tuples = _impl.count_chain_tuples
