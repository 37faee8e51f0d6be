"""Backend selection for the hot kernels.

The compiled module is used when it imports and ``LASCOUX_PURE_PYTHON`` is
unset; inputs outside its 64-bit range fall through to the Python versions.
"""

import os

from lascoux import _kernels_py
from lascoux._kernels_py import ResourceLimit

_compiled = None
if not os.environ.get("LASCOUX_PURE_PYTHON"):
    try:
        from lascoux import _kernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

_MASK_LIMIT = 1 << 63


def _fits(*col_tuples):
    return all(len(cols) <= 64 and all(m < _MASK_LIMIT for m in cols) for cols in col_tuples)


def backends():
    """Available kernel modules keyed by name (for tests and benchmarks)."""
    out = {"python": _kernels_py}
    if _compiled is not None:
        out["cython"] = _compiled
    return out


def successors(kcols, gcols, k_theoretic):
    if _compiled is not None and _fits(kcols, gcols):
        return _compiled.successors(kcols, gcols, k_theoretic)
    return _kernels_py.successors(kcols, gcols, k_theoretic)


def closure(kcols, gcols, k_theoretic, cap):
    if _compiled is not None and _fits(kcols, gcols):
        return _compiled.closure(kcols, gcols, k_theoretic, cap)
    return _kernels_py.closure(kcols, gcols, k_theoretic, cap)


def label_columns(kcols, content):
    if _compiled is not None and _fits(kcols) and all(len(s) <= 64 and (not s or s[-1] <= 64) for s in content):
        return _compiled.label_columns(kcols, content)
    return _kernels_py.label_columns(kcols, content)


__all__ = ["BACKEND", "ResourceLimit", "backends", "closure", "label_columns", "successors"]
