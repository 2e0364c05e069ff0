"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
twin. Set ``INJCOLOR_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os
from array import array

from injcolor import _pykernels

FOUND = _pykernels.FOUND
NONE = _pykernels.NONE
BUDGET = _pykernels.BUDGET

_INT64_LIMIT = 2**62

try:
    if os.environ.get("INJCOLOR_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from injcolor import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"


def color_search(indptr, indices, degree, tier, forbidden, k, symmetry=False, budget=-1, backend=None):
    """Run the DSATUR search on a CSR conflict structure. See ``_pykernels``."""
    impl = _pick(backend)
    if impl is _ckernels:
        return impl.color_search(
            array("i", indptr), array("i", indices), array("i", degree), array("i", tier),
            array("b", forbidden), int(k), bool(symmetry), int(budget),
        )
    return impl.color_search(indptr, indices, degree, tier, forbidden, k, symmetry, budget)


def max_flow(n, source, sink, tails, heads, caps, backend=None):
    """Max-flow value and source side of a minimum cut."""
    impl = _pick(backend)
    if impl is _ckernels and sum(caps) >= _INT64_LIMIT:
        impl = _pykernels
    if impl is _ckernels:
        return impl.max_flow(n, source, sink, array("i", tails), array("i", heads), array("q", caps))
    return impl.max_flow(n, source, sink, tails, heads, caps)


def _pick(backend):
    if backend is None:
        return _ckernels or _pykernels
    if backend == "python":
        return _pykernels
    if backend == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        return _ckernels
    raise ValueError(f"unknown backend {backend!r}")
