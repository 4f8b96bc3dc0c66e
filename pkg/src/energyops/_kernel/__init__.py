"""Kernel backend selection.

The compiled extension is used when it imported cleanly; the pure-Python
twin is the fallback.  Set ``ENERGYOPS_PURE=1`` to force the fallback
(used by the benchmark and the backend-agreement tests).
"""

import os

from . import pure

if os.environ.get("ENERGYOPS_PURE"):
    _impl = pure
    BACKEND = "pure"
else:
    try:
        from . import _speedups as _impl

        BACKEND = "speedups"
    except ImportError:
        _impl = pure
        BACKEND = "pure"

S_ZERO = _impl.S_ZERO
S_ONE = _impl.S_ONE
q_norm = _impl.q_norm
s_make = _impl.s_make
s_from_int = _impl.s_from_int
s_is_zero = _impl.s_is_zero
s_add = _impl.s_add
s_neg = _impl.s_neg
s_sub = _impl.s_sub
s_conj = _impl.s_conj
s_mul = _impl.s_mul
s_inv = _impl.s_inv
s_div = _impl.s_div
p_add = _impl.p_add
p_scale = _impl.p_scale
p_mul = _impl.p_mul
p_diff = _impl.p_diff
p_antideriv = _impl.p_antideriv


def backend_name():
    """Name of the kernel implementation actually in use."""
    return BACKEND
