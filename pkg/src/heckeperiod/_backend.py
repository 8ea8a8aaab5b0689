"""Import-time choice between the compiled and pure-Python integer kernels.

Set ``HECKEPERIOD_PURE_PYTHON=1`` to force the fallback.  The compiled
kernels work in checked int64; any ``OverflowError`` they raise is retried
once with the Python kernels, which use unbounded ints.
"""

import os

from . import _pykernels

_INT64_SAFE = 1 << 62

if os.environ.get("HECKEPERIOD_PURE_PYTHON") == "1":
    _fast = None
else:
    try:
        from . import _ckernels as _fast
    except ImportError:
        _fast = None

BACKEND = _fast.BACKEND if _fast is not None else _pykernels.BACKEND


def _dispatch(name):
    slow = getattr(_pykernels, name)
    if _fast is None:
        return slow
    fast = getattr(_fast, name)

    def call(*args):
        if any(abs(a) >= _INT64_SAFE for a in args):
            return slow(*args)
        try:
            return fast(*args)
        except OverflowError:
            return slow(*args)

    call.__name__ = name
    call.__doc__ = slow.__doc__
    return call


farey_pairs = _dispatch("farey_pairs")
left_neighbor_scan = _dispatch("left_neighbor_scan")
left_neighbor_fast = _dispatch("left_neighbor_fast")
left_neighbor_pair = _dispatch("left_neighbor_pair")
lns_pairs = _dispatch("lns_pairs")
level_of = _dispatch("level_of")
s_m_quads = _dispatch("s_m_quads")


def available_backends():
    """Kernel modules importable in this process, compiled first."""
    mods = [_pykernels]
    if _fast is not None:
        mods.insert(0, _fast)
    return mods
