"""Hot numeric kernels behind one import surface.

The numba build is used when numba imports cleanly, unless the environment
variable ``DWGEN_DISABLE_NUMBA`` is set to a non-empty value other than ``0``.
Both backends produce identical outputs for identical inputs.
"""
import os

from . import numpy_impl

_disabled = os.environ.get("DWGEN_DISABLE_NUMBA", "") not in ("", "0")

if _disabled:
    _impl = numpy_impl
else:
    try:
        from . import numba_impl as _impl
    except ImportError:  # pragma: no cover - numba missing
        _impl = numpy_impl

BACKEND = "numba" if _impl is not numpy_impl else "numpy"

splitmix64_fill = _impl.splitmix64_fill
gfsr_fill = _impl.gfsr_fill
to_unit = _impl.to_unit
gaussian_pick = _impl.gaussian_pick
uniform_pick = _impl.uniform_pick
bernoulli_retain = _impl.bernoulli_retain
decode_mixed_radix = _impl.decode_mixed_radix
cents = _impl.cents

GFSR_LONG = numpy_impl.GFSR_LONG
GFSR_SHORT = numpy_impl.GFSR_SHORT

__all__ = [
    "BACKEND", "splitmix64_fill", "gfsr_fill", "to_unit", "gaussian_pick",
    "uniform_pick", "bernoulli_retain", "decode_mixed_radix", "cents",
    "GFSR_LONG", "GFSR_SHORT",
]
