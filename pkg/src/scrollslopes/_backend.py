"""Kernel selection: compiled extension when available and safe, else pure.

The compiled kernel works on int64.  ``fits_int64`` bounds every
intermediate the kernel can form: each accumulator is a sum of terms
a*b or a*b*c1 over input entries, so its magnitude is at most
sum|x| * sum|y| * max(1, |c1|).  When that bound clears 2**62 we take
the fast path; otherwise (huge coefficients) the pure kernel's arbitrary
precision ints take over.  Results are identical by construction and
``tests/test_backend.py`` checks the equivalence on both sides of the
threshold.
"""

from __future__ import annotations

from . import _pure

try:
    from . import _speedups
except ImportError:  # pure install, or extension build was skipped
    _speedups = None

_INT64_HEADROOM = 2**62


def have_speedups() -> bool:
    return _speedups is not None


def backend_name() -> str:
    return "compiled" if _speedups is not None else "pure"


def fits_int64(c1: int, x: list, y: list) -> bool:
    sx = sum(v if v >= 0 else -v for v in x)
    sy = sum(v if v >= 0 else -v for v in y)
    scale = c1 if c1 >= 0 else -c1
    if scale < 1:
        scale = 1
    return sx * sy * scale < _INT64_HEADROOM


def mul_reduce(r: int, c1: int, x: list, y: list) -> list:
    if _speedups is not None and fits_int64(c1, x, y):
        return _speedups.mul_reduce(r, c1, x, y)
    return _pure.mul_reduce(r, c1, x, y)
