# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled product kernel for scroll Chow classes.

Same contract as ``_pure.mul_reduce`` but on int64.  Callers must have
checked the overflow precondition (see ``_backend.fits_int64``); this
module does not re-check it.
"""

from cpython cimport array
import array


def mul_reduce(int r, long long c1, xs, ys):
    cdef array.array xa = array.array("q", xs)
    cdef array.array ya = array.array("q", ys)
    cdef array.array oa = array.array("q", bytes(16 * r))
    cdef long long[::1] x = xa
    cdef long long[::1] y = ya
    cdef long long[::1] out = oa
    cdef int i1, i2, j1, j2, i, j
    cdef long long a, b

    for i1 in range(r):
        for j1 in range(2):
            a = x[j1 * r + i1]
            if a == 0:
                continue
            for i2 in range(r):
                for j2 in range(2):
                    b = y[j2 * r + i2]
                    if b == 0:
                        continue
                    j = j1 + j2
                    if j >= 2:
                        continue
                    i = i1 + i2
                    if i < r:
                        out[j * r + i] += a * b
                    elif i == r and j == 0:
                        out[2 * r - 1] += a * b * c1
    return list(oa)
