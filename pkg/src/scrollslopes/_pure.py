"""Pure-Python twin of the compiled product kernel.

Coefficient vectors are dense lists of length 2*r indexed by k = j*r + i
for the monomial H^i R^j (0 <= i < r, j in {0, 1}).  Arithmetic is on
Python ints, so this path has no overflow ceiling; the compiled kernel in
``_speedups`` implements the same loop on int64 and is only used when the
backend has proved the result fits.

Reduction rules for P(O(a_1) + ... + O(a_r)) over the line, c1 = sum(a_i):

    R * R    -> 0
    H^r      -> c1 * H^(r-1) R

so in a product of normal forms any monomial with i + j > r dies and
H^r picks up a single factor of c1.
"""

from __future__ import annotations


def mul_reduce(r: int, c1: int, x: list, y: list) -> list:
    out = [0] * (2 * r)
    for i1 in range(r):
        for j1 in (0, 1):
            a = x[j1 * r + i1]
            if not a:
                continue
            for i2 in range(r):
                for j2 in (0, 1):
                    b = y[j2 * r + i2]
                    if not b:
                        continue
                    j = j1 + j2
                    if j >= 2:
                        continue
                    i = i1 + i2
                    if i < r:
                        out[j * r + i] += a * b
                    elif i == r and j == 0:
                        # H^r = c1 * H^(r-1) R; anything beyond vanishes.
                        out[r + r - 1] += a * b * c1
    return out
