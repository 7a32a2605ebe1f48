"""Pure and compiled kernels must be indistinguishable, including across
the int64 safety threshold where the backend switches paths."""

import random

import pytest

from scrollslopes import _backend, _pure
from scrollslopes.chow import ChowClass, make_scroll, mul


def random_dense(rng, r, lo=-10, hi=10):
    return [rng.randint(lo, hi) for _ in range(2 * r)]


def test_backend_reports_a_name():
    assert _backend.backend_name() in ("compiled", "pure")


@pytest.mark.skipif(not _backend.have_speedups(), reason="extension not built")
def test_compiled_matches_pure_on_random_cases():
    rng = random.Random(7)
    for _ in range(500):
        r = rng.randint(2, 6)
        c1 = rng.randint(-8, 8)
        x, y = random_dense(rng, r), random_dense(rng, r)
        assert _backend._speedups.mul_reduce(r, c1, x, y) == _pure.mul_reduce(r, c1, x, y)


def test_fits_int64_accepts_small_and_rejects_huge():
    assert _backend.fits_int64(3, [10, 10, 10], [10, 10, 10])
    big = 2**40
    assert not _backend.fits_int64(3, [big, 0, 0], [big, 0, 0])


def test_huge_coefficients_fall_back_and_stay_exact():
    # products of these coefficients overflow int64; the backend must
    # route to the pure kernel and keep exact integer results
    r, c1 = 3, 5
    big = 2**40
    x = [big, 0, 0, 0, 0, 0]
    assert not _backend.fits_int64(c1, x, x)
    got = _backend.mul_reduce(r, c1, x, x)
    assert got == _pure.mul_reduce(r, c1, x, x)
    assert got[0] == big * big  # constant * constant, no reduction

    s = make_scroll([2, 2, 1])
    h_big = ChowClass(s, {(1, 0): big})
    out = mul(mul(h_big, h_big), ChowClass(s, {(1, 0): big}))
    assert out.coefficient(2, 1) == s.c1 * big**3


@pytest.mark.skipif(not _backend.have_speedups(), reason="extension not built")
def test_threshold_boundary_agreement():
    # straddle the switch point: same answers either side
    r = 2
    for scale in (2**20, 2**31 - 1):
        x = [scale, scale, -scale, scale]
        y = [scale, -scale, scale, scale]
        fast_ok = _backend.fits_int64(1, x, y)
        got = _backend.mul_reduce(r, 1, x, y)
        assert got == _pure.mul_reduce(r, 1, x, y)
        if fast_ok:
            assert got == _backend._speedups.mul_reduce(r, 1, x, y)
