"""Both kernel backends must agree bit for bit."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antipower import _backend
from antipower.words import tm_letter


def test_backend_selected():
    assert _backend.BACKEND in ("python", "cython")


@pytest.mark.parametrize("start, n", [(0, 1), (0, 200), (63, 130), (10**12 - 5, 1000), (2**50 + 17, 77)])
def test_tm_letters_parity(kernels, start, n):
    got = kernels.tm_letters(start, n)
    assert got.dtype == np.uint8
    assert got.tolist() == [tm_letter(start + i + 1) for i in range(n)]


@given(st.integers(0, 2**40), st.integers(0, 2**40), st.integers(1, 500))
def test_factors_equal_matches_letters(kernels, a, b, n):
    expected = np.array_equal(kernels.tm_letters(a, n), kernels.tm_letters(b, n))
    assert kernels.factors_equal(a, b, n) == expected


def test_factors_equal_long_runs(kernels):
    # mu^n images: <2^n r + 1, 2^n (r+1)> depends only on t_{r+1}
    n = 12
    assert kernels.factors_equal(0, 3 << n, 1 << n)       # t_1 = t_4 = 0
    assert not kernels.factors_equal(0, 1 << n, 1 << n)   # t_1 != t_2
    # one letter further the runs agree iff the next letters agree
    nxt = tm_letter((1 << n) + 1) == tm_letter((4 << n) + 1)
    assert kernels.factors_equal(0, 3 << n, (1 << n) + 1) is nxt


@pytest.mark.parametrize("m", [1, 3, 9, 64, 65, 127, 185])
def test_first_repeat_known(kernels, m):
    expected = {1: 3, 3: 3, 9: 6, 185: 74}
    hit = kernels.first_repeat(m, 10**6)
    assert hit is not None and hit[0] == hit[2] + 1
    if m in expected:
        assert hit[0] == expected[m]


def test_first_repeat_bounded_search(kernels):
    assert kernels.first_repeat(5, 3) is None
    assert kernels.first_repeat(3, 3) == (3, 0, 2)
    assert kernels.first_repeat(3, 2) is None


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 200), st.integers(0, 5000), st.integers(1, 4))
def test_backends_agree_on_first_repeat(m, offset, lam):
    from antipower import _kernels_py
    from antipower._backend import kernels as active
    assert _kernels_py.first_repeat(m, 4000, offset, lam) == active.first_repeat(m, 4000, offset, lam)


def test_backends_agree_on_kappa_sweep():
    from antipower import _kernels_py
    from antipower._backend import kernels as active
    for m in range(1, 600, 2):
        assert _kernels_py.first_repeat(m, 10**5) == active.first_repeat(m, 10**5)
