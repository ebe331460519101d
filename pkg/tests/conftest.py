import pytest

from antipower import _kernels_py

try:
    from antipower import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

BACKENDS = [pytest.param(_kernels_py, id="python")]
if _kernels_c is not None:
    BACKENDS.append(pytest.param(_kernels_c, id="cython"))


@pytest.fixture(params=BACKENDS, scope="module")
def kernels(request):
    return request.param


@pytest.fixture(scope="session")
def prefix_str():
    """Reference prefix of length 2**16 built by the doubling recurrence A_{n+1} = A_n B_n."""
    a = "0"
    while len(a) < 1 << 16:
        a = a + a.translate(str.maketrans("01", "10"))
    return a
