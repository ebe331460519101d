"""Select the kernel implementation once, at import.

The compiled extension is used when it was built; setting
``ANTIPOWER_PURE_PYTHON=1`` forces the numpy fallback.
"""

import os

if os.environ.get("ANTIPOWER_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels
    except ImportError:
        from . import _kernels_py as kernels

BACKEND = "python" if kernels.__name__.endswith("_py") else "cython"

tm_letters = kernels.tm_letters
factors_equal = kernels.factors_equal
first_repeat = kernels.first_repeat
