"""Compare the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--max-m 1999]
"""

import argparse
import timeit

from antipower import _kernels_py
from antipower.dyadic import ell_of, g_envelope

try:
    from antipower import _kernels
except ImportError:
    _kernels = None


def kappa_sweep(kernels, max_m):
    for m in range(1, max_m + 1, 2):
        kernels.first_repeat(m, g_envelope(ell_of(m)), 0, 1)


def letters(kernels, n):
    kernels.tm_letters(10**12, n)


def long_compare(kernels, n):
    # adding 3 * 2**40 raises the popcount by two below 2**40, so the blocks agree
    assert kernels.factors_equal(0, 3 << 40, n)


CASES = {
    "kappa sweep": kappa_sweep,
    "tm_letters 2^22": lambda k, _: letters(k, 1 << 22),
    "factors_equal 2^22": lambda k, _: long_compare(k, 1 << 22),
}


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--max-m", type=int, default=1999)
    args = parser.parse_args(argv)

    backends = {"python": _kernels_py}
    if _kernels is not None:
        backends["cython"] = _kernels
    else:
        print("compiled extension not built; timing the fallback only")

    print(f"{'case':22} " + " ".join(f"{name:>10}" for name in backends) + "   speedup")
    for label, fn in CASES.items():
        times = {}
        for name, kernels in backends.items():
            times[name] = min(timeit.repeat(lambda: fn(kernels, args.max_m), number=1, repeat=args.repeat))
        cells = " ".join(f"{times[name]:10.4f}" for name in backends)
        speedup = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else ""
        print(f"{label:22} {cells}   {speedup}")


if __name__ == "__main__":
    main()
