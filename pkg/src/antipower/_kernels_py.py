"""Pure-Python/numpy implementations of the hot kernels.

Every function here has a twin with the same signature in ``_kernels.pyx``;
``antipower._backend`` picks one at import time. Positions are 0-based.
"""

import numpy as np

_CHUNK = 1 << 22


def tm_letters(start, n):
    """Letters ``t[start] .. t[start+n-1]`` (0-based) as a uint8 array of 0/1."""
    out = np.empty(n, dtype=np.uint8)
    for lo in range(0, n, _CHUNK):
        hi = min(n, lo + _CHUNK)
        idx = np.arange(start + lo, start + hi, dtype=np.uint64)
        out[lo:hi] = np.bitwise_count(idx) & 1
    return out


def factors_equal(a, b, length):
    """True iff the factors of the given length at 0-based starts a and b coincide."""
    for lo in range(0, length, _CHUNK):
        n = min(_CHUNK, length - lo)
        if not np.array_equal(tm_letters(a + lo, n), tm_letters(b + lo, n)):
            return False
    return True


def first_repeat(m, k_max, offset=0, lam=1):
    """Scan the blocks ``offset + n*m`` for n = 0, 1, ... k_max-1.

    Returns ``(k, n1, n2)`` for the first block n2 whose value has now been
    seen more than ``lam`` times (k = n2 + 1, n1 = earliest block with that
    value), or None when the first k_max blocks never exceed ``lam``.
    """
    seen = {}
    n = 0
    batch = 16
    while n < k_max:
        c = min(batch, k_max - n)
        buf = tm_letters(offset + n * m, c * m).tobytes()
        for i in range(c):
            # dict lookup confirms byte equality after the hash matches
            key = buf[i * m:(i + 1) * m]
            entry = seen.get(key)
            if entry is None:
                seen[key] = [n + i, 1]
                continue
            entry[1] += 1
            if entry[1] > lam:
                return n + i + 1, entry[0], n + i
        n += c
        batch = min(batch * 2, max(1, _CHUNK // m))
    return None
