"""Naive reference implementations used to certify the fast paths.

Only ``tm_letter`` is shared with the rest of the package. Everything is
materialised as tuples and compared pair by pair; speed is not a goal.
"""

from .anti_power import AntiPowerReport
from .words import tm_letter


def _letters(start, n):
    # 1-based start
    return tuple(tm_letter(i) for i in range(start, start + n))


def _first_collision(blocks):
    for n2 in range(len(blocks)):
        for n1 in range(n2):
            if blocks[n1] == blocks[n2]:
                return n1, n2
    return None


def naive_is_anti_power(m, k, offset_j=0):
    prefix = _letters(offset_j + 1, k * m)
    blocks = [prefix[n * m:(n + 1) * m] for n in range(k)]
    hit = _first_collision(blocks)
    return AntiPowerReport(hit is None, hit)


def naive_kappa(m):
    k = 1
    prefix = ()
    while True:
        if len(prefix) < k * m:
            prefix = _letters(1, 2 * k * m)
        blocks = [prefix[n * m:(n + 1) * m] for n in range(k)]
        if _first_collision(blocks) is not None:
            return k
        k += 1


def naive_equal_factor_pairs(m, N):
    prefix = _letters(1, N)
    pairs = []
    for a in range(1, N - m + 2):
        for b in range(a + 1, N - m + 2):
            if all(prefix[a - 1 + d] == prefix[b - 1 + d] for d in range(m)):
                pairs.append((a, b))
    return pairs
