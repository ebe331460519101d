"""Exact integer versions of the logarithms and envelopes used in the bounds.

Nothing here touches floating point.
"""

from math import isqrt


def ell_of(m: int) -> int:
    """ceil(log2 m): the smallest e >= 0 with 2**e >= m."""
    if m < 1:
        raise ValueError("m must be positive")
    return (m - 1).bit_length()


def delta_of(m: int) -> int:
    """ceil(log2(m/3)) for m >= 2, i.e. the smallest d >= 0 with 3 * 2**d >= m."""
    if m < 2:
        raise ValueError("delta is defined for m >= 2")
    return ((m + 2) // 3 - 1).bit_length()


def two_adic_split(m: int) -> tuple[int, int]:
    """Write an odd m > 1 as 2**L * h + 1 with h odd; returns (L, h)."""
    if m < 3 or m % 2 == 0:
        raise ValueError("need odd m >= 3")
    n = m - 1
    L = (n & -n).bit_length() - 1
    return L, n >> L


def g_envelope(ell: int) -> int:
    """floor(2**ell + 2**((ell+5)/2) + 10) + 1."""
    return (1 << ell) + isqrt(1 << (ell + 5)) + 11


def f_envelope(ell: int) -> int:
    """floor(5 * 2**(2 ell - 3) / (3 * 2**(ell-2) + 1)), ell >= 3."""
    return (5 << (2 * ell - 3)) // (3 * (1 << (ell - 2)) + 1)


def h_envelope(ell: int) -> int:
    """floor(2**(2 ell - 2) / (2**(ell-1) + 3)), ell >= 2."""
    return (1 << (2 * ell - 2)) // ((1 << (ell - 1)) + 3)


def below_lemma7_bound(kappa: int, ell: int) -> bool:
    """kappa < 2**ell + 2**((ell+5)/2) + 10, decided by squaring."""
    d = kappa - (1 << ell) - 10
    return d <= 0 or d * d < (1 << (ell + 5))


def kappa_lower_bound(m: int) -> int:
    """Smallest integer k with k >= 2**delta(m) + 1 (delta(1) = -1 gives 3/2)."""
    if m == 1:
        return 2
    return (1 << delta_of(m)) + 1
