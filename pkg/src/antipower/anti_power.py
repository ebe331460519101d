"""Anti-power membership for Thue-Morse prefixes and the statistics built on it.

For odd m, m lies in F(k) exactly when kappa(m) > k, which is how the scans
derive gamma and Gamma from a single table of kappa values.
"""

from __future__ import annotations

import bisect
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import _backend
from .dyadic import ell_of, g_envelope
from .words import FactorSpec, factors_equal


class DomainError(ValueError):
    """Argument outside the domain of the statistic."""


class InvariantViolation(RuntimeError):
    """A proven bound or a verification step failed; never silently ignored."""


@dataclass(frozen=True)
class BlockDecomposition:
    m: int
    k: int
    offset: int = 0

    def __post_init__(self):
        if self.m < 1 or self.k < 1 or self.offset < 0:
            raise DomainError("need m >= 1, k >= 1, offset >= 0")

    def block(self, n: int) -> FactorSpec:
        """Block n (0-based) as a 1-based factor interval."""
        start = self.offset + n * self.m
        return FactorSpec(start + 1, start + self.m)


@dataclass(frozen=True)
class AntiPowerReport:
    is_anti_power: bool
    first_collision: Optional[tuple[int, int]] = None


@dataclass(frozen=True)
class KappaResult:
    m: int
    kappa: int
    witness: tuple[int, int]


@dataclass(frozen=True)
class ComplementSet:
    k: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class ScanRow:
    key: int
    value: Optional[int]
    ratio: str
    error: Optional[str] = None


def _require_odd(m):
    if m < 1 or m % 2 == 0:
        raise DomainError(f"m must be an odd positive integer, got {m}")


def _confirm(m, offset, n1, n2):
    if not factors_equal(offset + n1 * m + 1, offset + n2 * m + 1, m):
        raise InvariantViolation(f"kernel reported blocks {n1},{n2} equal for m={m} but they differ")


def is_k_anti_power_prefix(decomp: BlockDecomposition) -> AntiPowerReport:
    hit = _backend.first_repeat(decomp.m, decomp.k, decomp.offset, 1)
    if hit is None:
        return AntiPowerReport(True)
    _, n1, n2 = hit
    _confirm(decomp.m, decomp.offset, n1, n2)
    return AntiPowerReport(False, (n1, n2))


def anti_power_report(m: int, k: int, offset: int = 0) -> AntiPowerReport:
    return is_k_anti_power_prefix(BlockDecomposition(m, k, offset))


def in_ap(m: int, k: int, offset: int = 0) -> bool:
    """m in AP_offset(t, k); any positive m."""
    return anti_power_report(m, k, offset).is_anti_power


def f_membership(m: int, k: int) -> bool:
    """m in F(k)."""
    _require_odd(m)
    if k < 1:
        raise DomainError("k must be positive")
    return in_ap(m, k)


def kappa_cap(m: int) -> int:
    return g_envelope(ell_of(m))


@lru_cache(maxsize=None)
def kappa(m: int) -> KappaResult:
    """kappa(m): the first k at which the length-km prefix stops being a k-anti-power."""
    _require_odd(m)
    cap = kappa_cap(m)
    hit = _backend.first_repeat(m, cap, 0, 1)
    if hit is None:
        raise InvariantViolation(f"no repeated block among the first {cap} blocks for m={m}")
    k, n1, n2 = hit
    _confirm(m, 0, n1, n2)
    return KappaResult(m, k, (n1, n2))


def kappa_lambda(m: int, lam: int) -> int:
    """Smallest k such that some block value occurs more than lam times among the first k blocks."""
    _require_odd(m)
    if lam < 1:
        raise DomainError("lambda must be positive")
    if lam == 1:
        return kappa(m).kappa
    # pigeonhole over the (fewer than 4m + 4) distinct length-m factors
    cap = lam * (4 * m + 4) + 1
    hit = _backend.first_repeat(m, cap, 0, lam)
    if hit is None:
        raise InvariantViolation(f"pigeonhole cap {cap} exceeded for m={m}, lambda={lam}")
    k, n1, n2 = hit
    _confirm(m, 0, n1, n2)
    return k


def gamma_cap(k: int) -> int:
    return 1 << (ell_of(k) + 3)


def gamma(k: int) -> int:
    """min F(k), found by ascending scan over odd m."""
    if k < 1:
        raise DomainError("k must be positive")
    cap = gamma_cap(k)
    for m in range(1, cap + 1, 2):
        if f_membership(m, k):
            return m
    raise InvariantViolation(f"gamma({k}) exceeds the safety cap {cap}")


def _require_k3(k):
    if k < 3:
        raise DomainError(f"the complement of F(k) is only finite and nonempty for k >= 3, got k={k}")


def big_gamma(k: int) -> int:
    """max of the odd non-members of F(k); every non-member is at most 3k - 4."""
    _require_k3(k)
    top = 3 * k - 4
    for m in range(top if top % 2 else top - 1, 0, -2):
        if not f_membership(m, k):
            return m
    raise InvariantViolation(f"3 must be a non-member of F({k})")


def complement_set(k: int) -> ComplementSet:
    _require_k3(k)
    return ComplementSet(k, tuple(m for m in range(1, 3 * k - 3, 2) if not f_membership(m, k)))


def doubling_check(m: int, k: int) -> bool:
    """m in AP(t,k) iff 2m in AP(t,k)."""
    return in_ap(m, k) == in_ap(2 * m, k)


def ap_members(k: int, limit: int, offset: int = 0) -> list[int]:
    """All m <= limit in AP_offset(t, k)."""
    return [m for m in range(1, limit + 1) if in_ap(m, k, offset)]


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("ANTIPOWER_THREADS", "1")))
    except ValueError:
        return 1


def _kappa_or_error(m):
    try:
        return kappa(m).kappa
    except (DomainError, InvariantViolation) as exc:
        return exc


def kappa_table(ms, threads: int = 1, keep_errors: bool = False) -> dict:
    """kappa(m) for every m in ms; thread count never affects the values.

    With keep_errors the failing keys map to their exception instead of raising.
    """
    ms = list(ms)
    if threads > 1 and len(ms) > 1:
        with ThreadPoolExecutor(threads) as pool:
            values = list(pool.map(_kappa_or_error, ms))
    else:
        values = [_kappa_or_error(m) for m in ms]
    if not keep_errors:
        for v in values:
            if isinstance(v, Exception):
                raise v
    return dict(zip(ms, values))


def format_ratio(value: int, key: int) -> str:
    """value/key with 6 decimals, exact round-half-even."""
    q, r = divmod(value * 10**6, key)
    if 2 * r > key or (2 * r == key and q % 2):
        q += 1
    return f"{q // 10**6}.{q % 10**6:06d}"


def _row(key, value):
    return ScanRow(key, value, format_ratio(value, key))


def _error_row(key, exc):
    return ScanRow(key, None, "", f"{type(exc).__name__}: {exc}")


def gamma_values(ks, threads: int = 1) -> dict[int, int | Exception]:
    """gamma(k) for many k at once via the running maximum of kappa over odd m."""
    ks = sorted(set(ks))
    out: dict[int, int | Exception] = {}
    for k in ks:
        if k < 1:
            out[k] = DomainError("k must be positive")
    want = [k for k in ks if k >= 1]
    if not want:
        return out
    target, hard_cap = want[-1], gamma_cap(want[-1])
    odd_ms, running = [], []
    batch = 64 * max(1, threads)
    m = 1
    while (not running or running[-1] <= target) and m <= hard_cap:
        chunk = list(range(m, min(m + 2 * batch, hard_cap + 1), 2))
        table = kappa_table(chunk, threads)
        for mm in chunk:
            odd_ms.append(mm)
            running.append(max(running[-1], table[mm]) if running else table[mm])
        m = chunk[-1] + 2
    for k in want:
        i = bisect.bisect_right(running, k)
        if i < len(odd_ms) and odd_ms[i] <= gamma_cap(k):
            out[k] = odd_ms[i]
        else:
            out[k] = InvariantViolation(f"gamma({k}) exceeds the safety cap {gamma_cap(k)}")
    return out


def big_gamma_values(ks, threads: int = 1) -> dict[int, int | Exception]:
    """Gamma(k) for many k from one kappa table over odd m <= 3 max(k) - 4."""
    ks = sorted(set(ks))
    out: dict[int, int | Exception] = {}
    good = []
    for k in ks:
        try:
            _require_k3(k)
            good.append(k)
        except DomainError as exc:
            out[k] = exc
    if good:
        table = kappa_table(range(1, 3 * good[-1] - 3, 2), threads)
        for k in good:
            top = 3 * k - 4
            out[k] = max(m for m, kap in table.items() if m <= top and kap <= k)
    return out


STATISTICS = ("gamma", "big_gamma", "kappa")


def scan(statistic: str, start: int, stop: int, stride: int = 1,
         odd: Optional[bool] = None, threads: int = 1) -> list[ScanRow]:
    """One row per key in [start, stop] (inclusive), in increasing key order.

    kappa scans default to odd keys only. Per-key domain errors become
    annotated rows instead of aborting the sweep.
    """
    statistic = statistic.replace("-", "_")
    if statistic not in STATISTICS:
        raise DomainError(f"unknown statistic {statistic!r}")
    if stride < 1:
        raise DomainError("stride must be positive")
    if odd is None:
        odd = statistic == "kappa"
    keys = [x for x in range(start, stop + 1, stride) if not odd or x % 2]

    values: dict[int, int | Exception]
    if statistic == "kappa":
        values = kappa_table(keys, threads, keep_errors=True)
    else:
        compute = gamma_values if statistic == "gamma" else big_gamma_values
        try:
            values = compute(keys, threads)
        except InvariantViolation as exc:
            values = {x: exc for x in keys}

    return [_error_row(x, v) if isinstance(v, Exception) else _row(x, v)
            for x in keys for v in (values[x],)]
