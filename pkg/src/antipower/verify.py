"""Named verification sweeps behind ``antipower verify``."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Optional

from . import theory
from .anti_power import InvariantViolation, big_gamma, kappa
from .dyadic import kappa_lower_bound
from .theory import FamilyIndex, FalsificationError

ALPHAS = range(3, 9)
BETAS = range(9, 12)
RHOS = range(4, 17)


@dataclass
class VerifyReport:
    check: str
    swept: str
    passed: int
    failed: int
    first_failure: Optional[str]
    seconds: float

    def as_dict(self):
        return asdict(self)


def _sweep(check: str, swept: str, items: Iterable, fn: Callable) -> VerifyReport:
    """Run fn on every item; a falsy result or a falsification counts as a failure."""
    t0 = time.perf_counter()
    passed = failed = 0
    first = None
    for item in items:
        try:
            verdict = fn(item)
            ok = verdict if isinstance(verdict, bool) else verdict.holds
            detail = None if ok else f"{item}: {verdict}"
        except (FalsificationError, InvariantViolation) as exc:
            ok, detail = False, f"{item}: {exc}"
        if ok:
            passed += 1
        else:
            failed += 1
            first = first or detail
    return VerifyReport(check, swept, passed, failed, first, round(time.perf_counter() - t0, 3))


def _families():
    yield from (FamilyIndex("k_alpha", a) for a in ALPHAS)
    yield from (FamilyIndex("K_beta", b) for b in BETAS)
    yield from (FamilyIndex("kappa_rho", r) for r in RHOS)


def suite_prop1(max_m=64, **_):
    n = 1 << 12
    ms = range(2, max_m + 1)
    return [
        _sweep("prop1_i", f"m in [2,{max_m}], N = {n}", ms, lambda m: theory.check_prop1_i(m, n)),
        _sweep("prop1_ii", f"m in [2,{max_m}]", ms, lambda m: theory.prop1_ii_witness(m)[2]),
        _sweep("corollary1", f"odd m <= {2 * max_m}, k in [3,{max_m}]",
               [(k, m) for k in range(3, max_m + 1) for m in range(1, 2 * max_m, 2)],
               lambda km: theory.check_corollary1(*km)),
    ]


def suite_lemma1(**_):
    return [_sweep("lemma1", "alpha in [3,8], beta in [9,11], rho in [4,16]", _families(),
                   lambda idx: theory.check_lemma1(theory.family_params(idx).params))]


def _family_consistency(idx: FamilyIndex) -> bool:
    inst = theory.family_params(idx)
    conditions = theory.lemma1_conditions(inst.params)
    P = inst.params
    ok = all(conditions.values())
    ok &= P.r + (1 << (P.ell - 2)) + 1 == inst.k
    # Gamma(k) >= m must stay compatible with Gamma(k) <= 3k - 4
    ok &= inst.gamma_lower <= 3 * inst.k - 4
    if inst.m <= theory.KAPPA_DIRECT_LIMIT:
        ok &= kappa(inst.m).kappa <= inst.k
    if inst.k <= 300:
        ok &= big_gamma(inst.k) >= inst.gamma_lower
    return ok


def suite_families(**_):
    return [_sweep("families", "alpha in [3,8], beta in [9,11], rho in [4,16]", _families(),
                   _family_consistency)]


def suite_kappa_bounds(max_m=999, **_):
    ms = range(1, max_m + 1, 2)
    swept = f"odd m <= {max_m}"

    def lower(m):
        return kappa(m).kappa >= kappa_lower_bound(m)

    def lemma4(m):
        j = theory.lemma4_smallest_j(m)
        return True if j is None else theory.check_lemma4(m, j)

    return [
        _sweep("kappa_lower", swept, ms, lower),
        _sweep("lemma3", swept, ms, theory.check_lemma3),
        _sweep("lemma4", f"odd m in [3,{max_m}], smallest j <= 40", range(3, max_m + 1, 2), lemma4),
        _sweep("kappa_upper", swept, ms, theory.check_kappa_upper_bounds),
    ]


def suite_lemma9(**_):
    return [_sweep("lemma9", "ell in [3,9]", range(3, 10), theory.check_lemma9)]


def suite_theorems(max_k=135, threads=1, **_):
    t0 = time.perf_counter()
    verdict = theory.check_theorem_bounds(range(3, max_k + 1), range(2, 8), range(3, 9), threads)
    elapsed = time.perf_counter() - t0
    report = _sweep("theorems", f"k in [3,{max_k}], lambda in [2,7], ell in [3,8]",
                    verdict.checked.items(),
                    lambda item: item[1] or _failure(item[0], verdict))
    report.seconds = round(elapsed, 3)
    return [report]


def _failure(name, verdict):
    raise FalsificationError(f"{name} fails first at {verdict.witness[name]}")


SUITES = {
    "prop1": suite_prop1,
    "lemma1": suite_lemma1,
    "families": suite_families,
    "kappa-bounds": suite_kappa_bounds,
    "lemma9": suite_lemma9,
    "theorems": suite_theorems,
}


def run(suite: str, **options) -> list[VerifyReport]:
    names = list(SUITES) if suite == "all" else [suite]
    reports = []
    for name in names:
        reports.extend(SUITES[name](**{k: v for k, v in options.items() if v is not None}))
    return reports
