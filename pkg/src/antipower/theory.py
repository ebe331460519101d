"""Mechanical checks of the structural results about anti-power prefixes.

Each ``check_*`` returns a :class:`Verdict`. Conditional results pass
vacuously when their hypotheses fail, with the failed hypothesis recorded.
A result whose hypotheses hold but whose conclusion is contradicted raises
:class:`FalsificationError`; that must never happen.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .anti_power import (
    InvariantViolation,
    f_membership,
    gamma_values,
    kappa,
    kappa_table,
)
from .dyadic import (
    below_lemma7_bound,
    delta_of,
    ell_of,
    f_envelope,
    g_envelope,
    h_envelope,
    two_adic_split,
)
from .words import equal_factor_classes, factors_equal, tm_letter, tm_prefix_packed

__all__ = [
    "DyadicParams", "FalsificationError", "FamilyIndex", "FamilyInstance",
    "LemmaOneParams", "Verdict", "check_corollary1", "check_kappa_upper_bounds",
    "check_lemma1", "check_lemma3", "check_lemma4", "check_lemma9", "check_prop1_i",
    "check_theorem_bounds", "chi", "delta_of", "dyadic_params", "family_params",
    "lemma1_conditions", "lemma4_smallest_j", "prop1_ii_witness",
]

BASE_SEARCH = 1 << 12
KAPPA_DIRECT_LIMIT = 5000


@dataclass
class Verdict:
    holds: bool
    checked: dict[str, bool] = field(default_factory=dict)
    witness: Optional[dict] = None
    skipped: dict[str, str] = field(default_factory=dict)


class FalsificationError(AssertionError):
    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


@dataclass(frozen=True)
class DyadicParams:
    m: int
    ell: int
    delta: Optional[int]
    L: Optional[int]
    h: Optional[int]


def dyadic_params(m: int) -> DyadicParams:
    delta = delta_of(m) if m >= 2 else None
    L = h = None
    if m % 8 == 1 and m > 1:
        L, h = two_adic_split(m)
    return DyadicParams(m, ell_of(m), delta, L, h)


# -- gaps between equal factors ------------------------------------------------

def check_prop1_i(m: int, N: int) -> Verdict:
    """Every gap between equal length-m factors of the length-N prefix is a multiple of 2**delta(m).

    Positions of one factor value are checked through consecutive gaps,
    which covers every pair of the class.
    """
    if m < 2 or N < 2 * m:
        raise ValueError("need m >= 2 and N >= 2m")
    step = 1 << delta_of(m)
    pairs = 0
    for pos in equal_factor_classes(m, N):
        pairs += len(pos) * (len(pos) - 1) // 2
        for a, b in zip(pos, pos[1:]):
            if (b - a) % step:
                return Verdict(False, {"divisible": False},
                               {"a": a, "b": b, "gap": b - a, "divisor": step})
    return Verdict(True, {"divisible": True}, {"pairs": pairs, "divisor": step})


def _find(pattern: str, limit: int = BASE_SEARCH) -> int:
    a = str(tm_prefix_packed(limit)).find(pattern)
    if a < 0:
        raise InvariantViolation(f"{pattern} not found in the first {limit} letters")
    return a + 1


def _prop1_ii(m):
    if m == 2:
        return _find("01" + "1" + "01"), 3
    if m == 3:
        return _find("101" + "101"), 3
    if m % 2 == 0:
        a, g = _prop1_ii(m // 2)
        # mu sends the letter at position i to positions 2i-1, 2i
        return 2 * a - 1, 2 * g
    # drop the last letter of the (m+1) witness; the gap is unchanged
    return _prop1_ii(m + 1)


def prop1_ii_witness(m: int) -> tuple[int, int, Verdict]:
    """Position a and gap g with <a, a+m-1> == <a+g, a+g+m-1>, g >= m, 2**(delta+1) not dividing g."""
    if m < 2:
        raise ValueError("need m >= 2")
    a, g = _prop1_ii(m)
    checked = {
        "factor_equal": factors_equal(a, a + g, m),
        "gap_at_least_m": g >= m,
        "not_divisible": g % (1 << (delta_of(m) + 1)) != 0,
    }
    verdict = Verdict(all(checked.values()), checked, {"a": a, "gap": g})
    if not verdict.holds:
        raise InvariantViolation(f"constructed witness for m={m} failed re-verification: {checked}")
    return a, g, verdict


def check_corollary1(k: int, m: int) -> Verdict:
    """If m is an odd non-member of F(k), k >= 3, then k - 1 >= 2**delta(m)."""
    if k < 3 or m < 1 or m % 2 == 0:
        raise ValueError("need k >= 3 and odd m")
    if f_membership(m, k):
        return Verdict(True, skipped={"hypothesis": f"{m} is in F({k})"})
    ok = 2 * (k - 1) >= 1 if m == 1 else k - 1 >= 1 << delta_of(m)
    return Verdict(ok, {"k-1 >= 2^delta": ok}, {"k": k, "m": m})


# -- the block-equality construction and its parameter families ---------------

@dataclass(frozen=True)
class LemmaOneParams:
    r: int
    m: int
    ell: int
    h: int
    p: int
    q: int


def lemma1_conditions(P: LemmaOneParams) -> dict[str, bool]:
    quarter = 1 << (P.ell - 2)
    block = 1 << (P.ell + 1)
    return {
        "c1": P.h < quarter,
        "c2": P.r * P.m == P.p * block + 2 * quarter + P.h,
        "c3": (P.r + 1) * P.m <= P.p * block + 5 * quarter,
        "c4": (P.r + quarter) * P.m == P.q * block + 3 * quarter + P.h,
        "c5": tm_letter(P.p + 1) != tm_letter(P.q + 1),
    }


def check_lemma1(P: LemmaOneParams, kappa_limit: int = KAPPA_DIRECT_LIMIT) -> Verdict:
    """Test the five hypotheses; when they hold, compare the two blocks they force equal."""
    if P.ell < 2 or min(P.r, P.m, P.h, P.p, P.q) < 0:
        raise ValueError("need ell >= 2 and nonnegative parameters")
    checked = lemma1_conditions(P)
    if not all(checked.values()):
        return Verdict(False, checked)
    shift = 1 << (P.ell - 2)
    first, second = P.r * P.m + 1, (P.r + shift) * P.m + 1
    bound = P.r + shift + 1
    witness = {"blocks": (P.r, P.r + shift), "starts": (first, second), "kappa_bound": bound}
    checked["blocks_equal"] = factors_equal(first, second, P.m)
    if not checked["blocks_equal"]:
        raise FalsificationError(f"construction hypotheses hold for {P} but the blocks differ",
                                 Verdict(False, checked, witness))
    if P.m % 2 and P.m <= kappa_limit:
        witness["kappa"] = kappa(P.m).kappa
        checked["kappa_bound"] = witness["kappa"] <= bound
        if not checked["kappa_bound"]:
            raise FalsificationError(f"kappa({P.m}) = {witness['kappa']} > {bound}",
                                     Verdict(False, checked, witness))
    return Verdict(True, checked, witness)


FAMILIES = {"k_alpha": 3, "K_beta": 9, "kappa_rho": 4}


@dataclass(frozen=True)
class FamilyIndex:
    family: str
    index: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.index < FAMILIES[self.family]:
            raise ValueError(f"{self.family} needs index >= {FAMILIES[self.family]}")


@dataclass(frozen=True)
class FamilyInstance:
    index: FamilyIndex
    k: int
    m: int
    params: LemmaOneParams
    gamma_lower: int


def chi(rho: int) -> int:
    return 1 if rho % 2 == 0 else 2


def family_params(idx: FamilyIndex) -> FamilyInstance:
    """k value, odd m with kappa(m) <= k, and the construction parameters certifying it."""
    n = idx.index
    if idx.family == "k_alpha":
        k = 2 ** (2 * n) + 2 ** n + 2
        m = 3 * 2 ** (2 * n) - 2 ** n + 1
        P = LemmaOneParams(r=2 ** n + 1, m=m, ell=2 * n + 2, h=1,
                           p=3 * 2 ** (n - 3), q=3 * 2 ** (2 * n - 3) + 2 ** (n - 2))
    elif idx.family == "K_beta":
        k = 2 ** (2 * n + 1) + 3 * 2 ** (n + 3) + 49
        m = 3 * 2 ** (2 * n + 1) - 2 ** (n - 1) + 1
        P = LemmaOneParams(r=3 * 2 ** (n + 3) + 48, m=m, ell=2 * n + 3, h=48,
                           p=9 * 2 ** n + 17,
                           q=3 * 2 ** (2 * n - 2) + 143 * 2 ** (n - 4) + 17)
    else:
        c = chi(n)
        k = 2 ** n + 2
        m = 5 * 2 ** (n - 1) - 8 * c + 1
        P = LemmaOneParams(r=1, m=m, ell=n + 2, h=2 ** (n - 1) - 8 * c + 1,
                           p=0, q=5 * 2 ** (n - 4) - c)
    return FamilyInstance(idx, k, m, P, gamma_lower=m)


# -- upper bounds on kappa -----------------------------------------------------

def check_lemma3(m: int) -> Verdict:
    """kappa(m) > 2**ell + 1 forces t_{m+1} t_{m+2} = 11 and t_{2m+1} t_{2m+2} = 10."""
    if m < 1 or m % 2 == 0:
        raise ValueError("m must be odd")
    K, ell = kappa(m).kappa, ell_of(m)
    if K <= (1 << ell) + 1:
        return Verdict(True, skipped={"hypothesis": f"kappa({m}) = {K} <= 2^{ell} + 1"})
    checked = {
        "t[m+1]t[m+2]=11": (tm_letter(m + 1), tm_letter(m + 2)) == (1, 1),
        "t[2m+1]t[2m+2]=10": (tm_letter(2 * m + 1), tm_letter(2 * m + 2)) == (1, 0),
    }
    verdict = Verdict(all(checked.values()), checked, {"kappa": K})
    if not verdict.holds:
        raise FalsificationError(f"digram conditions fail for m={m} with kappa = {K}", verdict)
    return verdict


def _digram(i):
    return tm_letter(i), tm_letter(i + 1)


def lemma4_smallest_j(m: int, limit: int = 40) -> Optional[int]:
    for j in range(1, limit + 1):
        if _digram(j) == _digram(m + j):
            return j
    return None


def check_lemma4(m: int, j: int) -> Verdict:
    """t_j t_{j+1} = t_{m+j} t_{m+j+1} implies m kappa(m) < (m + j + 1) 2**ell."""
    if m < 3 or m % 2 == 0 or j < 1:
        raise ValueError("need odd m >= 3 and j >= 1")
    if _digram(j) != _digram(m + j):
        return Verdict(True, skipped={"hypothesis": f"digrams at {j} and {m + j} differ"})
    K, ell = kappa(m).kappa, ell_of(m)
    ok = m * K < (m + j + 1) << ell
    verdict = Verdict(ok, {"bound": ok}, {"kappa": K, "j": j})
    if not ok:
        raise FalsificationError(f"digram bound fails for m={m}, j={j}", verdict)
    return verdict


def lemma6_n(m: int, L: int) -> int:
    """Largest n <= 2**(L-1) with m - n = 2 (mod 4)."""
    top = 1 << (L - 1)
    return top - ((top - (m - 2)) % 4)


def check_kappa_upper_bounds(m: int) -> Verdict:
    """Every applicable upper bound on kappa(m), chosen by the residue of m mod 8."""
    if m < 1 or m % 2 == 0:
        raise ValueError("m must be odd")
    K, ell = kappa(m).kappa, ell_of(m)
    top = 1 << ell
    checked, skipped = {}, {}
    if m % 8 != 1:
        checked["lemma5"] = m * K < (m + 37) * top
        skipped["lemma8"] = skipped["lemma6"] = "m != 1 (mod 8)"
    elif m == 1:
        skipped["lemma5"] = skipped["lemma8"] = skipped["lemma6"] = "m = 1"
    else:
        skipped["lemma5"] = "m = 1 (mod 8)"
        L, _ = two_adic_split(m)
        checked["lemma8"] = m * K < (m + (1 << (L + 1)) + 4) * top
        n = lemma6_n(m, L)
        if n < 2:
            skipped["lemma6"] = f"n = {n} < 2"
        elif tm_letter(m - n) != tm_letter(m - n + 1):
            skipped["lemma6"] = f"t[{m - n}] != t[{m - n + 1}]"
        elif m * (2 * n + 2) > (2 * n + 1) * top:
            skipped["lemma6"] = f"m > (1 - 1/(2n+2)) 2^ell for n = {n}"
        else:
            checked["lemma6"] = K <= top - n
    checked["lemma7"] = below_lemma7_bound(K, ell)
    return Verdict(all(checked.values()), checked, {"kappa": K, "ell": ell}, skipped)


def check_lemma9(ell: int) -> Verdict:
    """kappa(3 2^(ell-2) + 1) and kappa(2^(ell-1) + 3) exceed their rational lower bounds."""
    if ell < 3:
        raise ValueError("need ell >= 3")
    m, m2 = 3 * (1 << (ell - 2)) + 1, (1 << (ell - 1)) + 3
    K, K2 = kappa(m).kappa, kappa(m2).kappa
    checked = {
        "first": K * m > 5 << (2 * ell - 3),
        "second": K2 * m2 > 1 << (2 * ell - 2),
    }
    return Verdict(all(checked.values()), checked, {"m": m, "kappa": K, "m2": m2, "kappa2": K2})


# -- finite scaffolding of the asymptotic theorems -----------------------------

def _first_bad(keys, pred):
    for x in keys:
        if not pred(x):
            return x
    return None


def check_theorem_bounds(k_range, lam_range, ell_range, threads: int = 1) -> Verdict:
    """Finite-k inequalities behind the four asymptotic theorems.

    Gamma(k) is recomputed over odd m up to 6 max(k), twice the proven scan
    range, so the bound 3k - 4 is tested rather than assumed.
    """
    ks = list(k_range)
    lams = list(lam_range)
    ells = list(ell_range)
    if ks and ks[0] < 3:
        raise ValueError("k_range must start at 3 or more")
    powers = [1 << lam for lam in lams]
    kmax = max(ks + powers)
    table = kappa_table(range(1, 6 * kmax + 1, 2), threads)

    def complement(k):
        return [m for m, K in table.items() if K <= k]

    def big_gamma_ext(k):
        return max(complement(k))

    bg = {k: big_gamma_ext(k) for k in sorted(set(ks + powers))}
    gamma_keys = set(ks)
    for ell in ells:
        gamma_keys.update((g_envelope(ell), f_envelope(ell), h_envelope(ell + 1)))
    gv = gamma_values(gamma_keys, threads)

    failures = {}
    checked = {}

    def record(name, bad):
        checked[name] = bad is None
        if bad is not None:
            failures[name] = bad

    record("Gamma(k) <= 3k-4", _first_bad(ks, lambda k: bg[k] <= 3 * k - 4))
    record("Gamma(2^lam) <= 3 2^(lam-1)",
           _first_bad(lams, lambda lam: bg[1 << lam] <= 3 << (lam - 1)))
    record("gamma(g(ell)) >= 2^ell + 1",
           _first_bad(ells, lambda ell: gv[g_envelope(ell)] >= (1 << ell) + 1))
    record("gamma(f(ell)) <= 3 2^(ell-2) + 1",
           _first_bad(ells, lambda ell: gv[f_envelope(ell)] <= 3 * (1 << (ell - 2)) + 1))
    record("gamma(h(ell+1)) <= 2^ell + 3",
           _first_bad(ells, lambda ell: gv[h_envelope(ell + 1)] <= (1 << ell) + 3))
    record("h(ell) < f(ell) <= h(ell+1)",
           _first_bad(ells, lambda ell: h_envelope(ell) < f_envelope(ell) <= h_envelope(ell + 1)))
    pairs = list(zip(ks, ks[1:]))
    record("gamma nondecreasing", _first_bad(pairs, lambda p: gv[p[0]] <= gv[p[1]]))
    record("Gamma nondecreasing", _first_bad(pairs, lambda p: bg[p[0]] <= bg[p[1]]))
    record("complements nested",
           _first_bad(pairs, lambda p: set(complement(p[0])) <= set(complement(p[1]))))
    return Verdict(all(checked.values()), checked, failures or None)
