"""Acceptance criteria, one test each, each printing a PASS/FAIL line.

Tolerances are exact unless noted; wall-time budgets are asserted as given.
"""

import csv
import time
from fractions import Fraction

import pytest

from antipower import anti_power as ap
from antipower import theory
from antipower.cli import main
from antipower.dyadic import ell_of, g_envelope, kappa_lower_bound
from antipower.oracle import naive_is_anti_power, naive_kappa
from antipower.words import tm_prefix_packed

GAMMA_BAND = (Fraction(2, 5), Fraction(8, 5))  # open interval
BIG_GAMMA_BAND = (Fraction(1), Fraction(3))  # (1, 3]


@pytest.fixture(autouse=True)
def cold_cache():
    # budgets are measured without kappa values memoised by earlier tests
    ap.kappa.cache_clear()


@pytest.fixture
def announce(capsys):
    def _announce(label, ok, detail, seconds):
        with capsys.disabled():
            print(f"\n[acceptance] {label}: {'PASS' if ok else 'FAIL'} ({seconds:.2f}s) {detail}")
        return ok
    return _announce


def _scan_csv(tmp_path, stat, lo, hi, threads=1, name=None):
    out = tmp_path / (name or f"{stat}_{lo}_{hi}_{threads}.csv")
    code = main(["scan", "--stat", stat, "--from", str(lo), "--to", str(hi),
                 "--threads", str(threads), "--out", str(out)])
    with open(out, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    return code, rows[0], rows[1:], out


def test_criterion_1_exact_values(announce):
    t0 = time.perf_counter()
    members = ap.complement_set(6).members
    prefix = str(tm_prefix_packed(9))
    report = ap.anti_power_report(3, 3)
    seconds = time.perf_counter() - t0
    ok = (members == (1, 3, 9) and prefix == "011010011" and not report.is_anti_power
          and report.first_collision == (0, 2) and seconds < 1)
    announce("1 exact values", ok, f"complement(6)={members} prefix={prefix} "
             f"witness={report.first_collision}", seconds)
    assert ok


def test_criterion_2_oracle_equivalence(announce):
    t0 = time.perf_counter()
    bad = None
    for m in range(1, 100, 2):
        if ap.kappa(m).kappa != naive_kappa(m):
            bad = ("kappa", m)
            break
        for k in range(1, 65):
            if ap.anti_power_report(m, k) != naive_is_anti_power(m, k):
                bad = ("verdict", m, k)
                break
        if bad:
            break
    seconds = time.perf_counter() - t0
    ok = bad is None and seconds < 30
    announce("2 oracle equivalence", ok, f"odd m<=99, k<=64, first mismatch={bad}", seconds)
    assert ok


def test_criterion_3_prop1(announce):
    t0 = time.perf_counter()
    gaps = [m for m in range(2, 65) if not theory.check_prop1_i(m, 1 << 12).holds]
    witnesses = [m for m in range(2, 65) if not theory.prop1_ii_witness(m)[2].holds]
    seconds = time.perf_counter() - t0
    ok = not gaps and not witnesses and seconds < 60
    announce("3 gap divisibility and witnesses", ok,
             f"m in [2,64], N=4096, failures={gaps + witnesses}", seconds)
    assert ok


def test_criterion_4_constructions(announce):
    t0 = time.perf_counter()
    idxs = ([theory.FamilyIndex("k_alpha", a) for a in range(3, 9)]
            + [theory.FamilyIndex("K_beta", b) for b in range(9, 12)]
            + [theory.FamilyIndex("kappa_rho", r) for r in range(4, 17)])
    failures = [idx for idx in idxs if not theory.check_lemma1(theory.family_params(idx).params).holds]
    big = ap.big_gamma(74)
    k185 = ap.kappa(185).kappa
    seconds = time.perf_counter() - t0
    ok = not failures and big >= 185 and 185 <= 3 * 74 - 4 and k185 <= 74 and seconds < 120
    announce("4 constructions", ok, f"{len(idxs)} instances, failures={failures}, "
             f"Gamma(74)={big}, kappa(185)={k185}", seconds)
    assert ok


def test_criterion_5_kappa_bounds(announce):
    t0 = time.perf_counter()
    lower = [m for m in range(1, 1000, 2) if ap.kappa(m).kappa < kappa_lower_bound(m)]
    upper = [m for m in range(1, 1000, 2)
             if not theory.check_kappa_upper_bounds(m).checked["lemma7"]]
    lemma9 = [ell for ell in range(3, 10) if not theory.check_lemma9(ell).holds]
    seconds = time.perf_counter() - t0
    ok = not (lower or upper or lemma9) and seconds < 120
    announce("5 kappa bounds", ok, f"odd m<=999 lower={lower} upper={upper}; "
             f"ell in [3,9] failures={lemma9}", seconds)
    assert ok


def test_criterion_6_theorem_scaffolding(announce):
    t0 = time.perf_counter()
    v = theory.check_theorem_bounds(range(3, 136), range(2, 8), range(3, 9))
    seconds = time.perf_counter() - t0
    ok = v.holds and seconds < 600
    announce("6 theorem scaffolding", ok, f"{sum(v.checked.values())}/{len(v.checked)} checks, "
             f"failures={v.witness}", seconds)
    assert ok


def test_criterion_7a_gamma_ratio_band(tmp_path, announce):
    t0 = time.perf_counter()
    code, header, rows, _ = _scan_csv(tmp_path, "gamma", 3, 2100)
    seconds = time.perf_counter() - t0
    lo, hi = GAMMA_BAND
    outside = [(int(k), int(v)) for k, v, _ in rows if not lo < Fraction(int(v), int(k)) < hi]
    ok = code == 0 and len(rows) == 2098 and not outside and seconds < 1800
    announce("7a gamma(k)/k in (0.4, 1.6) for k in [3,2100]", ok,
             f"rows={len(rows)} outside={outside[:5]}", seconds)
    assert ok


def test_criterion_7b_big_gamma_ratio_band(tmp_path, announce):
    t0 = time.perf_counter()
    code, header, rows, _ = _scan_csv(tmp_path, "big-gamma", 3, 135)
    seconds = time.perf_counter() - t0
    lo, hi = BIG_GAMMA_BAND
    outside = [(int(k), int(v)) for k, v, _ in rows if not lo < Fraction(int(v), int(k)) <= hi]
    ok = code == 0 and len(rows) == 133 and not outside and seconds < 1800
    announce("7b Gamma(k)/k in (1, 3] for k in [3,135]", ok,
             f"rows={len(rows)} outside={outside[:5]}", seconds)
    assert ok


def test_criterion_7c_kappa_scan_within_bounds(tmp_path, announce):
    t0 = time.perf_counter()
    code, header, rows, _ = _scan_csv(tmp_path, "kappa", 1, 299)
    seconds = time.perf_counter() - t0
    outside = [(int(m), int(v)) for m, v, _ in rows
               if not kappa_lower_bound(int(m)) <= int(v) < g_envelope(ell_of(int(m)))]
    ok = code == 0 and header == ["key", "value", "ratio"] and len(rows) == 150 and not outside
    announce("7c kappa scan over odd m<=299 within bounds", ok,
             f"rows={len(rows)} outside={outside[:5]}", seconds)
    assert ok


def test_criterion_8_determinism(tmp_path, announce):
    t0 = time.perf_counter()
    mismatched = []
    for stat, lo, hi in [("gamma", 3, 2100), ("big-gamma", 3, 135), ("kappa", 1, 299)]:
        blobs = []
        for run, threads in enumerate((1, 8, 1)):
            ap.kappa.cache_clear()
            *_, path = _scan_csv(tmp_path, stat, lo, hi, threads, name=f"{stat}_{run}.csv")
            blobs.append(path.read_bytes())
        if len(set(blobs)) != 1:
            mismatched.append(stat)
    seconds = time.perf_counter() - t0
    ok = not mismatched and seconds < 60
    announce("8 determinism across threads and runs", ok, f"mismatched={mismatched}", seconds)
    assert ok
