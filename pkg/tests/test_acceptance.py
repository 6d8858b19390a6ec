"""Acceptance suite: one test per headline criterion, each printing a
PASS/criterion line with its runtime (run with -s to see them).

Expected values are frozen here independently of the code under test:
the classical fundamental-solution table for 2t <= 60, the list of t with
solvable negative equation, and the beta0-parity list for the 8s family.
"""

import time
from contextlib import contextmanager

from nikulin.cli import build_table_rows, cmd_table
from nikulin.constructions import (
    build_double_plane_divisor,
    build_even_beta,
    build_quartic_divisor,
    build_t2_configuration,
    build_t4_configuration,
    subcase_classify,
)
from nikulin.lattice import GramForm, exceptional
from nikulin.pell import (
    fundamental_solution,
    is_square,
    negative_fundamental_solution,
    scan_8s_beta_even,
    scan_parity_lemmas,
)
from nikulin.verifiers import (
    expected_dprime_zero_set,
    expected_lprime_zero_set,
    verify_contracted_set,
    verify_lemma_treize,
    verify_quartic_degree_one,
    verify_t2_f1_nef,
    verify_t4_nefness,
)
from oracles import brute_first_solution, has_plus_power_root

# Fundamental solutions of alpha^2 - 2t beta^2 = 1 for even 2t <= 60
# (None at the three squares 4, 16, 36).
TABLE_2T_60 = {
    2: (3, 2), 4: None, 6: (5, 2), 8: (3, 1), 10: (19, 6),
    12: (7, 2), 14: (15, 4), 16: None, 18: (17, 4), 20: (9, 2),
    22: (197, 42), 24: (5, 1), 26: (51, 10), 28: (127, 24), 30: (11, 2),
    32: (17, 3), 34: (35, 6), 36: None, 38: (37, 6), 40: (19, 3),
    42: (13, 2), 44: (199, 30), 46: (24335, 3588), 48: (7, 1), 50: (99, 14),
    52: (649, 90), 54: (485, 66), 56: (15, 2), 58: (19603, 2574), 60: (31, 4),
}
STARS = {2, 6, 12, 20, 30, 42, 56}
BOXES = {8, 24, 32, 40, 48}
PRIMES = {10, 26, 50, 58}

NEG_SOLVABLE_T = {1, 5, 13, 25, 29, 37, 41, 53, 61, 65, 85, 101, 109}

EIGHT_S_EVEN = {7, 9, 14, 23, 30, 31, 33, 34, 46, 47, 56, 57, 62, 63, 69,
                71, 73, 75, 77, 79, 81, 82, 89, 90, 94}


@contextmanager
def timed(label: str, limit_s: float):
    t0 = time.perf_counter()
    yield
    elapsed = time.perf_counter() - t0
    print(f"PASS {label}: {elapsed:.2f}s (limit {limit_s:.0f}s)")
    assert elapsed < limit_s, f"{label} exceeded {limit_s}s ({elapsed:.2f}s)"


def test_criterion_1_table_reproduction():
    with timed("criterion 1 (table 2t<=60 exact)", 1.0):
        rows = build_table_rows(60)
        got = {r.two_t: None if r.alpha0 is None else (r.alpha0, r.beta0)
               for r in rows}
        assert got == TABLE_2T_60
        assert sum(1 for v in got.values() if v is not None) == 27
        assert {r.two_t for r in rows if r.star} == STARS
        assert {r.two_t for r in rows if r.boxed} == BOXES
        # rendered annotation: primes exactly at the four marked columns
        # (the raw flag also holds at 2t = 2, where the star takes precedence)
        rendered = cmd_table(60, "text").splitlines()[1:]
        marks = {line.split()[0] for line in rendered}
        assert {f"{n}'" for n in PRIMES} <= marks
        assert "2*" in marks and "2'" not in marks
        boxed_marks = {m for m in marks if m.startswith("[")}
        assert boxed_marks == {f"[{n}]" for n in BOXES}
        primed_marks = {m for m in marks if m.endswith("'")}
        assert primed_marks == {f"{n}'" for n in PRIMES}
        starred_marks = {m for m in marks if m.endswith("*")}
        assert starred_marks == {f"{n}*" for n in STARS}


def test_criterion_2_negative_pell_list():
    with timed("criterion 2 (negative solvable t<=109)", 1.0):
        got = {t for t in range(1, 110)
               if negative_fundamental_solution(2 * t) is not None}
        assert got == NEG_SOLVABLE_T


def test_criterion_3_eight_s_example():
    with timed("criterion 3 (8s beta0 parity, s<=100)", 1.0):
        assert set(scan_8s_beta_even(100)) == EIGHT_S_EVEN
        assert len(scan_8s_beta_even(100)) == 25


def test_criterion_4_lemma_scans():
    with timed("criterion 4 (parity lemmas t<=5000)", 30.0):
        report = scan_parity_lemmas(5000)
        assert report.mod4_violations == ()
        assert report.mod12_violations == ()


def test_criterion_5_construction_identities():
    with timed("criterion 5 (construction identities t<=500)", 10.0):
        for t in range(1, 501):
            if is_square(2 * t):
                continue
            fund = fundamental_solution(2 * t)
            if fund.beta % 2 != 0:
                continue
            form = GramForm(t)
            ctor = build_even_beta(t)  # asserts its own identities exactly
            assert form.square(ctor.A1_prime) == -2
            assert form.pair(ctor.L_prime, ctor.A1_prime) == 0
            assert form.square(ctor.L_prime) == 4 * t
            assert form.pair(exceptional(1), ctor.A1_prime) == 2 * fund.alpha
            report = subcase_classify(t)
            assert (report.quotient == 1) == (
                negative_fundamental_solution(2 * t) is not None
            )
            if report.quotient == 2:
                dp = build_quartic_divisor(t)
                assert form.square(dp) == 4
            elif report.quotient == 1:
                dp = build_double_plane_divisor(t)
                assert form.square(dp) == 2
                assert exceptional(1) + ctor.A1_prime == 2 * report.d0 * dp


def test_criterion_6_enumeration_verdicts():
    with timed("criterion 6 (enumeration verdicts)", 60.0):
        for t in (1, 3, 5, 9, 11):
            form = GramForm(t)
            expected, lp = expected_lprime_zero_set(t)
            v = verify_contracted_set(lp, expected, form)
            assert v.passed and len(v.zero_set) == 16, f"L' at t={t}"
            expected, dp = expected_dprime_zero_set(t)
            v = verify_contracted_set(dp, expected, form)
            assert v.passed and len(v.zero_set) == 15, f"D' at t={t}"
        v = verify_t4_nefness()
        assert v.passed and len(v.zero_set) == 16
        v = verify_t2_f1_nef()
        assert v.passed and len(v.zero_set) == 12
        for t in (3, 5):
            assert verify_lemma_treize(t, 10).passed
        for t in (3, 9, 11, 19, 27):
            assert verify_quartic_degree_one(t).passed


def test_criterion_7_special_packages():
    with timed("criterion 7 (t=4 and t=2 packages)", 1.0):
        pkg4 = build_t4_configuration()  # every identity asserted inside
        form4 = GramForm(4)
        assert form4.square(pkg4.L1) == 16
        assert pkg4.A1_prime == (
            2 * pkg4.a_double_primes[0]
            + exceptional(2) + exceptional(3) + exceptional(4)
        )
        assert len(pkg4.configuration.classes) == 16

        pkg2 = build_t2_configuration()
        form2 = GramForm(2)
        assert form2.pair(pkg2.F[0], pkg2.F[1]) == 2
        assert form2.square(pkg2.L_prime) == 8
        assert len(pkg2.configuration.classes) == 16
        count = 0
        for i, x in enumerate(pkg2.configuration.classes):
            for y in pkg2.configuration.classes[i + 1:]:
                assert form2.pair(x, y) == 0
                count += 1
        assert count == 120


def test_criterion_8_oracle_equivalence():
    # direct minimal-search agreement for every non-square D <= 2000:
    # full beta scan when beta0 <= 10^4; otherwise the scan confirms no
    # solution below the cap and the prime-power root certificate excludes
    # any smaller solution at all
    with timed("criterion 8 (oracle equivalence D<=2000)", 60.0):
        cap = 10 ** 4
        for D in range(2, 2001):
            if is_square(D):
                continue
            sol = fundamental_solution(D)
            assert sol.alpha ** 2 - D * sol.beta ** 2 == 1
            if sol.beta <= cap:
                assert brute_first_solution(D, sol.beta) == sol.as_tuple(), D
            else:
                assert brute_first_solution(D, cap) is None, D
                assert not has_plus_power_root(D, sol.alpha, sol.beta), D
