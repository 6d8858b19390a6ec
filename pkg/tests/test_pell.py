import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nikulin.pell import (
    PellSolution,
    appendix_family,
    cf_sqrt,
    classify_t,
    convergent,
    distinct_prime_count,
    family_8s2,
    fundamental_solution,
    is_square,
    negative_fundamental_solution,
    nth_solution,
    scan_8s_beta_even,
    scan_parity_lemmas,
)
from oracles import brute_first_negative, brute_first_solution, has_plus_power_root

non_square_D = st.integers(2, 500).filter(lambda n: not is_square(n))


def test_is_square_basics():
    assert is_square(0)
    assert not is_square(8)
    assert is_square(16)
    assert [n for n in range(30) if is_square(n)] == [0, 1, 4, 9, 16, 25]
    with pytest.raises(ValueError):
        is_square(-1)


def test_cf_sqrt_hand_runs():
    assert cf_sqrt(2).a0 == 1 and cf_sqrt(2).period == (2,)
    assert cf_sqrt(6).a0 == 2 and cf_sqrt(6).period == (2, 4)
    assert cf_sqrt(10).a0 == 3 and cf_sqrt(10).period == (6,)


def test_cf_sqrt_rejects_squares_and_small():
    for bad in (0, 1, 4, 9, 100):
        with pytest.raises(ValueError):
            cf_sqrt(bad)


@given(non_square_D)
def test_cf_period_ends_at_twice_a0(D):
    e = cf_sqrt(D)
    assert e.period[-1] == 2 * e.a0


def test_fundamental_known_values():
    assert fundamental_solution(2) == PellSolution(3, 2)
    assert fundamental_solution(46) == PellSolution(24335, 3588)
    assert fundamental_solution(16) is None
    assert fundamental_solution(8) == PellSolution(3, 1)
    assert fundamental_solution(1) is None


def test_negative_known_values():
    assert negative_fundamental_solution(10) == PellSolution(3, 1)
    assert negative_fundamental_solution(6) is None
    assert negative_fundamental_solution(2) == PellSolution(1, 1)
    assert negative_fundamental_solution(9) is None


@given(non_square_D)
def test_fundamental_solves_and_alpha_odd(D):
    sol = fundamental_solution(D)
    assert sol.alpha ** 2 - D * sol.beta ** 2 == 1
    assert sol.beta >= 1
    if D % 2 == 0:  # alpha^2 = 1 + D beta^2 is odd exactly for even radicands
        assert sol.alpha % 2 == 1


@given(non_square_D)
def test_negative_iff_odd_period(D):
    neg = negative_fundamental_solution(D)
    odd = len(cf_sqrt(D).period) % 2 == 1
    assert (neg is not None) == odd
    if neg is not None:
        assert neg.alpha ** 2 - D * neg.beta ** 2 == -1


@given(non_square_D)
def test_negative_square_gives_plus_fundamental(D):
    neg = negative_fundamental_solution(D)
    if neg is None:
        return
    d0, e0 = neg.as_tuple()
    assert (1 + 2 * d0 * d0) ** 2 - D * (2 * e0 * d0) ** 2 == 1
    assert fundamental_solution(D) == PellSolution(1 + 2 * d0 * d0, 2 * e0 * d0)


def test_nth_solution_examples():
    assert nth_solution(2, PellSolution(3, 2), 2) == PellSolution(17, 12)
    assert 17 ** 2 - 2 * 12 ** 2 == 1
    assert nth_solution(8, PellSolution(3, 1), 1) == PellSolution(3, 1)
    assert nth_solution(8, PellSolution(3, 1), 0) == PellSolution(1, 0)
    with pytest.raises(ValueError):
        nth_solution(8, PellSolution(3, 2), 1)


@given(non_square_D, st.integers(0, 12))
def test_nth_solution_exact_and_increasing(D, n):
    fund = fundamental_solution(D)
    sol = nth_solution(D, fund, n)
    assert sol.alpha ** 2 - D * sol.beta ** 2 == 1
    if n >= 1:
        prev = nth_solution(D, fund, n - 1)
        assert sol.alpha > prev.alpha
        assert sol.beta > prev.beta or n == 1


@given(non_square_D)
def test_beta_parity_propagates(D):
    fund = fundamental_solution(D)
    if fund.beta % 2 != 0:
        return
    x, y = 1, 0
    for _ in range(50):
        x, y = fund.alpha * x + D * fund.beta * y, fund.alpha * y + fund.beta * x
        assert y % 2 == 0


def test_classify_t_examples():
    c3 = classify_t(3)
    assert not c3.two_t_is_square
    assert c3.fundamental == PellSolution(5, 2)
    assert c3.beta0_even is True
    assert c3.neg_pell is None
    assert c3.t_mod_12 == 3 and c3.nu == 1 and c3.predicted_structures == 2

    c5 = classify_t(5)
    assert c5.fundamental == PellSolution(19, 6)
    assert c5.beta0_even is True
    assert c5.neg_pell == PellSolution(3, 1)
    assert c5.t_mod_12 == 5 and c5.nu == 1 and c5.predicted_structures == 2

    c8 = classify_t(8)
    assert c8.two_t_is_square
    assert c8.fundamental is None and c8.beta0_even is None and c8.neg_pell is None


def test_distinct_prime_count():
    assert distinct_prime_count(1) == 0
    assert distinct_prime_count(12) == 2
    assert distinct_prime_count(30) == 3
    assert distinct_prime_count(97) == 1
    assert classify_t(1).predicted_structures == 1
    assert classify_t(30).predicted_structures == 8


def test_appendix_family():
    assert appendix_family(1) == (1, PellSolution(3, 2))
    assert appendix_family(3) == (6, PellSolution(7, 2))
    assert appendix_family(5) == (15, PellSolution(11, 2))
    for k in range(1, 40):
        t, sol = appendix_family(k)
        assert 2 * t == k * (k + 1)
        assert math.gcd(sol.beta, sol.alpha - 1) == 2


def test_family_8s2():
    f1 = family_8s2(1)
    assert (f1.x, f1.y) == (3, 1)
    assert f1.odd_s == 1 and f1.odd_fundamental == PellSolution(3, 1)
    assert f1.even_s is None

    f2 = family_8s2(2)
    assert (f2.x, f2.y) == (17, 6)
    assert f2.odd_s == 6 and f2.odd_fundamental == PellSolution(17, 1)
    assert f2.even_s == 3 and f2.even_fundamental == PellSolution(17, 2)

    f3 = family_8s2(3)
    assert (f3.x, f3.y) == (99, 35)
    assert 99 ** 2 - 8 * 35 ** 2 == 1
    assert f3.odd_fundamental == PellSolution(99, 1)


def test_scan_parity_lemmas_small():
    rep = scan_parity_lemmas(60)
    assert rep.mod4_violations == ()
    assert rep.mod12_violations == ()
    assert rep.tested == 55  # five square 2t below 120: 4, 16, 36, 64, 100
    rep1 = scan_parity_lemmas(1)
    assert rep1.tested == 1 and rep1.beta0_even_count == 1
    assert 0 <= rep.beta0_even_fraction <= 1


def test_scan_8s_beta_even_matches_known_list():
    expected = (7, 9, 14, 23, 30, 31, 33, 34, 46, 47, 56, 57, 62, 63, 69,
                71, 73, 75, 77, 79, 81, 82, 89, 90, 94)
    assert scan_8s_beta_even(100) == expected


def test_negative_solvable_t_list():
    solvable = tuple(
        t for t in range(1, 110)
        if negative_fundamental_solution(2 * t) is not None
    )
    assert solvable == (1, 5, 13, 25, 29, 37, 41, 53, 61, 65, 85, 101, 109)


def test_convergent_reconstruction():
    # the convergent at the canonical index reproduces the fundamental solution
    for D in (2, 6, 8, 10, 46, 61):
        e = cf_sqrt(D)
        r = len(e.period)
        k = r - 1 if r % 2 == 0 else 2 * r - 1
        assert convergent(e, k) == fundamental_solution(D).as_tuple()


@settings(max_examples=40)
@given(st.integers(2, 250).filter(lambda n: not is_square(n)))
def test_oracle_agreement_small(D):
    sol = fundamental_solution(D)
    if sol.beta <= 20000:
        assert brute_first_solution(D, sol.beta) == sol.as_tuple()
    neg = negative_fundamental_solution(D)
    if neg is not None and neg.beta <= 20000:
        assert brute_first_negative(D, neg.beta) == neg.as_tuple()
    if neg is None:
        assert brute_first_negative(D, 2000) is None


def test_power_root_oracle_detects_non_fundamental():
    for D in (2, 13, 61):
        fund = fundamental_solution(D)
        assert not has_plus_power_root(D, fund.alpha, fund.beta)
        for n in (2, 3, 6):
            s = nth_solution(D, fund, n)
            assert has_plus_power_root(D, s.alpha, s.beta)
