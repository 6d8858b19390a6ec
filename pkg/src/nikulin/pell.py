"""Exact solvers and classifiers for the Pell-Fermat equation.

Everything here works on Python integers, which are arbitrary precision:
fundamental solutions grow roughly like exp(sqrt(D)) and leave 64 bits
almost immediately (D = 46 already needs (24335, 3588)).

For a positive integer t and radicand D = 2t we consider

    alpha^2 - D * beta^2 = 1        (the "plus" equation)
    alpha^2 - D * beta^2 = -1       (the "negative" equation)

The plus equation has a nontrivial solution iff D is not a perfect square;
the minimal one with alpha, beta > 0 is the fundamental solution
(alpha0, beta0), and every solution is +-(alpha0 + beta0*sqrt(D))^k.
The negative equation is solvable iff the continued-fraction expansion of
sqrt(D) has a period of odd length.

Facts used downstream, all of them exact statements about solutions:
  * alpha of any plus solution with beta != 0 is odd;
  * t != 0 (mod 4) forces beta0 even;
  * the negative equation solvable forces t = 1 or 5 (mod 12);
  * if (d0, e0) solves the negative equation minimally then
    (1 + 2*d0^2, 2*e0*d0) is the fundamental plus solution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class PellSolution:
    """A pair (alpha, beta) with alpha^2 - D*beta^2 = +-1 for some D.

    The sign and the radicand are carried by the producing operation, not by
    the value. alpha of a plus solution with beta != 0 is always odd.
    """

    alpha: int
    beta: int

    def as_tuple(self) -> tuple[int, int]:
        return (self.alpha, self.beta)


@dataclass(frozen=True)
class CFExpansion:
    """Continued fraction of sqrt(D) for non-square D: [a0; period repeated].

    The last period element always equals 2*a0, and the period length decides
    negative-equation solvability (odd length <=> solvable).
    """

    D: int
    a0: int
    period: tuple[int, ...]


@dataclass(frozen=True)
class TClassification:
    """Arithmetic dossier of a polarization parameter t (radicand D = 2t).

    fundamental / beta0_even / neg_pell are None exactly when undefined
    (fundamental and beta0_even iff 2t is a square; neg_pell also when the
    negative equation is unsolvable).  nu counts distinct prime divisors of
    t and 2**nu is the predicted number of Kummer structures on the degree
    4t generic Kummer surface.
    """

    t: int
    two_t_is_square: bool
    fundamental: Optional[PellSolution]
    beta0_even: Optional[bool]
    neg_pell: Optional[PellSolution]
    t_mod_12: int
    nu: int
    predicted_structures: int


@dataclass(frozen=True)
class EightSFamily:
    """The n-th member of the solvable families of alpha^2 - 8 s^2 beta^2 = 1.

    (x, y) is the n-th power solution of x^2 - 8 y^2 = 1.  The odd family has
    s = y with fundamental (x, 1); for even n the even family additionally
    has s = y/2 with fundamental (x, 2).
    """

    n: int
    x: int
    y: int
    odd_s: int
    odd_fundamental: PellSolution
    even_s: Optional[int]
    even_fundamental: Optional[PellSolution]


@dataclass(frozen=True)
class ParityScanReport:
    """Result of scanning t = 1..t_max for the two parity theorems.

    Both violation lists are expected to stay empty (the statements are
    theorems); the counts give the empirical densities, which are reported
    but never asserted against the asymptotic lower bounds.
    """

    t_max: int
    tested: int
    mod4_violations: tuple[int, ...]      # t != 0 mod 4 but beta0 odd
    mod12_violations: tuple[int, ...]     # negative solvable but t mod 12 not in {1, 5}
    beta0_even_count: int
    neg_pell_unsolvable_count: int
    both_count: int

    @property
    def beta0_even_fraction(self) -> float:
        return self.beta0_even_count / self.tested if self.tested else 0.0

    @property
    def neg_pell_unsolvable_fraction(self) -> float:
        return self.neg_pell_unsolvable_count / self.tested if self.tested else 0.0

    @property
    def both_fraction(self) -> float:
        return self.both_count / self.tested if self.tested else 0.0


def is_square(n: int) -> bool:
    """True iff n is a perfect square. n must be >= 0."""
    if n < 0:
        raise ValueError("is_square expects a non-negative integer")
    r = math.isqrt(n)
    return r * r == n


def cf_sqrt(D: int) -> CFExpansion:
    """Continued-fraction expansion of sqrt(D) for non-square D >= 2.

    Standard recurrence: m0 = 0, d0 = 1, a0 = floor(sqrt(D));
    m' = d*a - m, d' = (D - m'^2)/d, a' = floor((a0 + m')/d'),
    stopping at the first a' = 2*a0.  All divisions are exact.
    """
    if D < 2 or is_square(D):
        raise ValueError(f"cf_sqrt needs a non-square D >= 2, got {D}")
    a0 = math.isqrt(D)
    period = []
    m, d, a = 0, 1, a0
    while True:
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        period.append(a)
        if a == 2 * a0:
            break
    return CFExpansion(D=D, a0=a0, period=tuple(period))


def convergent(expansion: CFExpansion, k: int) -> tuple[int, int]:
    """k-th convergent (h_k, q_k) of [a0; p0, p1, ...] continued periodically.

    convergent(e, 0) == (a0, 1); the recurrence h_k = a_k h_{k-1} + h_{k-2}
    runs over the periodic digits.
    """
    h_prev, q_prev = 1, 0
    h, q = expansion.a0, 1
    r = len(expansion.period)
    for i in range(k):
        a = expansion.period[i % r]
        h, h_prev = a * h + h_prev, h
        q, q_prev = a * q + q_prev, q
    return h, q


def fundamental_solution(D: int) -> Optional[PellSolution]:
    """Minimal solution with alpha, beta > 0 of alpha^2 - D*beta^2 = 1.

    None iff D is a perfect square (absence is a value: callers branch on
    the square case, they do not catch exceptions).  For period length r the
    fundamental solution is the convergent at index r-1 (r even) or 2r-1
    (r odd).
    """
    if D < 1:
        raise ValueError("D must be a positive integer")
    if is_square(D):
        return None
    expansion = cf_sqrt(D)
    r = len(expansion.period)
    k = r - 1 if r % 2 == 0 else 2 * r - 1
    alpha, beta = convergent(expansion, k)
    if alpha * alpha - D * beta * beta != 1:
        raise RuntimeError(f"continued-fraction solver broke on D={D}")
    return PellSolution(alpha, beta)


def negative_fundamental_solution(D: int) -> Optional[PellSolution]:
    """Minimal positive solution of alpha^2 - D*beta^2 = -1, None if unsolvable.

    Solvable iff the period of sqrt(D) has odd length, in which case the
    solution is the convergent at index r-1.
    """
    if D < 1:
        raise ValueError("D must be a positive integer")
    if is_square(D):
        return None
    expansion = cf_sqrt(D)
    r = len(expansion.period)
    if r % 2 == 0:
        return None
    alpha, beta = convergent(expansion, r - 1)
    if alpha * alpha - D * beta * beta != -1:
        raise RuntimeError(f"continued-fraction solver broke on D={D}")
    return PellSolution(alpha, beta)


def nth_solution(D: int, fund: PellSolution, n: int) -> PellSolution:
    """The n-th power solution (x_n, y_n), x_n + y_n sqrt(D) = (a0 + b0 sqrt(D))^n.

    Integer recurrence x' = a0 x + D b0 y, y' = a0 y + b0 x.  n = 0 is the
    unit (1, 0).  Both coordinates are strictly increasing in n.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    a0, b0 = fund.alpha, fund.beta
    if a0 * a0 - D * b0 * b0 != 1:
        raise ValueError(f"({a0}, {b0}) does not solve the plus equation for D={D}")
    x, y = 1, 0
    for _ in range(n):
        x, y = a0 * x + D * b0 * y, a0 * y + b0 * x
    return PellSolution(x, y)


def distinct_prime_count(n: int) -> int:
    """Number of distinct prime divisors of n >= 1 (trial division)."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    count = 0
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            count += 1
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        count += 1
    return count


def classify_t(t: int) -> TClassification:
    """Full arithmetic classification of t: solvability, parities, structure count."""
    if t < 1:
        raise ValueError("t must be a positive integer")
    D = 2 * t
    square = is_square(D)
    fund = None if square else fundamental_solution(D)
    beta0_even = None if fund is None else fund.beta % 2 == 0
    neg = negative_fundamental_solution(D)
    if neg is not None:
        # the square of the minimal negative solution is the fundamental
        # plus solution; a failure here is a solver bug, not a data case
        d0, e0 = neg.alpha, neg.beta
        expected = PellSolution(1 + 2 * d0 * d0, 2 * e0 * d0)
        if fund != expected:
            raise RuntimeError(
                f"negative/plus fundamental mismatch at t={t}: {neg} vs {fund}"
            )
    nu = distinct_prime_count(t)
    return TClassification(
        t=t,
        two_t_is_square=square,
        fundamental=fund,
        beta0_even=beta0_even,
        neg_pell=neg,
        t_mod_12=t % 12,
        nu=nu,
        predicted_structures=2 ** nu,
    )


def appendix_family(k: int) -> tuple[int, PellSolution]:
    """The triangular family t = k(k+1)/2 with fundamental solution (2k+1, 2).

    Sanity-checked against the continued-fraction solver; also checks
    gcd(2, 2k) = 2, so the gcd parameter d0 = gcd(beta0, alpha0 - 1)/2 is 1
    throughout this family.  Raises RuntimeError if either check fails
    (which would indicate a solver bug).
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    t = k * (k + 1) // 2
    sol = PellSolution(2 * k + 1, 2)
    fund = fundamental_solution(2 * t)
    if fund != sol:
        raise RuntimeError(f"(2k+1, 2) is not fundamental for 2t={2*t}: got {fund}")
    if math.gcd(sol.beta, sol.alpha - 1) != 2:
        raise RuntimeError(f"gcd(2, 2k) != 2 at k={k}")
    return t, sol


def family_8s2(n: int) -> EightSFamily:
    """n-th member of the families with radicand 8 s^2.

    With (x, y) the n-th solution of x^2 - 8 y^2 = 1 (base fundamental
    (3, 1)), the equation alpha^2 - 8 y^2 beta^2 = 1 has fundamental (x, 1),
    an odd-beta0 case; for even n, writing y = 2z, the equation
    alpha^2 - 8 z^2 beta^2 = 1 has fundamental (x, 2), an even-beta0 case.
    Both fundamentality claims are re-verified against the solver.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    base = PellSolution(3, 1)
    sol = nth_solution(8, base, n)
    x, y = sol.alpha, sol.beta
    odd_fund = PellSolution(x, 1)
    if fundamental_solution(8 * y * y) != odd_fund:
        raise RuntimeError(f"(x_n, 1) not fundamental for 8*{y}^2 at n={n}")
    even_s = even_fund = None
    if y % 2 == 0:
        z = y // 2
        even_s = z
        even_fund = PellSolution(x, 2)
        if fundamental_solution(8 * z * z) != even_fund:
            raise RuntimeError(f"(x_n, 2) not fundamental for 8*{z}^2 at n={n}")
    return EightSFamily(
        n=n, x=x, y=y,
        odd_s=y, odd_fundamental=odd_fund,
        even_s=even_s, even_fundamental=even_fund,
    )


def scan_parity_lemmas(t_max: int) -> ParityScanReport:
    """Scan t = 1..t_max (skipping square 2t) for parity-theorem violations.

    Collects t where "t != 0 mod 4 yet beta0 odd" or "negative equation
    solvable yet t mod 12 not in {1, 5}".  Both lists are theorems' worth of
    empty; they are returned rather than asserted so the caller can report.
    """
    if t_max < 1:
        raise ValueError("t_max must be a positive integer")
    mod4_bad = []
    mod12_bad = []
    tested = 0
    even_count = 0
    unsolvable_count = 0
    both_count = 0
    for t in range(1, t_max + 1):
        D = 2 * t
        if is_square(D):
            continue
        tested += 1
        fund = fundamental_solution(D)
        beta_even = fund.beta % 2 == 0
        neg = negative_fundamental_solution(D)
        if beta_even:
            even_count += 1
        if neg is None:
            unsolvable_count += 1
            if beta_even:
                both_count += 1
        if t % 4 != 0 and not beta_even:
            mod4_bad.append(t)
        if neg is not None and t % 12 not in (1, 5):
            mod12_bad.append(t)
    return ParityScanReport(
        t_max=t_max,
        tested=tested,
        mod4_violations=tuple(mod4_bad),
        mod12_violations=tuple(mod12_bad),
        beta0_even_count=even_count,
        neg_pell_unsolvable_count=unsolvable_count,
        both_count=both_count,
    )


def scan_8s_beta_even(s_max: int) -> tuple[int, ...]:
    """s in 1..s_max (8s non-square) where alpha^2 - 8s beta^2 = 1 has beta0 even."""
    if s_max < 1:
        raise ValueError("s_max must be a positive integer")
    hits = []
    for s in range(1, s_max + 1):
        if is_square(8 * s):
            continue
        fund = fundamental_solution(8 * s)
        if fund.beta % 2 == 0:
            hits.append(s)
    return tuple(hits)
