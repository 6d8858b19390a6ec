"""Independent test oracles.  Never imported by the package itself.

Two ways to confirm that a claimed fundamental solution really is minimal:

  * brute_first_solution: walk beta = 1, 2, ... and return the first beta
    with 1 + D beta^2 a perfect square.  The first hit is minimal by
    construction, so agreement proves fundamentality outright.  Only viable
    when beta0 is small (it reaches 10^75 for D = 1621).
  * has_plus_power_root: a non-fundamental positive solution is a perfect
    p-th power of a smaller positive solution of the same equation for some
    prime p.  Extract the candidate p-th root numerically at generous
    precision, round, and confirm by exact integer exponentiation; the
    numeric step can only miss, never falsely confirm.  "No root for any
    prime p" therefore certifies minimality for arbitrarily large solutions.
"""

from __future__ import annotations

import math

import mpmath


def small_primes(n: int) -> list[int]:
    sieve = [True] * (n + 1)
    out = []
    for p in range(2, n + 1):
        if sieve[p]:
            out.append(p)
            for q in range(p * p, n + 1, p):
                sieve[q] = False
    return out


def brute_first_solution(D: int, beta_cap: int):
    """First (alpha, beta) with beta <= beta_cap solving the plus equation."""
    for beta in range(1, beta_cap + 1):
        val = 1 + D * beta * beta
        r = math.isqrt(val)
        if r * r == val:
            return (r, beta)
    return None


def brute_first_negative(D: int, beta_cap: int):
    """First (alpha, beta) with beta <= beta_cap solving the minus equation."""
    for beta in range(1, beta_cap + 1):
        val = D * beta * beta - 1
        if val < 0:
            continue
        r = math.isqrt(val)
        if r * r == val:
            return (r, beta)
    return None


def pow_pair(a: int, b: int, D: int, p: int) -> tuple[int, int]:
    """(a + b sqrt(D))^p as an exact coefficient pair."""
    x, y = 1, 0
    for _ in range(p):
        x, y = a * x + D * b * y, a * y + b * x
    return x, y


def has_plus_power_root(D: int, alpha: int, beta: int) -> bool:
    """True iff (alpha, beta) is a p-th power (p prime) of a smaller positive
    solution of x^2 - D y^2 = 1.  False certifies fundamentality."""
    bits = alpha.bit_length() + 1
    with mpmath.workprec(bits + 120):
        sq = mpmath.sqrt(D)
        u = mpmath.mpf(alpha) + mpmath.mpf(beta) * sq
        for p in small_primes(bits + 1):
            root = u ** (mpmath.mpf(1) / p)
            for norm in (1, -1):
                a = int(mpmath.nint((root + norm / root) / 2))
                b = int(mpmath.nint((root - norm / root) / (2 * sq)))
                if (
                    a > 0 and b > 0
                    and a * a - D * b * b == 1
                    and pow_pair(a, b, D, p) == (alpha, beta)
                ):
                    return True
    return False
