"""Explicit divisor constructions on a degree-4t generic Kummer surface.

Starting configuration: the sixteen exceptional curves A1..A16 together with
the big-and-nef class L, L^2 = 4t, orthogonal to all A_i.  The trichotomy on
t (through the fundamental solution (alpha0, beta0) of alpha^2 - 2t beta^2
= 1) drives everything:

  * beta0 even: A1' = beta0 L - alpha0 A1 is a (-2)-class orthogonal to
    L' = alpha0 L - 2t beta0 A1, and {A1', A2..A16} is a second
    configuration of sixteen pairwise-disjoint (-2)-classes.
  * beta0 odd: the same A1' cannot be an irreducible curve; the witness is
    (A1 + A1')/2, which two-divisibility of disjoint-sixteen configurations
    would force into the lattice, where it fails admissibility.  For t = 4
    a genuinely different configuration exists via half-integer classes.
  * 2t square: no nontrivial solution at all; for t = 2 half-integer
    classes give a replacement configuration.

Every intersection identity claimed by the constructions is asserted exactly
at build time; a failed assertion raises rather than returning bad data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .lattice import (
    BLOCKS,
    DivisorClass,
    EXCEPTIONALS,
    GramForm,
    L,
    exceptional,
    is_admissible,
    is_effective_candidate,
)
from .pell import (
    PellSolution,
    cf_sqrt,
    convergent,
    fundamental_solution,
    is_square,
    negative_fundamental_solution,
)


class SquareCase(Exception):
    """2t is a perfect square: no Pell solution, no single-curve replacement.

    For t = 2 use build_t2_configuration instead.
    """


class OddBetaCase(Exception):
    """beta0 is odd: the single-curve replacement is obstructed.

    See check_odd_beta_obstruction for the witness; for t = 4 use
    build_t4_configuration instead.
    """


class NoQuarticCase(Exception):
    """The degree-4 model divisor does not exist for this t."""


class NoNegPell(Exception):
    """The negative Pell-Fermat equation has no solution for this t."""


@dataclass(frozen=True)
class NikulinConfiguration:
    """Sixteen pairwise-orthogonal (-2)-classes, each admissible and effective."""

    t: int
    classes: tuple[DivisorClass, ...]


def make_nikulin_configuration(t: int, classes) -> NikulinConfiguration:
    """Validate and wrap sixteen classes as a configuration.

    Checks: count 16, each square -2, pairwise products 0, each class
    admissible and an effectivity candidate.
    """
    classes = tuple(classes)
    if len(classes) != 16:
        raise ValueError(f"a configuration needs 16 classes, got {len(classes)}")
    form = GramForm(t)
    for i, c in enumerate(classes):
        if form.square(c) != -2:
            raise ValueError(f"class #{i + 1} has square {form.square(c)} != -2")
        if not is_admissible(c):
            raise ValueError(f"class #{i + 1} is not admissible")
        if not is_effective_candidate(c, form):
            raise ValueError(f"class #{i + 1} is not an effectivity candidate")
        for j in range(i):
            p = form.pair(classes[j], c)
            if p != 0:
                raise ValueError(f"classes #{j + 1} and #{i + 1} meet: {p}")
    return NikulinConfiguration(t=t, classes=classes)


@dataclass(frozen=True)
class EvenBetaConstruction:
    """The single-curve replacement package for beta0 even."""

    t: int
    fundamental: PellSolution
    A1_prime: DivisorClass
    L_prime: DivisorClass
    configuration: NikulinConfiguration


@dataclass(frozen=True)
class ObstructionWitness:
    """Why the replacement fails for beta0 odd: (A1 + A1')/2 is not in NS."""

    t: int
    fundamental: PellSolution
    A1_prime: DivisorClass
    witness: DivisorClass     # (A1 + A1')/2, forced integral by 2-divisibility
    witness_admissible: bool  # always False: half L-coefficient, no half tail


@dataclass(frozen=True)
class SubcaseReport:
    """gcd data of the fundamental solution and the induced primitive divisor.

    d0 = gcd(beta0, alpha0 - 1)/2 and beta0 = 2 e0 d0.  The primitive class
    D' = (A1 + A1')/(2 d0) has square (alpha0 - 1)/d0^2, an even integer,
    and quotient = (alpha0 - 1)/(2 d0^2) sorts the involution analysis:

      quotient 1  <=>  d0^2 - 2t e0^2 = -1 (negative equation solvable;
                       degree-2 double-plane divisor, same Kummer structure)
      quotient 2  <=>  2 d0^2 - t e0^2 = -1 (degree-4 model with 15 nodes)

    Other quotient values carry neither model and are reported as-is.
    """

    t: int
    d0: int
    e0: int
    D_prime: DivisorClass
    D_prime_sq: int
    quotient: int
    same_structure: bool


@dataclass(frozen=True)
class T4Package:
    """The t = 4 replacement: four half-integer classes over the first block."""

    a_double_primes: tuple[DivisorClass, DivisorClass, DivisorClass, DivisorClass]
    L1: DivisorClass
    A1_prime: DivisorClass
    L_prime: DivisorClass
    configuration: NikulinConfiguration


@dataclass(frozen=True)
class T2Package:
    """The t = 2 (square 2t) replacement via the four block pencils."""

    F: tuple[DivisorClass, DivisorClass, DivisorClass, DivisorClass]
    B: tuple[DivisorClass, ...]            # B1..B8
    C: dict[int, DivisorClass]             # C_k = F1 - A_k for k = 5..16
    L_prime: DivisorClass
    configuration: NikulinConfiguration


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise RuntimeError(f"construction identity failed: {message}")


def solve_three_conditions(t: int, sol: PellSolution) -> tuple[int, int]:
    """Coefficients (a, b) of the companion polarization b L - a A1.

    For a Pell solution (alpha, beta) the unique positive solution of the
    simultaneous conditions

        alpha^2 - 2t beta^2 = 1,   2t b beta = a alpha,   a^2 = 2t (b^2 - 1)

    is (a, b) = (2t beta, alpha); all three are re-checked exactly.
    """
    alpha, beta = sol.alpha, sol.beta
    if beta <= 0 or alpha * alpha - 2 * t * beta * beta != 1:
        raise ValueError(f"({alpha}, {beta}) does not solve the plus equation for 2t={2 * t}")
    a, b = 2 * t * beta, alpha
    _require(2 * t * b * beta == a * alpha, "2t*b*beta == a*alpha")
    _require(a * a == 2 * t * (b * b - 1), "a^2 == 2t(b^2 - 1)")
    return a, b


def _fundamental_or_dispatch(t: int) -> PellSolution:
    if is_square(2 * t):
        raise SquareCase(
            f"2t = {2 * t} is a perfect square; no Pell solution exists "
            f"(for t = 2 see build_t2_configuration)"
        )
    return fundamental_solution(2 * t)


def build_even_beta(t: int) -> EvenBetaConstruction:
    """The replacement curve A1' and its polarization L' for beta0 even.

    A1' = beta0 L - alpha0 A1 and L' = alpha0 L - 2t beta0 A1 satisfy
    A1'^2 = -2, L' . A1' = 0, L'^2 = 4t, A1' . A_j = 0 for j >= 2; the
    returned configuration is {A1', A2, ..., A16}.
    """
    fund = _fundamental_or_dispatch(t)
    if fund.beta % 2 != 0:
        raise OddBetaCase(
            f"beta0 = {fund.beta} is odd at t = {t}; the replacement class is "
            f"obstructed (see check_odd_beta_obstruction; for t = 4 see "
            f"build_t4_configuration)"
        )
    form = GramForm(t)
    alpha0, beta0 = fund.alpha, fund.beta
    a, b = solve_three_conditions(t, fund)
    a1p = beta0 * L - alpha0 * exceptional(1)
    lp = b * L - a * exceptional(1)
    _require(form.square(a1p) == -2, "A1'^2 == -2")
    _require(form.pair(lp, a1p) == 0, "L'.A1' == 0")
    _require(form.square(lp) == 4 * t, "L'^2 == 4t")
    _require(form.pair(exceptional(1), a1p) == 2 * alpha0, "A1.A1' == 2*alpha0")
    for j in range(2, 17):
        _require(form.pair(a1p, exceptional(j)) == 0, f"A1'.A{j} == 0")
    config = make_nikulin_configuration(t, (a1p,) + EXCEPTIONALS[1:])
    return EvenBetaConstruction(
        t=t, fundamental=fund, A1_prime=a1p, L_prime=lp, configuration=config
    )


def check_odd_beta_obstruction(t: int) -> ObstructionWitness:
    """Certify that the single-curve replacement fails for beta0 odd.

    If A1' were an irreducible curve, the two configurations would both be
    2-divisible, making (A1 + A1')/2 = (beta0/2) L - ((alpha0-1)/2) A1 a
    lattice class; with beta0 odd its L-coefficient is a half-integer with
    no half-integer A-tail, which no lattice class can have.
    """
    fund = _fundamental_or_dispatch(t)
    if fund.beta % 2 == 0:
        raise ValueError(f"beta0 = {fund.beta} is even at t = {t}; no obstruction")
    a1p = fund.beta * L - fund.alpha * exceptional(1)
    witness = Fraction(1, 2) * (exceptional(1) + a1p)
    admissible = is_admissible(witness)
    _require(not admissible, "odd-beta witness must violate admissibility")
    return ObstructionWitness(
        t=t,
        fundamental=fund,
        A1_prime=a1p,
        witness=witness,
        witness_admissible=admissible,
    )


def subcase_classify(t: int) -> SubcaseReport:
    """gcd parameters (d0, e0), the primitive divisor D', and the quotient.

    Requires 2t non-square and beta0 even.  Integrality of
    quotient = (alpha0 - 1)/(2 d0^2) is automatic: writing alpha0 - 1 = 2u,
    beta0 = 2v one has u(u+1) = 2t v^2, and gcd(u, v) divides u twice over.
    The quotient-1 and quotient-2 identities are verified when they apply.
    """
    fund = _fundamental_or_dispatch(t)
    if fund.beta % 2 != 0:
        raise OddBetaCase(f"sub-case split needs beta0 even; beta0 = {fund.beta} at t = {t}")
    alpha0, beta0 = fund.alpha, fund.beta
    g = math.gcd(beta0, alpha0 - 1)
    _require(g % 2 == 0, "gcd(beta0, alpha0-1) is even")
    d0 = g // 2
    _require(beta0 % (2 * d0) == 0, "2*d0 divides beta0")
    e0 = beta0 // (2 * d0)
    _require((alpha0 - 1) % (2 * d0 * d0) == 0, "2*d0^2 divides alpha0 - 1")
    quotient = (alpha0 - 1) // (2 * d0 * d0)
    d_prime_sq = (alpha0 - 1) // (d0 * d0)
    half_sum = Fraction(1, 2) * (exceptional(1) + (beta0 * L - alpha0 * exceptional(1)))
    d_prime = Fraction(1, d0) * half_sum
    form = GramForm(t)
    _require(form.square(d_prime) == d_prime_sq, "D'^2 == (alpha0-1)/d0^2")
    _require(d_prime_sq % 2 == 0, "D'^2 is even")
    neg = negative_fundamental_solution(2 * t)
    same = neg is not None
    if quotient == 1:
        _require(d0 * d0 - 2 * t * e0 * e0 == -1, "d0^2 - 2t e0^2 == -1")
        _require(same and neg == PellSolution(d0, e0), "quotient 1 <=> negative solvable")
    else:
        _require(not same, "quotient != 1 <=> negative unsolvable")
    if quotient == 2:
        _require(2 * d0 * d0 - t * e0 * e0 == -1, "2 d0^2 - t e0^2 == -1")
    return SubcaseReport(
        t=t, d0=d0, e0=e0, D_prime=d_prime, D_prime_sq=d_prime_sq,
        quotient=quotient, same_structure=same,
    )


def solve_quartic_relation(t: int, scan_bound: int = 10 ** 6) -> Optional[tuple[int, int]]:
    """Minimal positive (d, e) with 2 d^2 - t e^2 = -1, or None.

    Parity pre-filter: t e^2 = 2 d^2 + 1 is odd, so even t never solves.
    Doubling gives the equivalent form x^2 - 2t y^2 = -2 with x = 2d.  For
    2t >= 5 every solution with coprime coordinates appears among the
    convergents of sqrt(2t), and gcd(x, y) divides sqrt(2) so coordinates
    are always coprime: scanning two periods of convergents is a complete
    search.  The remaining case t = 1 falls back to a bounded scan over e
    (default bound 10^6, far beyond anything it needs).
    """
    if t % 2 == 0:
        return None
    D = 2 * t
    if D >= 5 and not is_square(D):
        expansion = cf_sqrt(D)
        r = len(expansion.period)
        for k in range(2 * r + 2):
            x, y = convergent(expansion, k)
            if x * x - D * y * y == -2:
                if x % 2 != 0:
                    raise RuntimeError(f"odd x in x^2 - {D} y^2 = -2 at t={t}")
                return x // 2, y
        return None
    for e in range(1, scan_bound + 1):
        val = t * e * e - 1
        if val >= 2 and val % 2 == 0 and is_square(val // 2):
            return math.isqrt(val // 2), e
    return None


def build_quartic_divisor(t: int) -> DivisorClass:
    """The degree-4 polarization D' = e0 L - 2 d0 A1 of the 15-nodal model.

    Exists exactly in the quotient-2 sub-case, where (d0, e0) from the gcd
    split solves 2 d0^2 - t e0^2 = -1 minimally.  Asserts D'^2 = 4,
    D'.A1 = D'.A1' = 4 d0 and D'.A_j = 0 for j >= 2.  Raises NoQuarticCase
    otherwise, distinguishing the reason (negative equation solvable, or the
    defining relation unsolvable; unsolvability is decided by a complete
    convergent scan, not a truncated search).
    """
    report = subcase_classify(t)
    if report.quotient != 2:
        if report.quotient == 1:
            raise NoQuarticCase(
                f"t = {t}: negative Pell-Fermat solvable (quotient 1); the "
                f"degree-2 double-plane divisor applies instead"
            )
        found = solve_quartic_relation(t)
        if found is None:
            raise NoQuarticCase(
                f"t = {t}: 2 d^2 - {t} e^2 = -1 has no solution "
                f"(complete convergent scan)"
            )
        raise NoQuarticCase(
            f"t = {t}: 2 d^2 - {t} e^2 = -1 is solvable by {found} but the "
            f"solution does not come from the fundamental solution "
            f"(quotient {report.quotient}); no 15-nodal degree-4 model"
        )
    d0, e0 = report.d0, report.e0
    minimal = solve_quartic_relation(t)
    _require(minimal == (d0, e0), "gcd split gives the minimal quartic relation")
    form = GramForm(t)
    d_prime = e0 * L - 2 * d0 * exceptional(1)
    _require(d_prime == report.D_prime, "D' == (A1 + A1')/(2 d0)")
    _require(form.square(d_prime) == 4, "D'^2 == 4")
    fund = fundamental_solution(2 * t)
    a1p = fund.beta * L - fund.alpha * exceptional(1)
    _require(form.pair(d_prime, exceptional(1)) == 4 * d0, "D'.A1 == 4 d0")
    _require(form.pair(d_prime, a1p) == 4 * d0, "D'.A1' == 4 d0")
    for j in range(2, 17):
        _require(form.pair(d_prime, exceptional(j)) == 0, f"D'.A{j} == 0")
    return d_prime


def build_double_plane_divisor(t: int) -> DivisorClass:
    """The degree-2 polarization D' = e0 L - d0 A1 of the double-plane model.

    Exists exactly when the negative equation d^2 - 2t e^2 = -1 is solvable,
    with (d0, e0) its fundamental solution; asserts D'^2 = 2 and the exact
    class identity A1 + A1' = 2 d0 D' (the covering involution swaps A1 and
    A1', so both configurations give the same Kummer structure).
    """
    neg = negative_fundamental_solution(2 * t)
    if neg is None:
        raise NoNegPell(f"t = {t}: the negative Pell-Fermat equation has no solution")
    d0, e0 = neg.alpha, neg.beta
    form = GramForm(t)
    d_prime = e0 * L - d0 * exceptional(1)
    _require(form.square(d_prime) == 2, "D'^2 == 2")
    fund = fundamental_solution(2 * t)
    a1p = fund.beta * L - fund.alpha * exceptional(1)
    _require(exceptional(1) + a1p == 2 * d0 * d_prime, "A1 + A1' == 2 d0 D'")
    for j in range(2, 17):
        _require(form.pair(d_prime, exceptional(j)) == 0, f"D'.A{j} == 0")
    return d_prime


def build_t4_configuration() -> T4Package:
    """The t = 4 replacement configuration from half-integer classes.

    With (alpha0, beta0) = (3, 1) the class A1' = L - 3 A1 is not a curve
    class; instead the four classes A_i'' = (L - 3 A_i - sum of the other
    three first-block A_j)/2 are pairwise-orthogonal (-2)-classes with
    A1' = 2 A1'' + A2 + A3 + A4, and L1 = 3L - 4(A1+A2+A3+A4) is the
    polarization contracting exactly {A1''..A4'', A5..A16}.  Identities
    asserted: A_i''^2 = -2, L1^2 = 16 = L^2, L1.A_i'' = 0,
    A_i''.A_j'' = 0 (i != j), A1''.L' = 0 but A_i''.L' != 0 for i = 2,3,4.
    """
    t = 4
    form = GramForm(t)
    fund = fundamental_solution(2 * t)
    _require(fund == PellSolution(3, 1), "fundamental solution at t=4 is (3, 1)")
    a1p = fund.beta * L - fund.alpha * exceptional(1)
    a, b = solve_three_conditions(t, fund)
    lp = b * L - a * exceptional(1)

    block = sorted(BLOCKS[0])
    doubles = []
    for i in block:
        others = [j for j in block if j != i]
        cls = Fraction(1, 2) * (
            L - 3 * exceptional(i) - sum(
                (exceptional(j) for j in others), DivisorClass(0, (0,) * 16)
            )
        )
        doubles.append(cls)
    a_dp = tuple(doubles)

    for i, cls in enumerate(a_dp):
        _require(form.square(cls) == -2, f"A{i + 1}''^2 == -2")
        _require(is_admissible(cls), f"A{i + 1}'' admissible")
    for i in range(4):
        for j in range(i + 1, 4):
            _require(form.pair(a_dp[i], a_dp[j]) == 0, f"A{i + 1}''.A{j + 1}'' == 0")

    l1 = 3 * L - 4 * sum((exceptional(i) for i in block), DivisorClass(0, (0,) * 16))
    _require(form.square(l1) == 16, "L1^2 == 16")
    _require(form.square(l1) == form.square(L), "L1^2 == L^2")
    for i, cls in enumerate(a_dp):
        _require(form.pair(l1, cls) == 0, f"L1.A{i + 1}'' == 0")
    _require(
        a1p == 2 * a_dp[0] + exceptional(2) + exceptional(3) + exceptional(4),
        "A1' == 2 A1'' + A2 + A3 + A4",
    )
    _require(form.pair(a_dp[0], lp) == 0, "A1''.L' == 0")
    for i in (1, 2, 3):
        _require(form.pair(a_dp[i], lp) != 0, f"A{i + 1}''.L' != 0")

    config = make_nikulin_configuration(t, a_dp + EXCEPTIONALS[4:])
    return T4Package(
        a_double_primes=a_dp, L1=l1, A1_prime=a1p, L_prime=lp, configuration=config
    )


def build_t2_configuration() -> T2Package:
    """The t = 2 (square 2t) replacement via the four elliptic pencils.

    F_k = (L - sum of block k)/2 are square-zero classes with F_i . F_j = 2
    (i != j) and L . F_k = 4.  B_j = F2 - A_j (j <= 4) and B_j = F1 - A_j
    (5 <= j <= 8) are eight pairwise-disjoint (-2)-classes disjoint from
    A9..A16, giving the configuration {B1..B8, A9..A16}.  C_k = F1 - A_k
    for k = 5..16 are the reducible-fibre
    partners with C_k . A_k = 2.  L' = 3L - 2(A1+..+A8) has square 8 and is
    orthogonal to every configuration class.
    """
    t = 2
    form = GramForm(t)
    zero = DivisorClass(0, (0,) * 16)
    f = tuple(
        Fraction(1, 2) * (L - sum((exceptional(i) for i in sorted(blk)), zero))
        for blk in BLOCKS
    )
    for k, fk in enumerate(f):
        _require(form.square(fk) == 0, f"F{k + 1}^2 == 0")
        _require(form.pair(L, fk) == 4, f"L.F{k + 1} == 4")
        _require(is_admissible(fk), f"F{k + 1} admissible")
    for i in range(4):
        for j in range(i + 1, 4):
            _require(form.pair(f[i], f[j]) == 2, f"F{i + 1}.F{j + 1} == 2")

    b = tuple(f[1] - exceptional(j) for j in range(1, 5)) + tuple(
        f[0] - exceptional(j) for j in range(5, 9)
    )
    for j, bj in enumerate(b):
        for k, bk in enumerate(b):
            want = -2 if j == k else 0
            _require(form.pair(bj, bk) == want, f"B{j + 1}.B{k + 1} == {want}")
    for bj in b:
        for j in range(9, 17):
            _require(form.pair(bj, exceptional(j)) == 0, "B.A_j == 0 for j >= 9")

    c = {k: f[0] - exceptional(k) for k in range(5, 17)}
    for k, ck in c.items():
        _require(form.square(ck) == -2, f"C{k}^2 == -2")
        _require(form.pair(ck, exceptional(k)) == 2, f"C{k}.A{k} == 2")
    for k in range(5, 9):
        _require(c[k] == b[k - 1], "B_k == C_k for k = 5..8")

    lp = 3 * L - 2 * sum((exceptional(i) for i in range(1, 9)), zero)
    _require(form.square(lp) == 8, "L'^2 == 8")
    for cls in b + EXCEPTIONALS[8:]:
        _require(form.pair(lp, cls) == 0, "L' orthogonal to the configuration")

    config = make_nikulin_configuration(t, b + EXCEPTIONALS[8:])
    return T2Package(F=f, B=b, C=c, L_prime=lp, configuration=config)
