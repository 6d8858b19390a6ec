"""Divisor classes of a degree-4t generic Kummer surface, exactly.

The ambient rank-17 space is spanned by a big class L with L^2 = 4t and the
sixteen exceptional (-2)-classes A1..A16, which are pairwise orthogonal and
orthogonal to L.  Coefficients live in (1/2)Z, so a class

    alpha * L  -  sum_i beta_i * A_i

is stored through doubled integers (two_cL, two_cA) = (2*alpha, (2*beta_i)).
Note the sign convention: two_cA stores the beta_i of the *subtracted* sum,
so the class A_i itself has two_cA[i-1] == -2.  Doubling keeps every
computation in exact integer arithmetic; intersection numbers come out as
Fractions with denominator dividing 4.

Membership in the actual Neron-Severi group is modelled at two levels:

  * is_admissible: the necessary half-integer conditions (a class with any
    half-integer coefficient needs at least 4 half-integer beta_j, and an
    integer L-coefficient needs 0 or at least 8).  This over-approximates
    NS; ruling out a class in the superset rules it out in NS.
  * is_in_block_overlattice: for even t, the exact index-2 overlattice in a
    fixed labelling.  The Kummer lattice contains half-sums of the A_i over
    the affine hyperplanes of F_2^4 (identify A_i with the binary vector
    i-1), and the glue class is (L - A1 - A2 - A3 - A4)/2, i.e. the four
    labelled blocks {1-4}, {5-8}, {9-12}, {13-16} are the index sets that
    support half-integer L-classes.  Which concrete 4-sets do so is a
    labelling choice; this module fixes the blocks once and for all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence


RANK_A = 16


@dataclass(frozen=True)
class DivisorClass:
    """Exact divisor class alpha*L - sum beta_i A_i via doubled coefficients."""

    two_cL: int
    two_cA: tuple[int, ...]

    def __post_init__(self):
        if len(self.two_cA) != RANK_A:
            raise ValueError(f"need {RANK_A} doubled A-coefficients")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(
            self.two_cL + other.two_cL,
            tuple(a + b for a, b in zip(self.two_cA, other.two_cA)),
        )

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.two_cL, tuple(-a for a in self.two_cA))

    def __mul__(self, c) -> "DivisorClass":
        c = Fraction(c)
        two_l = c * self.two_cL
        two_a = tuple(c * a for a in self.two_cA)
        if two_l.denominator != 1 or any(a.denominator != 1 for a in two_a):
            raise ValueError(f"scaling by {c} leaves half-integer range")
        return DivisorClass(int(two_l), tuple(int(a) for a in two_a))

    __rmul__ = __mul__

    # -- views ------------------------------------------------------------

    @property
    def coeff_L(self) -> Fraction:
        return Fraction(self.two_cL, 2)

    def coeff_A(self, i: int) -> Fraction:
        """beta_i for 1-based i (the class subtracts beta_i * A_i)."""
        return Fraction(self.two_cA[i - 1], 2)

    def is_integral(self) -> bool:
        return self.two_cL % 2 == 0 and all(c % 2 == 0 for c in self.two_cA)

    def half_support(self) -> frozenset[int]:
        """1-based indices whose A-coefficient is a true half-integer."""
        return frozenset(i + 1 for i, c in enumerate(self.two_cA) if c % 2)

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        """Exact decimal-string form {"L": "p/2", "A": ["q/2", ...]}."""
        return {
            "L": str(self.coeff_L),
            "A": [str(Fraction(c, 2)) for c in self.two_cA],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "DivisorClass":
        two_l = Fraction(data["L"]) * 2
        two_a = [Fraction(s) * 2 for s in data["A"]]
        if two_l.denominator != 1 or any(a.denominator != 1 for a in two_a):
            raise ValueError("coefficients must be half-integers")
        return cls(int(two_l), tuple(int(a) for a in two_a))

    @classmethod
    def from_coefficients(cls, l_coeff, a_coeffs: Sequence) -> "DivisorClass":
        """Build from true (half-integer) coefficients alpha and beta_1..beta_16."""
        two_l = Fraction(l_coeff) * 2
        two_a = [Fraction(c) * 2 for c in a_coeffs]
        if two_l.denominator != 1 or any(a.denominator != 1 for a in two_a):
            raise ValueError("coefficients must be half-integers")
        return cls(int(two_l), tuple(int(a) for a in two_a))


ZERO = DivisorClass(0, (0,) * RANK_A)
L = DivisorClass(2, (0,) * RANK_A)
EXCEPTIONALS = tuple(
    DivisorClass(0, tuple(-2 if j == i else 0 for j in range(RANK_A)))
    for i in range(RANK_A)
)
BLOCKS = (frozenset({1, 2, 3, 4}), frozenset({5, 6, 7, 8}),
          frozenset({9, 10, 11, 12}), frozenset({13, 14, 15, 16}))


def exceptional(i: int) -> DivisorClass:
    """The exceptional class A_i, 1-based."""
    if not 1 <= i <= RANK_A:
        raise ValueError(f"index must be in 1..{RANK_A}")
    return EXCEPTIONALS[i - 1]


@dataclass(frozen=True)
class GramForm:
    """Intersection pairing with L^2 = 4t, A_i^2 = -2, all mixed products 0."""

    t: int

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("t must be a positive integer")

    def pair(self, x: DivisorClass, y: DivisorClass) -> Fraction:
        """Exact intersection number; denominator divides 4 but in practice 2."""
        s = sum(a * b for a, b in zip(x.two_cA, y.two_cA))
        return Fraction(2 * self.t * x.two_cL * y.two_cL - s, 2)

    def square(self, x: DivisorClass) -> Fraction:
        return self.pair(x, x)


def is_admissible(x: DivisorClass) -> bool:
    """Necessary conditions for membership in the Neron-Severi group.

    With any coefficient in (1/2)Z \\ Z at least 4 of the beta_j must be
    half-integers; with an integer L-coefficient the count of half-integer
    beta_j must be 0 or >= 8.  These are necessary only: the function
    over-approximates NS, which is sound for absence arguments.
    """
    half_count = sum(1 for c in x.two_cA if c % 2)
    alpha_half = x.two_cL % 2 != 0
    if (alpha_half or half_count) and half_count < 4:
        return False
    if not alpha_half and 0 < half_count < 8:
        return False
    return True


def is_effective_candidate(x: DivisorClass, form: GramForm) -> bool:
    """Effectivity test for a (-2)-class: one of the A_i, or positive L-degree.

    Riemann-Roch makes one of +-x effective for x^2 = -2; positive degree
    against the nef class L picks the sign, and the A_i are the only
    effective (-2)-classes of degree zero.
    """
    if form.square(x) != -2:
        raise ValueError("effectivity candidacy is defined for (-2)-classes")
    if x in EXCEPTIONALS:
        return True
    return form.pair(x, L) > 0


@lru_cache(maxsize=1)
def _affine_halfspace_code() -> frozenset[int]:
    """Bitmasks (bit v = index v+1) of the 32 affine-linear subsets of F_2^4.

    These are exactly the subsets {v : <a, v> + c = 1}: the empty set, the
    full set, and the 30 affine hyperplanes.  Half-sums of the A_i over these
    sets, and only these, lie in the saturated exceptional lattice.
    """
    words = set()
    for a in range(16):
        for c in (0, 1):
            mask = 0
            for v in range(16):
                if (bin(a & v).count("1") + c) % 2 == 1:
                    mask |= 1 << v
            words.add(mask)
    return frozenset(words)


_GLUE_MASK = 0b1111  # indices 1..4, the first labelled block


def is_in_block_overlattice(x: DivisorClass) -> bool:
    """Exact membership in the fixed even-t overlattice (see module docstring).

    Integer L-coefficient: the half-integer support of the beta_j must be an
    affine-linear subset.  Half-integer L-coefficient: the support must
    differ from the first block {1,2,3,4} by an affine-linear subset.
    Strictly sharper than is_admissible.
    """
    mask = 0
    for i, c in enumerate(x.two_cA):
        if c % 2:
            mask |= 1 << i
    if x.two_cL % 2 == 0:
        return mask in _affine_halfspace_code()
    return (mask ^ _GLUE_MASK) in _affine_halfspace_code()


def _iter_nonneg_sq_vectors(
    norm: int, slots: int, parities: Optional[Sequence[int]] = None
) -> Iterator[tuple[int, ...]]:
    """Non-negative integer vectors of given length with sum of squares == norm.

    parities[i], when given, fixes v_i mod 2 (an odd slot therefore
    contributes at least 1).  Enumeration order is lexicographic.
    """
    if parities is None:
        parities = [None] * slots

    def min_tail(j: int) -> int:
        return sum(1 for p in parities[j:] if p == 1)

    vec: list[int] = []

    def rec(j: int, rem: int) -> Iterator[tuple[int, ...]]:
        if j == slots:
            if rem == 0:
                yield tuple(vec)
            return
        if rem < min_tail(j):
            return
        p = parities[j]
        start = 0 if p in (None, 0) else 1
        step = 1 if p is None else 2
        v = start
        while v * v <= rem:
            vec.append(v)
            yield from rec(j + 1, rem - v * v)
            vec.pop()
            v += step

    return rec(0, norm)


DEFAULT_TAIL_CAP = 3  # max squared norm off the support: four halves, or unit + halves


def enumerate_minus2(
    support: Iterable[int],
    bound_uL,
    form: GramForm,
    tail_cap: int = DEFAULT_TAIL_CAP,
) -> list[DivisorClass]:
    """All (-2)-classes in a finite box that could be irreducible rational curves.

    support lists the 1-based A-indices whose coefficients range freely; the
    L-coefficient alpha ranges over half-integers with |alpha| <= bound_uL.
    Off-support indices carry only a small tail of squared norm <= tail_cap
    (enough for four halves, or a unit plus change, which is all the bounded
    nefness arguments ever need).

    A curve candidate is one of the sixteen A_i, or has alpha > 0 (positive
    degree on the nef class L) and every beta_i >= 0 (non-negative meeting
    with every exceptional curve).  Everything returned passes
    is_admissible.  Output order: lexicographic on doubled coefficients.
    """
    bound = Fraction(bound_uL)
    if bound <= 0:
        raise ValueError("bound_uL must be positive")
    if tail_cap < 0:
        raise ValueError("tail_cap must be non-negative")
    supp = sorted(set(support))
    if any(not 1 <= i <= RANK_A for i in supp):
        raise ValueError("support indices must be in 1..16")
    tail = [i for i in range(1, RANK_A + 1) if i not in supp]
    a_max = math.floor(2 * bound)
    t = form.t

    found: list[DivisorClass] = list(EXCEPTIONALS)
    for a in range(1, a_max + 1):
        budget = 2 * t * a * a + 4  # sum of squared doubled A-coefficients
        for supp_vec in _iter_nonneg_sq_vectors_bounded(budget, len(supp)):
            q = budget - sum(c * c for c in supp_vec)
            if q > 4 * tail_cap:
                continue
            for tail_vec in _iter_nonneg_sq_vectors(q, len(tail)):
                two_a = [0] * RANK_A
                for i, c in zip(supp, supp_vec):
                    two_a[i - 1] = c
                for i, c in zip(tail, tail_vec):
                    two_a[i - 1] = c
                cls = DivisorClass(a, tuple(two_a))
                if is_admissible(cls):
                    found.append(cls)
    found.sort(key=lambda c: (c.two_cL, c.two_cA))
    return found


def _iter_nonneg_sq_vectors_bounded(budget: int, slots: int) -> Iterator[tuple[int, ...]]:
    """Non-negative vectors with sum of squares <= budget (support side)."""
    vec: list[int] = []

    def rec(j: int, rem: int) -> Iterator[tuple[int, ...]]:
        if j == slots:
            yield tuple(vec)
            return
        v = 0
        while v * v <= rem:
            vec.append(v)
            yield from rec(j + 1, rem - v * v)
            vec.pop()
            v += 1

    return rec(0, budget)
