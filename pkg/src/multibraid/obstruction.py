"""Closed-form non-freeness obstructions.

Everything here is exact combinatorial arithmetic, no linear algebra: the
degree profile of the two first syzygies of a triangle ideal of powers of
three pairwise-dependent linear forms, the resulting lower bound LB(m, d)
on the global-minus-local syzygy gap, the quadratic envelope of that bound
(maximum at d_max, discriminant), and the parity statistics P(m) and q that
decide the six-case residue test.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .exactalg import binom2
from .model import (
    MultiplicityLike,
    OPPOSITE_PAIRS,
    TRIANGLES,
    as_values,
    edge_index,
    triangle_edge_positions,
)


class TriangleRangeError(ValueError):
    """A triangle multiplicity fell outside a formula's validity range."""


class PreconditionError(ValueError):
    """An operation was called outside its stated hypotheses."""


@dataclass(frozen=True)
class LocalSyzygyStructure:
    """Degrees of the two first syzygies of <l1^m1, l2^m2, l3^m3>.

    In the balanced range (each power at most the sum of the other two
    plus one) the degrees are Omega and Omega+1 split by the parity
    remainder a; one power beyond that range is redundant and the degrees
    become (big power, sum of the other two).  gen_degrees always sums to
    m1 + m2 + m3.
    """

    gen_degrees: tuple[int, int]  # ascending
    omega: int
    a: int
    minimal: bool


def local_syzygy_structure(mi: int, mj: int, mk: int) -> LocalSyzygyStructure:
    if min(mi, mj, mk) < 1:
        raise ValueError("triangle multiplicities must be >= 1")
    total = mi + mj + mk
    omega = (total - 3) // 2 + 1
    a = total - 2 * omega
    minimal = all(
        x + y >= z + 2
        for x, y, z in ((mi, mj, mk), (mi, mk, mj), (mj, mk, mi))
    )
    balanced = all(
        z <= x + y + 1
        for x, y, z in ((mi, mj, mk), (mi, mk, mj), (mj, mk, mi))
    )
    if balanced:
        degrees = tuple(sorted([omega + 1] * a + [omega] * (2 - a)))
    else:
        big = max(mi, mj, mk)
        degrees = tuple(sorted((big, total - big)))
    return LocalSyzygyStructure(degrees, omega, a, minimal)  # type: ignore[arg-type]


def hf_local_syz(mi: int, mj: int, mk: int, d: int) -> int:
    """Hilbert function of the (free, rank two) triangle syzygy module."""
    return sum(binom2(d - g + 2) for g in local_syzygy_structure(mi, mj, mk).gen_degrees)


def hf_quotient_triangle(mi: int, mj: int, mk: int, d: int) -> int:
    """Hilbert function of S modulo a triangle ideal, via the resolution.

    Valid for every triangle (both syzygy-degree branches), unlike the
    eventual polynomial value in hp_quotient_triangle.
    """
    return (
        binom2(d + 2)
        - sum(binom2(d - m + 2) for m in (mi, mj, mk))
        + hf_local_syz(mi, mj, mk, d)
    )


def hp_quotient_triangle(mi: int, mj: int, mk: int) -> int:
    """Eventual (constant) Hilbert polynomial of S modulo a triangle ideal.

    Only derived in the balanced range; outside it a power is redundant and
    callers must fall back to exact computation.
    """
    if min(mi, mj, mk) < 1:
        raise ValueError("triangle multiplicities must be >= 1")
    for x, y, z in ((mi, mj, mk), (mi, mk, mj), (mj, mk, mi)):
        if z > x + y + 1:
            raise TriangleRangeError(
                f"power {z} exceeds {x} + {y} + 1; no closed-form quotient polynomial"
            )
    omega = (mi + mj + mk - 3) // 2 + 1
    return binom2(omega + 1) - sum(binom2(omega + 1 - m) for m in (mi, mj, mk))


def _triangle_triples(vals: tuple[int, ...]):
    for t in TRIANGLES:
        p, q, r = triangle_edge_positions(t)
        yield vals[p], vals[q], vals[r]


def lb(m: MultiplicityLike, d: int) -> int:
    """Lower bound on the degree-d gap between global and local syzygies.

    Positive at any degree implies non-freeness.  Computed from the
    syzygy-side expression; lb_via_quotients evaluates the equivalent
    quotient-side expression and the two are asserted equal in tests.
    """
    vals = as_values(m)
    return (
        sum(binom2(d - mv + 2) for mv in vals)
        - binom2(d + 2)
        - sum(hf_local_syz(x, y, z, d) for x, y, z in _triangle_triples(vals))
    )


def lb_via_quotients(m: MultiplicityLike, d: int) -> int:
    """The quotient-side expression for lb(m, d); equal by the four-term
    exact sequence linking a triangle ideal, its syzygies and its quotient."""
    vals = as_values(m)
    return (
        3 * binom2(d + 2)
        - sum(binom2(d - mv + 2) for mv in vals)
        - sum(hf_quotient_triangle(x, y, z, d) for x, y, z in _triangle_triples(vals))
    )


def d_max(m: MultiplicityLike) -> Fraction:
    """Argmax (2|m| - 9)/6 of the quadratic envelope of lb(m, -)."""
    return Fraction(2 * sum(as_values(m)) - 9, 6)


def quadratic_coefficients(m: MultiplicityLike) -> tuple[Fraction, Fraction, Fraction]:
    """(A, B, C) with the eventual polynomial of lb(m, d) = A d^2 + B d + C.

    Requires the balanced range on every triangle (propagates
    TriangleRangeError otherwise).
    """
    vals = as_values(m)
    A = Fraction(-3, 2)
    B = Fraction(-9, 2) + sum(vals)
    C = (
        Fraction(3)
        - sum(binom2(mv - 1) for mv in vals)
        - sum(hp_quotient_triangle(x, y, z) for x, y, z in _triangle_triples(vals))
    )
    return A, B, C


def discriminant_sq(m: MultiplicityLike) -> Fraction:
    """Squared discriminant B^2 - 4AC of the quadratic envelope.

    Satisfies 2*(D^2 - 9/4) = P(m) - 3q on the balanced range, which the
    acceptance suite checks exactly.
    """
    A, B, C = quadratic_coefficients(m)
    return B * B - 4 * A * C


@dataclass(frozen=True)
class LBReport:
    """One lb evaluation with the quadratic-envelope context."""

    degree: int
    value: int
    dmax: Fraction
    disc_sq: Optional[Fraction]


def lb_report(m: MultiplicityLike, d: int) -> LBReport:
    try:
        disc = discriminant_sq(m)
    except TriangleRangeError:
        disc = None
    return LBReport(degree=d, value=lb(m, d), dmax=d_max(m), disc_sq=disc)


def p_stat(m: MultiplicityLike) -> int:
    """Sum of squared alternating sums over the three opposite-edge pairings."""
    vals = as_values(m)
    total = 0
    pairs = [vals[p] + vals[q] for p, q in OPPOSITE_PAIRS]
    for i, j in combinations(range(3), 2):
        total += (pairs[i] - pairs[j]) ** 2
    return total


def odd_triangle_count(m: MultiplicityLike) -> int:
    """Number of triangles with odd multiplicity sum (always 0, 2 or 4)."""
    vals = as_values(m)
    return sum((x + y + z) & 1 for x, y, z in _triangle_triples(vals))


def twelve_inequalities(m: MultiplicityLike) -> bool:
    """Whether m_ij <= m_ik + m_jk + 1 holds for every triple i, j, k."""
    vals = as_values(m)
    for x, y, z in _triangle_triples(vals):
        if x > y + z + 1 or y > x + z + 1 or z > x + y + 1:
            return False
    return True


def general_nonfree_test(m: MultiplicityLike) -> Optional[int]:
    """First satisfied case (1..6) of the residue/parity non-freeness test.

    Hypotheses (caller's responsibility, enforced here): all twelve triangle
    inequalities hold and there is no free vertex.  The cases pair the
    residue of |m| mod 3 with the odd-triangle count q and a threshold on
    P(m); any hit means non-free.
    """
    vals = as_values(m)
    if not twelve_inequalities(vals):
        raise PreconditionError("the twelve triangle inequalities must hold")
    if _has_free_vertex(vals):
        raise PreconditionError("the multiplicity must not have a free vertex")
    divisible = sum(vals) % 3 == 0
    q = odd_triangle_count(vals)
    P = p_stat(vals)
    cases = (
        (1, divisible and q == 0 and P > 0),
        (2, divisible and q == 2 and P > 6),
        (3, divisible and q == 4 and P > 12),
        (4, not divisible and q == 0),
        (5, not divisible and q == 2 and P > 2),
        (6, not divisible and q == 4 and P > 8),
    )
    for case, hit in cases:
        if hit:
            return case
    return None


def _has_free_vertex(vals: tuple[int, ...]) -> bool:
    # local copy to avoid importing classifier (which imports this module)
    for i in range(4):
        others = [v for v in range(4) if v != i]
        for j, k in combinations(others, 2):
            if vals[edge_index(j, k)] < vals[edge_index(i, j)] + vals[edge_index(i, k)] - 1:
                break
        else:
            return True
    return False
