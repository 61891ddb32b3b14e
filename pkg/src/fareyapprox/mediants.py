"""Mediant chains off a unimodular pair, and gap-bounded interval subdivision.

Given consecutive Farey terms h1/k1 < h2/k2, repeatedly taking mediants
toward one endpoint produces a ladder of reduced fractions:

    descending from the right:  (h2 + i*h1) / (k2 + i*k1),  i = 0, 1, ...
    ascending from the left:    (h1 + j*h2) / (k1 + j*k2),  j = 0, 1, ...

Because every rung is unimodular with its neighbours, the gaps have exact
closed forms (products of adjacent rung denominators), which is what lets
:func:`subdivide` pick the minimal chain length for a requested gap bound
without any searching.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceededError, InfeasibleError, InvalidInputError
from .farey import FareyPair


class ChainSide(enum.Enum):
    DESCENDING = "descending"
    ASCENDING = "ascending"


@dataclass(frozen=True)
class MediantChain:
    """A ladder of mediants leaning on one endpoint of ``base``.

    Descending chains start at base.right and strictly decrease toward
    base.left; ascending chains start at base.left and strictly increase
    toward base.right.  Every term is reduced.
    """

    terms: tuple[Fraction, ...]
    side: ChainSide
    base: FareyPair


@dataclass(frozen=True)
class Subdivision:
    """Strictly increasing reduced points covering a bracketing interval.

    Consecutive gaps are all <= gap_bound and every denominator is
    <= denom_bound; the first and last points are the interval endpoints.
    """

    points: tuple[Fraction, ...]
    gap_bound: Fraction
    denom_bound: int


def _require_count(count: int) -> None:
    if not isinstance(count, int) or count < 0:
        raise InvalidInputError("chain length must be a nonnegative integer")


def descending_chain(base: FareyPair, count: int) -> MediantChain:
    """Terms (h2 + i*h1)/(k2 + i*k1) for i = 0..count; strictly decreasing."""
    _require_count(count)
    h1, k1 = base.left.numerator, base.left.denominator
    h2, k2 = base.right.numerator, base.right.denominator
    terms = tuple(Fraction(h2 + i * h1, k2 + i * k1) for i in range(count + 1))
    return MediantChain(terms, ChainSide.DESCENDING, base)


def ascending_chain(base: FareyPair, count: int) -> MediantChain:
    """Terms (h1 + j*h2)/(k1 + j*k2) for j = 0..count; strictly increasing."""
    _require_count(count)
    h1, k1 = base.left.numerator, base.left.denominator
    h2, k2 = base.right.numerator, base.right.denominator
    terms = tuple(Fraction(h1 + j * h2, k1 + j * k2) for j in range(count + 1))
    return MediantChain(terms, ChainSide.ASCENDING, base)


def descending_step_gap(base: FareyPair, i: int) -> Fraction:
    """Exact gap term(i) - term(i+1) of the descending chain, in closed form."""
    _require_count(i)
    k1, k2 = base.left.denominator, base.right.denominator
    return Fraction(1, (k2 + i * k1) * (k2 + (i + 1) * k1))


def descending_tail_gap(base: FareyPair, i: int) -> Fraction:
    """Exact distance term(i) - base.left of the descending chain."""
    _require_count(i)
    k1, k2 = base.left.denominator, base.right.denominator
    return Fraction(1, k1 * (k2 + i * k1))


def ascending_step_gap(base: FareyPair, j: int) -> Fraction:
    """Exact gap term(j+1) - term(j) of the ascending chain, in closed form."""
    _require_count(j)
    k1, k2 = base.left.denominator, base.right.denominator
    return Fraction(1, (k1 + j * k2) * (k1 + (j + 1) * k2))


def ascending_tail_gap(base: FareyPair, j: int) -> Fraction:
    """Exact distance base.right - term(j) of the ascending chain."""
    _require_count(j)
    k1, k2 = base.left.denominator, base.right.denominator
    return Fraction(1, k2 * (k1 + j * k2))


def subdivide(
    base: FareyPair,
    gap_bound: Fraction,
    denom_bound: int,
    max_points: int = 10_000,
) -> Subdivision:
    """Subdivide [base.left, base.right] into reduced points with small gaps.

    If the pair's own gap already satisfies the bound, the two endpoints
    are returned.  Otherwise a single mediant chain is grown from the
    larger-denominator endpoint toward the other one (for the only
    equal-denominator pair, 0/1 < 1/1, the descending side is used by
    convention), with the minimal length that brings the remaining tail
    gap under the bound.  The chain's own rung gaps shrink as it grows
    longer, so the widest of them - the one next to the anchor endpoint -
    is a hard floor: if it exceeds the bound, no chain length helps.

    Raises InfeasibleError when the bound is unreachable under
    ``denom_bound`` and BudgetExceededError when more than ``max_points``
    points would be needed.
    """
    gap_bound = Fraction(gap_bound)
    if gap_bound <= 0:
        raise InvalidInputError("gap bound must be positive")
    if not isinstance(denom_bound, int) or denom_bound < 1:
        raise InvalidInputError("denominator bound must be a positive integer")
    if not isinstance(max_points, int) or max_points < 2:
        raise InvalidInputError("max_points must be at least 2")
    left, right = base.left, base.right
    k1, k2 = left.denominator, right.denominator
    if max(k1, k2) > denom_bound:
        raise InfeasibleError(
            f"endpoint denominators {k1}, {k2} already exceed the bound {denom_bound}"
        )
    if right - left <= gap_bound:
        return Subdivision((left, right), gap_bound, denom_bound)

    descending = k2 >= k1
    anchor, step = (k2, k1) if descending else (k1, k2)
    # Smallest chain length p with tail gap 1/(step*(anchor + p*step))
    # <= gap_bound; p >= 1 here since the whole gap 1/(k1*k2) is too wide.
    needed_den = math.ceil(1 / (gap_bound * step))
    p = max(1, -((anchor - needed_den) // step))
    widest_rung = Fraction(1, anchor * (anchor + step))
    if widest_rung > gap_bound:
        raise InfeasibleError(
            f"gap next to the anchor endpoint is {widest_rung} > {gap_bound} "
            "for every chain length"
        )
    if anchor + p * step > denom_bound:
        raise InfeasibleError(
            f"gap bound {gap_bound} needs a chain denominator of "
            f"{anchor + p * step} > {denom_bound}"
        )
    if p + 2 > max_points:
        raise BudgetExceededError(f"subdivision needs {p + 2} points, max_points={max_points}")
    if descending:
        chain = descending_chain(base, p)
        points = (left,) + tuple(reversed(chain.terms))
    else:
        chain = ascending_chain(base, p)
        points = chain.terms + (right,)
    return Subdivision(points, gap_bound, denom_bound)
