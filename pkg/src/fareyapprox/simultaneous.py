"""Simultaneous rational approximation under a joint error/denominator budget.

The central question: given targets x_1..x_n with tolerance weights
t_1..t_n and a scale eps > 0, find one denominator q and numerators p_i
with

    |x_i - p_i/q| <= eps * t_i   for every i,   and   eps * q <= min_i t_i.

The denominator condition caps q at t_min/eps, so the whole search space
is the finite scan q = 1 .. floor(t_min/eps); :func:`brute_force_solve`
walks it exactly and is the ground-truth oracle every other method is
checked against.  :func:`dirichlet_solve` is the classical pigeonhole
baseline (error <= 1/(Tq) with q < T**n), whose denominator bound blows
up exponentially in n; :func:`compare` puts the two side by side.
:func:`epsilon_threshold` sweeps a grid of eps values and reports the
empirical feasibility frontier.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import BudgetExceededError, InternalError, InvalidInputError
from .farey import ExactHit, farey_neighbors

#: Default cap on exhaustive denominator scans.
DEFAULT_MAX_SCAN = 10_000_000


@dataclass(frozen=True)
class ConstraintSet:
    """The finite list of (target, tolerance weight) pairs."""

    items: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        items = tuple((Fraction(x), Fraction(t)) for x, t in self.items)
        if not items:
            raise InvalidInputError("constraint set must contain at least one item")
        if any(t <= 0 for _, t in items):
            raise InvalidInputError("tolerance weights must be positive")
        object.__setattr__(self, "items", items)

    @property
    def n(self) -> int:
        return len(self.items)

    @property
    def xs(self) -> tuple[Fraction, ...]:
        return tuple(x for x, _ in self.items)

    @property
    def t_min(self) -> Fraction:
        return min(t for _, t in self.items)


@dataclass(frozen=True)
class Solution:
    """A common denominator q with numerators and exact per-item errors.

    ``epsilon`` records the scale the solution was produced for (1/T for
    the pigeonhole baseline).  ``satisfies_constraints`` is set only by
    the composition heuristic, which does not guarantee the joint
    constraint and says so explicitly.
    """

    q: int
    ps: tuple[int, ...]
    errors: tuple[Fraction, ...]
    epsilon: Fraction
    method: str
    satisfies_constraints: bool | None = None

    @property
    def max_error(self) -> Fraction:
        return max(self.errors)


@dataclass(frozen=True)
class Infeasible:
    """Negative verdict of an exhaustive scan, with the reason."""

    reason: str


@dataclass(frozen=True)
class ItemCheck:
    error_ok: bool
    exact_error: Fraction
    bound: Fraction


@dataclass(frozen=True)
class CheckReport:
    per_item: tuple[ItemCheck, ...]
    denom_ok: bool
    overall: bool


@dataclass(frozen=True)
class ThresholdReport:
    """Feasibility of each grid point plus the measured frontier.

    ``epsilon0`` is the largest grid point such that every grid point at
    or below it is feasible (None if the smallest point already fails);
    it is a statement about the supplied grid only, never an
    extrapolation to off-grid scales.
    """

    grid: tuple[Fraction, ...]
    feasible: tuple[bool, ...]
    epsilon0: Fraction | None
    witnesses: tuple[Solution | None, ...]


@dataclass(frozen=True)
class ComparisonReport:
    epsilon: Fraction
    constrained: Union[Solution, Infeasible]
    dirichlet_T: int
    dirichlet: Solution
    q_bound_constrained: Fraction
    q_bound_dirichlet: int
    max_error_constrained: Fraction | None
    max_error_dirichlet: Fraction


def best_numerator(x: Fraction, q: int) -> int:
    """The integer p minimizing |x - p/q|; exact ties go to the smaller p."""
    if not isinstance(q, int) or q < 1:
        raise InvalidInputError("denominator must be a positive integer")
    x = Fraction(x)
    f, rem = divmod(x.numerator * q, x.denominator)
    return f + 1 if 2 * rem > x.denominator else f


def check_solution(
    cs: ConstraintSet,
    epsilon: Fraction,
    q: int,
    ps: Sequence[int],
    strict: bool = False,
) -> CheckReport:
    """Exact check of the joint constraint for a proposed (q, ps).

    Per item: |x_i - p_i/q| <= eps*t_i (strictly < with ``strict=True``).
    The denominator condition is tested in its equivalent single form
    eps*q <= t_min.  ``overall`` is the conjunction of everything.
    """
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise InvalidInputError("epsilon must be positive")
    if not isinstance(q, int) or q < 1:
        raise InvalidInputError("q must be a positive integer")
    if len(ps) != cs.n:
        raise InvalidInputError(f"expected {cs.n} numerators, got {len(ps)}")
    per_item = []
    for (x, t), p in zip(cs.items, ps):
        err = abs(x - Fraction(p, q))
        bound = epsilon * t
        ok = err < bound if strict else err <= bound
        per_item.append(ItemCheck(ok, err, bound))
    denom_ok = epsilon * q <= cs.t_min
    overall = denom_ok and all(item.error_ok for item in per_item)
    return CheckReport(tuple(per_item), denom_ok, overall)


def _exact_errors(cs: ConstraintSet, q: int, ps: Sequence[int]) -> tuple[Fraction, ...]:
    return tuple(abs(x - Fraction(p, q)) for (x, _), p in zip(cs.items, ps))


def brute_force_solve(
    cs: ConstraintSet,
    epsilon: Fraction,
    max_scan: int = DEFAULT_MAX_SCAN,
) -> Union[Solution, Infeasible]:
    """Exhaustive smallest-q solver; the oracle for everything else.

    Scans q = 1 .. floor(t_min/eps) with p_i chosen as the nearest
    numerator, and returns the first q whose exact errors all fit.  If
    the scan range exceeds ``max_scan`` and no solution appears within
    the budget, BudgetExceededError is raised rather than guessing.
    """
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise InvalidInputError("epsilon must be positive")
    q_max = math.floor(cs.t_min / epsilon)
    if q_max < 1:
        return Infeasible("denominator range empty: floor(t_min/epsilon) = 0")
    # Integer-only inner loop: |x - p/q| <= eps*t with x = xn/xd and
    # eps*t = bn/bd becomes |xn*q - p*xd| * bd <= bn * xd * q.
    items = []
    for x, t in cs.items:
        bound = epsilon * t
        items.append((x.numerator, x.denominator, bound.numerator, bound.denominator))
    limit = min(q_max, max_scan)
    for q in range(1, limit + 1):
        ps = []
        for xn, xd, bn, bd in items:
            f, rem = divmod(xn * q, xd)
            p = f + 1 if 2 * rem > xd else f
            if abs(xn * q - p * xd) * bd > bn * xd * q:
                break
            ps.append(p)
        else:
            return Solution(q, tuple(ps), _exact_errors(cs, q, ps), epsilon, "brute")
    if q_max > max_scan:
        raise BudgetExceededError(
            f"scan budget exhausted after {max_scan} of {q_max} denominators"
        )
    return Infeasible(f"no feasible denominator in 1..{q_max}")


def _best_at_order(y: Fraction, order: int) -> tuple[int, int]:
    # Nearest endpoint of the Farey bracketing of frac(y) at the given
    # order, shifted back by floor(y); ties go to the smaller value.
    n = math.floor(y)
    f = y - n
    found = farey_neighbors(f, order)
    if isinstance(found, ExactHit):
        p, q = found.value.numerator, found.value.denominator
    elif f - found.left <= found.right - f:
        p, q = found.left.numerator, found.left.denominator
    else:
        p, q = found.right.numerator, found.right.denominator
    return n * q + p, q


def compose_solve(
    cs: ConstraintSet,
    epsilon: Fraction,
    stage_order: int | None = None,
    max_denominator: int = 10**30,
) -> Solution:
    """Common-denominator composition heuristic.

    Stage 1 approximates x_1 by Farey bracketing at ``stage_order``
    (default ceil(1/eps), the natural scale of eps).  Each later stage
    approximates q * x_k the same way and multiplies the denominators:
    Q <- q * q_k, with earlier numerators rescaled by q_k.  The result
    carries exact errors and a ``satisfies_constraints`` flag computed by
    :func:`check_solution`; nothing guarantees the flag is True, which is
    the point of reporting it.
    """
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise InvalidInputError("epsilon must be positive")
    if stage_order is None:
        stage_order = max(1, math.ceil(1 / epsilon))
    if not isinstance(stage_order, int) or stage_order < 1:
        raise InvalidInputError("stage order must be a positive integer")
    xs = cs.xs
    p1, q = _best_at_order(xs[0], stage_order)
    ps = [p1]
    for x in xs[1:]:
        pk, qk = _best_at_order(x * q, stage_order)
        if q * qk > max_denominator:
            raise BudgetExceededError(
                f"stage denominator {q * qk} exceeds cap {max_denominator}"
            )
        ps = [p * qk for p in ps]
        ps.append(pk)
        q *= qk
    ps_t = tuple(ps)
    report = check_solution(cs, epsilon, q, ps_t)
    return Solution(
        q,
        ps_t,
        _exact_errors(cs, q, ps_t),
        epsilon,
        "compose",
        satisfies_constraints=report.overall,
    )


def dirichlet_solve(
    xs: Sequence[Fraction],
    T: int,
    max_scan: int = DEFAULT_MAX_SCAN,
) -> Solution:
    """Smallest q with 1 <= q < T**n and every ||q*x_i|| <= 1/T.

    Such a q exists by the pigeonhole argument, so an exhausted scan is
    reported as InternalError rather than infeasibility.  The recorded
    epsilon is 1/T, the guaranteed per-item scale (errors are <= 1/(Tq)).
    """
    xs = tuple(Fraction(x) for x in xs)
    if not xs:
        raise InvalidInputError("need at least one target")
    if not isinstance(T, int) or T < 2:
        raise InvalidInputError("T must be an integer >= 2")
    q_max = T ** len(xs) - 1
    if q_max > max_scan:
        raise BudgetExceededError(f"T**n - 1 = {q_max} exceeds scan budget {max_scan}")
    items = tuple((x.numerator, x.denominator) for x in xs)
    for q in range(1, q_max + 1):
        for xn, xd in items:
            rem = (xn * q) % xd
            # ||q*x|| = min(rem, xd - rem) / xd <= 1/T
            if min(rem, xd - rem) * T > xd:
                break
        else:
            ps = tuple(best_numerator(x, q) for x in xs)
            errors = tuple(abs(x - Fraction(p, q)) for x, p in zip(xs, ps))
            return Solution(q, ps, errors, Fraction(1, T), "dirichlet")
    raise InternalError(
        f"no q in 1..{q_max} with all distances <= 1/{T}; "
        "this contradicts the pigeonhole guarantee for exact inputs"
    )


def epsilon_threshold(
    cs: ConstraintSet,
    grid: Iterable[Fraction],
    max_scan: int = DEFAULT_MAX_SCAN,
) -> ThresholdReport:
    """Run the oracle at every grid point and locate the feasible suffix.

    The grid must be strictly descending and positive.  Feasibility is
    reported pointwise (no monotonicity in eps is assumed); epsilon0 is
    the top of the unbroken feasible suffix, if any.
    """
    grid = tuple(Fraction(g) for g in grid)
    if not grid:
        raise InvalidInputError("grid must be nonempty")
    if any(g <= 0 for g in grid):
        raise InvalidInputError("grid points must be positive")
    if any(a <= b for a, b in zip(grid, grid[1:])):
        raise InvalidInputError("grid must be strictly descending")
    feasible = []
    witnesses: list[Solution | None] = []
    for g in grid:
        result = brute_force_solve(cs, g, max_scan=max_scan)
        if isinstance(result, Solution):
            feasible.append(True)
            witnesses.append(result)
        else:
            feasible.append(False)
            witnesses.append(None)
    epsilon0 = None
    for g, ok in zip(reversed(grid), reversed(feasible)):
        if not ok:
            break
        epsilon0 = g
    return ThresholdReport(grid, tuple(feasible), epsilon0, tuple(witnesses))


def compare(
    cs: ConstraintSet,
    epsilon: Fraction,
    T: int,
    max_scan: int = DEFAULT_MAX_SCAN,
) -> ComparisonReport:
    """Constrained solver vs. pigeonhole baseline on a uniform-weight set.

    Requires all tolerance weights equal (the comparison is stated for a
    single t).  Reports the denominator bounds t/eps vs. T**n alongside
    the achieved denominators and exact maximum errors.
    """
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise InvalidInputError("epsilon must be positive")
    ts = {t for _, t in cs.items}
    if len(ts) != 1:
        raise InvalidInputError(
            "compare requires a uniform tolerance weight (t_1 = ... = t_n)"
        )
    t = ts.pop()
    constrained = brute_force_solve(cs, epsilon, max_scan=max_scan)
    baseline = dirichlet_solve(cs.xs, T, max_scan=max_scan)
    return ComparisonReport(
        epsilon=epsilon,
        constrained=constrained,
        dirichlet_T=T,
        dirichlet=baseline,
        q_bound_constrained=t / epsilon,
        q_bound_dirichlet=T**cs.n,
        max_error_constrained=(
            constrained.max_error if isinstance(constrained, Solution) else None
        ),
        max_error_dirichlet=baseline.max_error,
    )
