"""Approximating several reals at once under a joint quality/size budget.

The constrained problem: one denominator q serving every target, with
|x_i - p_i/q| <= eps*t_i per target and eps*q <= min t_i.  The second
condition caps q at t_min/eps, so feasibility is decidable by an exact
finite scan.  Below: the exhaustive oracle, the staged composition
heuristic, and an eps-sweep that measures where feasibility sets in.
"""

from fractions import Fraction

from fareyapprox import (
    ConstraintSet,
    brute_force_solve,
    check_solution,
    compose_solve,
    epsilon_threshold,
    format_rational,
    parse_real,
)

sqrt2 = parse_real("sqrt2", 50)
sqrt3 = parse_real("sqrt3", 50)
phi = parse_real("phi", 50)

cs = ConstraintSet(((sqrt2, Fraction(1)), (sqrt3, Fraction(1)), (phi, Fraction(2))))
eps = Fraction(1, 64)

print(f"targets: sqrt2, sqrt3 (weight 1), phi (weight 2); eps = {eps}")
print(f"denominator budget: q <= t_min/eps = {Fraction(1) / eps}")

sol = brute_force_solve(cs, eps)
print(f"\noracle: q = {sol.q}, numerators {list(sol.ps)}")
for (x, t), p, err in zip(cs.items, sol.ps, sol.errors):
    print(f"  |x - {p}/{sol.q}| = {format_rational(err)}  (budget {format_rational(eps * t)})")
print(f"  checker confirms: {check_solution(cs, eps, sol.q, sol.ps).overall}")

heur = compose_solve(cs, eps)
print(f"\ncomposition heuristic: q = {heur.q}, satisfies joint constraint: {heur.satisfies_constraints}")
print(f"  (stage denominators multiply; the oracle's q is never larger)")

grid = [Fraction(1, 2**k) for k in range(1, 13)]
report = epsilon_threshold(cs, grid)
print("\nfeasibility sweep over eps = 1/2 .. 1/4096:")
for g, ok, wit in zip(report.grid, report.feasible, report.witnesses):
    mark = f"feasible with q = {wit.q}" if ok else "infeasible"
    print(f"  eps = {format_rational(g):>7}: {mark}")
print(f"measured threshold on this grid: epsilon0 = {format_rational(report.epsilon0)}")
