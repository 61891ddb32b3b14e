"""Subdividing a Farey interval into rungs with a guaranteed gap bound.

Given consecutive Farey terms and a gap budget, a single mediant ladder
grown from the larger-denominator end either meets the budget with the
minimal number of points, or the request is provably infeasible under the
denominator cap - and the two obstructions are told apart.
"""

from fractions import Fraction

from fareyapprox import FareyPair, InfeasibleError, format_rational, subdivide

base = FareyPair(Fraction(1, 3), Fraction(1, 2), 3)

print("interval [1/3, 1/2], gap budget 1/7:")
sub = subdivide(base, Fraction(1, 7), denom_bound=100)
gaps = [b - a for a, b in zip(sub.points, sub.points[1:])]
print("  points:", " ".join(format_rational(p) for p in sub.points))
print("  gaps:  ", " ".join(format_rational(g) for g in gaps))

print("\nthe rung next to the anchor endpoint never shrinks; for [1/3, 1/2]")
print("it is 1/15, so a budget of 1/50 is out of reach from this pair:")
try:
    subdivide(base, Fraction(1, 50), denom_bound=10**6)
except InfeasibleError as exc:
    print(f"  infeasible: {exc}")

print("\na skewed pair has a much lower floor: [0/1, 1/20] in F_20, budget 1/400:")
skewed = FareyPair(Fraction(0), Fraction(1, 20), 20)
sub = subdivide(skewed, Fraction(1, 400), denom_bound=500)
gaps = [b - a for a, b in zip(sub.points, sub.points[1:])]
print(f"  {len(sub.points)} points, largest gap {format_rational(max(gaps))},"
      f" largest denominator {max(p.denominator for p in sub.points)}")

print("\ninterval [0/1, 1/7] in F_7, gap budget 1/100, denominators capped at 10:")
try:
    subdivide(FareyPair(Fraction(0), Fraction(1, 7), 7), Fraction(1, 100), denom_bound=10)
except InfeasibleError as exc:
    print(f"  infeasible, as it must be: {exc}")

print("\nthe unit pair 0/1 < 1/1 has a hard floor at 1/2:")
try:
    subdivide(FareyPair(Fraction(0), Fraction(1), 1), Fraction(1, 3), denom_bound=10**6)
except InfeasibleError as exc:
    print(f"  infeasible no matter the budget: {exc}")
