"""Why control the denominator at all?  The pigeonhole baseline blows up.

The classical guarantee gives errors <= 1/(Tq) with q < T**n.  To be sure
the error stays under eps*t one must take 1/T <= eps*t, and then the
denominator may climb toward T**n >= (1/(eps*t))**n - exponential in the
number of targets.  The constrained solver keeps q <= t/eps, always.
"""

import math
from fractions import Fraction

from fareyapprox import ConstraintSet, Solution, compare, format_rational, parse_real

targets = [parse_real(name, 50) for name in ("sqrt2", "sqrt3", "sqrt5")]
t = Fraction(1)
eps = Fraction(1, 50)
T = math.ceil(1 / (eps * t))  # forced: the smallest T with 1/T <= eps*t

cs = ConstraintSet(tuple((x, t) for x in targets))
report = compare(cs, eps, T)

print(f"three quadratic irrationals, uniform weight t = {t}, eps = {format_rational(eps)}")
print(f"forced T = {T}  (1/T = 1/{T} <= eps*t = {format_rational(eps * t)})")
print()
print(f"denominator bound, constrained:  t/eps = {format_rational(report.q_bound_constrained)}")
print(f"denominator bound, pigeonhole:   T^n  = {report.q_bound_dirichlet}")
print()
assert isinstance(report.constrained, Solution)
print(f"constrained solver found   q = {report.constrained.q}"
      f"  with max error {format_rational(report.max_error_constrained)}")
print(f"pigeonhole baseline found  q = {report.dirichlet.q}"
      f"  with max error {format_rational(report.max_error_dirichlet)}")
print()
print("the baseline's *guarantee* only kicks in somewhere below T^n =",
      f"{report.q_bound_dirichlet}, while the constrained bound stays at",
      f"{format_rational(report.q_bound_constrained)}.")
