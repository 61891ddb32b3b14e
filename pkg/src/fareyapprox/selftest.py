"""Packaged smoke test: property checks and solver cross-checks.

Everything here is deterministic (fixed instances, no clocks, no RNG), so
two runs produce byte-identical output.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from typing import TextIO

from . import farey, mediants, simultaneous
from .rationals import parse_real

_PROPERTY_ORDERS = (1, 2, 25, 100)
_GAP_INDICES = (0, 1, 2, 5, 10)


def _gap_identity_failures(base: farey.FareyPair) -> list[str]:
    failures = []
    deepest = max(_GAP_INDICES) + 1
    down = mediants.descending_chain(base, deepest).terms
    up = mediants.ascending_chain(base, deepest).terms
    for i in _GAP_INDICES:
        if down[i] - down[i + 1] != mediants.descending_step_gap(base, i):
            failures.append(f"descending step gap, base {base.left},{base.right}, i={i}")
        if down[i] - base.left != mediants.descending_tail_gap(base, i):
            failures.append(f"descending tail gap, base {base.left},{base.right}, i={i}")
        if up[i + 1] - up[i] != mediants.ascending_step_gap(base, i):
            failures.append(f"ascending step gap, base {base.left},{base.right}, j={i}")
        if base.right - up[i] != mediants.ascending_tail_gap(base, i):
            failures.append(f"ascending tail gap, base {base.left},{base.right}, j={i}")
    return failures


def _fixed_instances() -> list[tuple[simultaneous.ConstraintSet, Fraction]]:
    # 20 deterministic instances mixing exact rationals and 30-digit
    # stand-ins, n between 1 and 3.
    standins = [parse_real(name, 30) - 1 for name in ("sqrt2", "sqrt3", "phi")]
    standins += [parse_real("sqrt5", 30) - 2, parse_real("pi", 30) - 3, parse_real("e", 30) - 2]
    pool = [
        Fraction(1, 3),
        Fraction(2, 7),
        Fraction(5, 16),
        Fraction(1, 2),
        Fraction(3, 8),
        Fraction(7, 9),
    ] + standins
    weights = [Fraction(1), Fraction(1, 2), Fraction(2)]
    epsilons = [Fraction(1, 8), Fraction(1, 16), Fraction(1, 32), Fraction(1, 64)]
    instances = []
    for k in range(20):
        n = 1 + k % 3
        items = []
        for j in range(n):
            x = pool[(k + 3 * j) % len(pool)]
            t = weights[(k + j) % len(weights)]
            items.append((x, t))
        instances.append((simultaneous.ConstraintSet(tuple(items)), epsilons[k % len(epsilons)]))
    return instances


def run_selftest(stream: TextIO = sys.stdout) -> int:
    """Run all checks, print one line per group plus a summary; 0 iff clean."""
    checks = 0
    failures: list[str] = []

    for order in _PROPERTY_ORDERS:
        report = farey.verify_farey_properties(order)
        for name, check in report.checks():
            checks += 1
            if not check.passed:
                failures.append(f"farey property {name} at order {order}: {check.counterexample}")
        status = "ok" if report.all_passed else "FAIL"
        stream.write(f"farey properties order={order}: {status} (4 properties)\n")

    bases = [farey.FareyPair(Fraction(0), Fraction(1), 1)]
    seq = list(farey.farey_sequence(8))
    bases += [farey.FareyPair(a, b, 8) for a, b in zip(seq, seq[1:])]
    gap_failures: list[str] = []
    for base in bases:
        gap_failures.extend(_gap_identity_failures(base))
        checks += 4 * len(_GAP_INDICES)
    failures.extend(gap_failures)
    status = "ok" if not gap_failures else "FAIL"
    stream.write(
        f"gap identities: {status} ({4 * len(_GAP_INDICES) * len(bases)} identities "
        f"over {len(bases)} base pairs)\n"
    )

    instances = _fixed_instances()
    satisfied = 0
    cross_failures: list[str] = []
    for idx, (cs, eps) in enumerate(instances):
        checks += 1
        composed = simultaneous.compose_solve(cs, eps)
        if not composed.satisfies_constraints:
            continue
        satisfied += 1
        if not simultaneous.check_solution(cs, eps, composed.q, composed.ps).overall:
            cross_failures.append(f"instance {idx}: satisfied flag not confirmed by checker")
            continue
        oracle = simultaneous.brute_force_solve(cs, eps)
        if not isinstance(oracle, simultaneous.Solution):
            cross_failures.append(f"instance {idx}: compose satisfied but oracle found nothing")
        elif oracle.q > composed.q:
            cross_failures.append(f"instance {idx}: oracle q {oracle.q} > compose q {composed.q}")
    failures.extend(cross_failures)
    status = "ok" if not cross_failures else "FAIL"
    stream.write(
        f"compose vs oracle: {status} ({len(instances)} instances, {satisfied} satisfied)\n"
    )

    for line in failures:
        stream.write(f"FAIL {line}\n")
    verdict = "all passed" if not failures else f"{len(failures)} failed"
    stream.write(f"selftest: {checks} checks run, {verdict}\n")
    return 0 if not failures else 1
