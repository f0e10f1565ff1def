"""Walkthrough: the self-intersection audit and the single-fiber anomaly.

Resolving a singular point of multiplicity t drops a curve's
self-intersection by t^2, so for each construction

    (new degree)^2 - sum of drops over the added singularities = d^2

must close exactly.  It does for every raising/lowering schedule.  For the
single-fiber schedule the recorded blow-down type [2nd, d_(2n)] misses by
exactly 3 n^2 d^2, while the variant head multiplicity n*d closes the
identity.  The engine stores the recorded type verbatim and reports both
evaluations; deciding between them is out of scope.
"""

from curvegroups import (
    General,
    Special,
    added_singularities,
    audit_self_intersection,
    drop,
)
from curvegroups.constructions import special_blowdown_type

d, spec = 2, General((1, 2))
print(f"degree {d}, spec general(1,2):")
for t in added_singularities(d, spec):
    print(f"  added {t.pretty():14s} drop {drop(t)}")
audit = audit_self_intersection(d, spec)
print(f"  {d * spec.kernel_order}^2 - {d * spec.kernel_order * d * spec.kernel_order - audit.computed}"
      f" = {audit.computed} = {audit.expected} -> {audit.verdict}")

print("\nsingle-fiber schedules (recorded head 2nd vs variant head nd):")
print(f"{'d':>3} {'n':>3} {'recorded type':>16} {'residual':>9} {'variant type':>14} {'residual':>9}")
for d in (1, 2, 3):
    for n in (1, 2, 3):
        audit = audit_self_intersection(d, Special(n))
        recorded = special_blowdown_type(d, n, recorded_head=True)
        variant = special_blowdown_type(d, n, recorded_head=False)
        print(
            f"{d:>3} {n:>3} {str(recorded):>16} {audit.residual:>9}"
            f" {str(variant):>14} {audit.variant_residual:>9}"
        )
