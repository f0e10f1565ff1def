"""Walkthrough: smooth seeds stay cyclic under every construction.

A smooth irreducible curve of degree d has complement fundamental group
Z/d.  Applying any of the constructions multiplies the degree by the
kernel order N and, because the curve is irreducible and the group cyclic,
the new group is exactly Z/(d*N) -- the extension never splits when the
orders share a factor.  The price is singularities: each pass adds deep
tacnodes, as the bookkeeping below shows.
"""

from curvegroups import (
    General,
    Uludag,
    apply,
    audit_self_intersection,
    format_spec,
    h1_from_degrees,
    seed_smooth,
    split_test,
)

conic = seed_smooth(2)
print("seed:", conic)

# The classic first example: one raising fiber, one pass.
step = apply(conic, Uludag(1))
print("\nafter uludag(1):", step)
print("  a degree-4 curve with a node [2] and a tacnode [2,2], group Z/4")

# The same smooth conic pushed through a two-fiber schedule.
spec = General((1, 2))
curve = apply(conic, spec)
print(f"\nafter {format_spec(spec)}:", curve)

# The audit replays the degree computation against the singularity drops.
audit = audit_self_intersection(conic.degree, spec)
print(f"  audit: {curve.degree}^2 - drops = {audit.computed} = d^2 -> {audit.verdict}")

# Why Z/8 and not Z/4 (+) Z/2: the non-split test on first homology.
verdict = split_test(h1_from_degrees(conic.component_degrees), 1, spec.kernel_order)
print(f"  split test for the extension: {verdict}")

# Iterating stays inside the cyclic world, with ever deeper singularities.
curve = conic
for n in (1, 2, 3):
    curve = apply(curve, Uludag(n))
print("\nthree passes on the conic:", curve)
print("log:")
for entry in curve.log:
    print(f"  {entry.seq}: {entry.op} {entry.detail}")
