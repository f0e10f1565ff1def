"""Walkthrough: replaying a schedule on Hirzebruch surfaces.

The meridian state machine tracks only what the group theory needs: the
surface index, the meridian of the exceptional section, and one meridian
word per auxiliary fiber.  Raising steps multiply the chosen fiber's word
by the exceptional meridian on the left; lowering steps change nothing.
The final words are the relators whose quotient produces the cyclic
kernel, so the simulator and the Smith-normal-form kernel must agree.
"""

from curvegroups import (
    General,
    Special,
    cyclic_quotient_order,
    replay,
    smith_normal_form,
    trace_lines,
)
from curvegroups.meridians import max_index

spec = General((2, 1))
state = replay(spec)
print(f"replay of general(2,1) (kernel order {spec.kernel_order}):")
for line in trace_lines(state):
    print(" ", line)
print("  max index reached:", max_index(state))

# The raised words have the closed form (b a1 a2)^(n_i) a_i.  Setting the
# lowering generator b to 1 and abelianizing gives the kernel order.
words = state.words()
rows = [
    [words[f"Q{i}"].exponent_sum(f"a{j}") for j in (1, 2)]
    for i in (1, 2)
]
factors = smith_normal_form(rows)
order = 1
for f in factors:
    order *= f
print("  relator exponent rows:", rows)
print("  invariant factors:", factors, "-> quotient order", order)
assert order == cyclic_quotient_order(spec.counts) == spec.kernel_order

# The single-fiber special case: everything happens on one line L, whose
# meridian climbs to a^(n+1) during the raising phase and then freezes.
state = replay(Special(3))
print("\nreplay of special(3):")
for line in trace_lines(state):
    print(" ", line)
