"""Walkthrough: the exact group-theory kernel.

Everything upstream rests on three exact-integer facts computed here:
free reduction of words, Smith normal form of relator exponent matrices,
and the resulting abelianizations.  The local group at an ordinary k-fold
point of smooth branches is Z (+) F_(k-1), presented on a central
generator (the product of all branch meridians) commuting with k-1 of
them; killing the relators a^(n_i) a_i collapses it to a cyclic group of
order sum(n)+1, which is the kernel every construction extends by.
"""

from curvegroups import (
    Word,
    abelianization,
    cyclic_quotient_order,
    free_reduce,
    local_group,
    quotient,
    smith_normal_form,
)

w = Word.parse("a b^-1 b a^-1 a b")
print(f"free reduction: {w} -> {free_reduce(w)}")

p = local_group(3)
print("\nlocal group at an ordinary triple point:", p)
print("abelianization:", abelianization(p))

# Adjoin the schedule relators for counts (1, 2): in homology the first
# branch meridian rewrites as a * (a2 a3)^-1, so the three relation rows are
rows = [[2, -1, -1], [2, 1, 0], [2, 0, 1]]
print("\nrelation rows for counts (1, 2, ...):", rows[:1], "...")
print("invariant factors:", smith_normal_form(rows))
print("kernel order for counts (1,2,2):", cyclic_quotient_order((1, 2, 2)))

# The same collapse seen at the presentation level for two branches:
q = quotient(local_group(2), [Word.parse("a^2 a2^-1"), Word.parse("a a2")])
print("\ntwo-branch quotient:", q)
print("abelianization:", abelianization(q), "(cyclic of order 1+1+1)")

# Invariant factors classify any finitely generated abelian group exactly.
m = [[6, 4, 2], [2, 8, 4], [0, 2, 10]]
print("\ninvariant factors of", m, "->", smith_normal_form(m))
