"""Free-group words, finite presentations, and integer Smith normal form.

Words are sequences of signed generator letters; equality is equality of
freely reduced forms.  Presentations support quotienting by extra relators
and abelianization, which is computed exactly via the Smith normal form of
the relator exponent matrix.  All arithmetic uses Python's arbitrary
precision integers; there is no overflow regime.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

Letter = tuple[str, int]

_TERM_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def _validated_letters(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out = []
    for name, sign in letters:
        if not isinstance(name, str) or not name:
            raise ValueError(f"generator name must be a nonempty string, got {name!r}")
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")
        out.append((name, sign))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A word in a free group: an ordered tuple of (generator, sign) letters.

    Stored letters need not be reduced; two words compare equal when their
    freely reduced forms coincide.

    >>> Word.parse("a b b^-1 a") == Word.parse("a^2")
    True
    >>> str(Word.parse("a a b^-1"))
    'a^2 b^-1'
    """

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _validated_letters(self.letters))

    @classmethod
    def parse(cls, text: str) -> "Word":
        letters: list[Letter] = []
        for term in text.split():
            m = _TERM_RE.match(term)
            if m is None:
                raise ValueError(f"cannot parse word term {term!r}")
            name, exp = m.group(1), int(m.group(2) or 1)
            sign = 1 if exp >= 0 else -1
            letters.extend((name, sign) for _ in range(abs(exp)))
        return cls(tuple(letters))

    def __str__(self) -> str:
        parts = []
        i = 0
        while i < len(self.letters):
            name, sign = self.letters[i]
            j = i
            while j < len(self.letters) and self.letters[j] == (name, sign):
                j += 1
            exp = sign * (j - i)
            parts.append(name if exp == 1 else f"{name}^{exp}")
            i = j
        return " ".join(parts)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def __invert__(self) -> "Word":
        return self.inverse()

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(base.letters * abs(n))

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(free_reduce(self).letters)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return free_reduce(self).letters == free_reduce(other).letters

    def __hash__(self) -> int:
        return hash(free_reduce(self).letters)

    def generators(self) -> set[str]:
        return {g for g, _ in self.letters}

    def exponent_sum(self, generator: str) -> int:
        return sum(s for g, s in self.letters if g == generator)

    def substitute(self, assignments: dict[str, "Word"]) -> "Word":
        """Replace each named generator by a word (its inverse for sign -1)."""
        letters: list[Letter] = []
        for g, s in self.letters:
            if g in assignments:
                rep = assignments[g] if s == 1 else assignments[g].inverse()
                letters.extend(rep.letters)
            else:
                letters.append((g, s))
        return Word(tuple(letters))


EMPTY_WORD = Word()


def generator(name: str) -> Word:
    return Word(((name, 1),))


def commutator(a: Word, b: Word) -> Word:
    return a * b * a.inverse() * b.inverse()


def free_reduce(w: Word) -> Word:
    """Return the unique freely reduced word equal to ``w``.

    >>> str(free_reduce(Word.parse("a b b^-1 a^-1 a b")))
    'a b'
    >>> free_reduce(Word.parse("a a^-1")).letters
    ()
    """
    stack: list[Letter] = []
    for name, sign in w.letters:
        if stack and stack[-1][0] == name and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((name, sign))
    return Word(tuple(stack))


@dataclass(frozen=True)
class Presentation:
    """A finite group presentation: generator names plus relator words.

    Relators are stored freely reduced; relators that reduce to the empty
    word are dropped.  Every relator must use only declared generators.
    """

    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator names")
        declared = set(gens)
        reduced = []
        for rel in self.relators:
            rel = free_reduce(rel)
            unknown = rel.generators() - declared
            if unknown:
                raise ValueError(f"relator uses undeclared generators {sorted(unknown)}")
            if rel.letters:
                reduced.append(rel)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(reduced))

    def __str__(self) -> str:
        rels = ", ".join(str(r) for r in self.relators)
        return f"< {' '.join(self.generators)} | {rels} >"

    def exponent_matrix(self) -> list[list[int]]:
        """Relator exponent-sum matrix: one row per relator, one column per generator."""
        return [[rel.exponent_sum(g) for g in self.generators] for rel in self.relators]


def quotient(p: Presentation, extra: Sequence[Word]) -> Presentation:
    """Adjoin relators: presents the group of ``p`` modulo their normal closure."""
    return Presentation(p.generators, p.relators + tuple(extra))


@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant-factor form of a finitely generated abelian group.

    ``free_rank`` copies of Z plus cyclic summands Z/d1 (+) Z/d2 (+) ... with
    d1 | d2 | ... and every di >= 2.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        tor = tuple(int(d) for d in self.torsion)
        for d in tor:
            if d < 2:
                raise ValueError(f"torsion entries must be >= 2, got {d}")
        for a, b in zip(tor, tor[1:]):
            if b % a != 0:
                raise ValueError(f"torsion entries must form a divisibility chain: {a} does not divide {b}")
        object.__setattr__(self, "torsion", tor)

    @property
    def summand_count(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite."""
        return prod(self.torsion) if self.free_rank == 0 else None

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " (+) ".join(parts) if parts else "0"


def _smallest_nonzero(a: list[list[int]], t: int) -> tuple[int, int] | None:
    best = None
    for i in range(t, len(a)):
        for j in range(t, len(a[0])):
            if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... | dr of an integer matrix, r = rank.

    Exact arithmetic throughout; every returned factor is positive and
    divides the next.

    >>> smith_normal_form([[2, 4], [6, 8]])
    (2, 4)
    >>> smith_normal_form([[0, 0], [0, 0]])
    ()
    """
    a = []
    for row in matrix:
        out_row = []
        for x in row:
            if not isinstance(x, int):
                raise ValueError(f"matrix entries must be exact integers, got {x!r}")
            out_row.append(x)
        a.append(out_row)
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    if any(len(row) != ncols for row in a):
        raise ValueError("matrix rows must have equal length")
    factors: list[int] = []
    t = 0
    while t < min(nrows, ncols):
        pivot = _smallest_nonzero(a, t)
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            swapped = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    for j in range(t, ncols):
                        a[i][j] -= q * a[t][j]
                    if a[i][t]:
                        # remainder became the smaller pivot candidate
                        a[t], a[i] = a[i], a[t]
                        swapped = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for i in range(t, nrows):
                        a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        swapped = True
            if swapped:
                continue
            offender = None
            p = a[t][t]
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % p != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, ncols):
                a[t][j] += a[offender][j]
        if a[t][t] < 0:
            for j in range(t, ncols):
                a[t][j] = -a[t][j]
        factors.append(a[t][t])
        t += 1
    return tuple(factors)


def abelianization(p: Presentation) -> AbelianInvariants:
    """First homology of the presented group, via Smith normal form.

    >>> abelianization(Presentation(("a",), (Word.parse("a^5"),)))
    AbelianInvariants(free_rank=0, torsion=(5,))
    """
    if not p.generators:
        return AbelianInvariants(0, ())
    if not p.relators:
        return AbelianInvariants(len(p.generators), ())
    factors = smith_normal_form(p.exponent_matrix())
    free_rank = len(p.generators) - len(factors)
    return AbelianInvariants(free_rank, tuple(d for d in factors if d > 1))


# The k = 1 local group: a single smooth branch, infinite cyclic.
SINGLE_BRANCH_LOCAL_GROUP = Presentation(("a",), ())


def local_group(k: int) -> Presentation:
    """Local fundamental group at an ordinary k-fold point of smooth branches.

    Z (+) F_{k-1} presented on a central generator ``a`` and branch meridians
    ``a2`` .. ``ak``, with relators making ``a`` commute with each of them:

    >>> str(local_group(2))
    '< a a2 | a a2 a^-1 a2^-1 >'

    ``a`` equals the product of all k branch meridians in their cyclic order
    (see :func:`local_group_center`); the first branch meridian has been
    eliminated by that change of variables.
    """
    if k < 2:
        raise ValueError("local_group requires k >= 2 branches; the single-branch group is SINGLE_BRANCH_LOCAL_GROUP")
    center = generator("a")
    names = ("a",) + tuple(f"a{i}" for i in range(2, k + 1))
    relators = tuple(commutator(center, generator(n)) for n in names[1:])
    return Presentation(names, relators)


def local_group_center(k: int) -> tuple[str, tuple[str, ...]]:
    """The central generator of ``local_group(k)`` and the branch meridians
    (in counterclockwise order) whose product it equals."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return "a", tuple(f"a{i}" for i in range(1, k + 1))


def cyclic_quotient_order(counts: Sequence[int]) -> int:
    """Order of the abelianized quotient of Z (+) F_{k-1} by the relations
    a^{n_i} a_i, computed through :func:`smith_normal_form`.

    In the homology basis (a, a2, ..., ak) the eliminated first branch
    meridian rewrites as a - (a2 + ... + ak), so the relation rows are

        [n1 + 1, -1, ..., -1]  and  [n_i, 0, .., 1, .., 0]  for i >= 2.

    The result always equals sum(counts) + 1.

    >>> cyclic_quotient_order((1, 1))
    3
    """
    counts = tuple(int(n) for n in counts)
    if not counts:
        raise ValueError("at least one transformation count is required")
    if any(n < 1 for n in counts):
        raise ValueError(f"all counts must be >= 1, got {counts}")
    k = len(counts)
    rows = [[counts[0] + 1] + [-1] * (k - 1)]
    for i in range(1, k):
        row = [counts[i]] + [0] * (k - 1)
        row[i] = 1
        rows.append(row)
    factors = smith_normal_form(rows)
    if len(factors) != k:
        raise ArithmeticError("quotient is infinite; relation matrix lost rank")
    return prod(factors)
