"""Classified group descriptors and the central-extension step.

A :class:`GroupDescriptor` records a fundamental group in one of a few
recognized shapes (finite cyclic, free, free abelian, an opaque finite
group, a direct sum of these) or, when no recognition rule applies, as an
unresolved tower of central extensions over a recognized base.

:func:`central_extend` applies the recognition rules for extending by a
cyclic group of order N; :func:`split_test` decides split/non-split from
first homology; :func:`propagate_properties` carries group properties
through a central extension, degrading to "unknown" whenever preservation
is not guaranteed.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from enum import Enum
from math import gcd, prod
import re

from .fpgroup import AbelianInvariants, Presentation, Word, commutator, generator


class GroupDescriptor:
    """Base class for recognized group forms."""

    __slots__ = ()

    def __str__(self) -> str:
        return format_descriptor(self)


@dataclass(frozen=True, eq=True)
class Cyclic(GroupDescriptor):
    """Finite cyclic group Z/order; Cyclic(1) is the trivial group."""

    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"cyclic order must be >= 1, got {self.order}")


@dataclass(frozen=True, eq=True)
class Free(GroupDescriptor):
    """Free group of the given rank; Free(1) is the canonical form of Z."""

    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("free rank must be >= 0")


@dataclass(frozen=True, eq=True)
class FreeAbelian(GroupDescriptor):
    """Free abelian group Z^rank; canonical only for rank >= 2."""

    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("free abelian rank must be >= 0")


@dataclass(frozen=True, eq=True)
class FiniteTagged(GroupDescriptor):
    """An otherwise-unclassified finite group of known order, optionally
    carrying a presentation."""

    order: int
    presentation: Presentation | None = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("finite group order must be >= 1")


@dataclass(frozen=True, eq=True)
class DirectSum(GroupDescriptor):
    """Direct sum of descriptors.  Build through :func:`direct_sum`, which
    flattens, merges, and sorts the parts into canonical form."""

    parts: tuple[GroupDescriptor, ...]

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("a direct sum needs at least two parts; use direct_sum()")


@dataclass(frozen=True, eq=True)
class Tower(GroupDescriptor):
    """Unresolved iterated central extension of ``base`` by cyclic groups of
    the listed kernel orders, innermost first."""

    base: GroupDescriptor
    kernels: tuple[int, ...]

    def __post_init__(self):
        if not self.kernels:
            raise ValueError("a tower needs at least one kernel order")
        if any(n < 2 for n in self.kernels):
            raise ValueError("tower kernel orders must all be >= 2")


TRIVIAL_GROUP = Cyclic(1)


def cyclic(order: int) -> Cyclic:
    return Cyclic(order)


def free(rank: int) -> GroupDescriptor:
    return canonical(Free(rank))


def free_abelian(rank: int) -> GroupDescriptor:
    return canonical(FreeAbelian(rank))


def _invariant_factor_chain(orders) -> tuple[int, ...]:
    """Recombine cyclic orders into the ascending invariant-factor chain,
    merging coprime factors (Z/a (+) Z/b = Z/ab when gcd(a,b) = 1)."""
    exponents: dict[int, list[int]] = {}
    for n in orders:
        n = int(n)
        p = 2
        while p * p <= n:
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                exponents.setdefault(p, []).append(e)
            p += 1
        if n > 1:
            exponents.setdefault(n, []).append(1)
    chain: list[int] = []
    for p, es in exponents.items():
        es.sort(reverse=True)
        for i, e in enumerate(es):
            if i < len(chain):
                chain[i] *= p**e
            else:
                chain.append(p**e)
    return tuple(reversed(chain))


def _sort_key(g: GroupDescriptor):
    rank = {Free: 0, FreeAbelian: 1, FiniteTagged: 2, Tower: 3, Cyclic: 4}[type(g)]
    if isinstance(g, (Free, FreeAbelian)):
        num = g.rank
    elif isinstance(g, (FiniteTagged, Cyclic)):
        num = g.order
    else:
        num = 0
    return (rank, num, format_descriptor(g))


def canonical(g: GroupDescriptor) -> GroupDescriptor:
    """Canonical form: trivial parts dropped, Z represented as Free(1),
    cyclic parts in invariant-factor form, sums flattened and sorted."""
    if isinstance(g, (Free, FreeAbelian)):
        if g.rank == 0:
            return TRIVIAL_GROUP
        if g.rank == 1:
            return Free(1)
        return g
    if isinstance(g, Tower):
        return Tower(canonical(g.base), g.kernels)
    if isinstance(g, DirectSum):
        return direct_sum(*g.parts)
    return g


def direct_sum(*parts: GroupDescriptor) -> GroupDescriptor:
    flat: list[GroupDescriptor] = []
    for p in parts:
        p = canonical(p)
        if isinstance(p, DirectSum):
            flat.extend(p.parts)
        else:
            flat.append(p)

    abelian_rank = 0
    free_parts: list[Free] = []
    cyclic_orders: list[int] = []
    rest: list[GroupDescriptor] = []
    for p in flat:
        if isinstance(p, Free) and p.rank == 1:
            abelian_rank += 1
        elif isinstance(p, FreeAbelian):
            abelian_rank += p.rank
        elif isinstance(p, Free):
            free_parts.append(p)
        elif isinstance(p, Cyclic):
            if p.order > 1:
                cyclic_orders.append(p.order)
        elif isinstance(p, FiniteTagged) and p.order == 1 and p.presentation is None:
            pass
        else:
            rest.append(p)

    out: list[GroupDescriptor] = list(free_parts) + list(rest)
    if abelian_rank == 1:
        out.append(Free(1))
    elif abelian_rank >= 2:
        out.append(FreeAbelian(abelian_rank))
    out.extend(Cyclic(d) for d in _invariant_factor_chain(cyclic_orders))

    if not out:
        return TRIVIAL_GROUP
    if len(out) == 1:
        return out[0]
    return DirectSum(tuple(sorted(out, key=_sort_key)))


def order_of(g: GroupDescriptor) -> int | None:
    """Group order when finite, else None."""
    if isinstance(g, Cyclic):
        return g.order
    if isinstance(g, FiniteTagged):
        return g.order
    if isinstance(g, (Free, FreeAbelian)):
        return 1 if g.rank == 0 else None
    if isinstance(g, DirectSum):
        orders = [order_of(p) for p in g.parts]
        return None if any(o is None for o in orders) else prod(orders)
    if isinstance(g, Tower):
        base = order_of(g.base)
        return None if base is None else base * prod(g.kernels)
    raise TypeError(f"unknown descriptor {g!r}")


# ---------------------------------------------------------------------------
# canonical string form


def format_descriptor(g: GroupDescriptor) -> str:
    """Canonical text form, e.g. ``Z/6``, ``F2 (+) Z/3``, ``Z^4 (+) Z/5``,
    ``Tower(Z/2; 2,3)``.  Inverse of :func:`parse_descriptor` on canonical
    descriptors."""
    if isinstance(g, Cyclic):
        return f"Z/{g.order}"
    if isinstance(g, Free):
        return "Z" if g.rank == 1 else f"F{g.rank}"
    if isinstance(g, FreeAbelian):
        return "Z" if g.rank == 1 else f"Z^{g.rank}"
    if isinstance(g, FiniteTagged):
        return f"Fin({g.order})"
    if isinstance(g, DirectSum):
        return " (+) ".join(format_descriptor(p) for p in g.parts)
    if isinstance(g, Tower):
        kernels = ",".join(str(n) for n in g.kernels)
        return f"Tower({format_descriptor(g.base)}; {kernels})"
    raise TypeError(f"unknown descriptor {g!r}")


def _split_summands(text: str) -> list[str]:
    parts = []
    depth = 0
    start = 0
    i = 0
    while i < len(text):
        # "(+)" is the sum separator, not a grouping paren
        if text[i : i + 3] == "(+)":
            if depth == 0:
                parts.append(text[start:i])
                start = i + 3
            i += 3
            continue
        c = text[i]
        if c == "(":
            depth += 1
        elif c == ")":
            depth -= 1
        i += 1
    parts.append(text[start:])
    return [p.strip() for p in parts]


def parse_descriptor(text: str) -> GroupDescriptor:
    """Parse the canonical text form back into a descriptor."""
    parts = _split_summands(text.strip())
    if len(parts) > 1:
        return direct_sum(*(parse_descriptor(p) for p in parts))
    atom = parts[0]
    if not atom:
        raise ValueError("empty group descriptor")
    if atom == "Z":
        return Free(1)
    m = re.fullmatch(r"Z/(\d+)", atom)
    if m:
        return Cyclic(int(m.group(1)))
    m = re.fullmatch(r"Z\^(\d+)", atom)
    if m:
        return canonical(FreeAbelian(int(m.group(1))))
    m = re.fullmatch(r"F(\d+)", atom)
    if m:
        return canonical(Free(int(m.group(1))))
    m = re.fullmatch(r"Fin\((\d+)\)", atom)
    if m:
        return FiniteTagged(int(m.group(1)))
    m = re.fullmatch(r"Tower\((.+);\s*([\d,\s]+)\)", atom, re.DOTALL)
    if m:
        base = parse_descriptor(m.group(1))
        kernels = tuple(int(s) for s in m.group(2).split(",") if s.strip())
        return Tower(base, kernels)
    raise ValueError(f"cannot parse group descriptor {atom!r}")


def to_presentation(g: GroupDescriptor) -> Presentation | None:
    """A presentation for fully recognized descriptors; None otherwise."""
    if isinstance(g, Cyclic):
        return Presentation(("x",), (Word.parse(f"x^{g.order}"),))
    if isinstance(g, Free):
        return Presentation(tuple(f"x{i}" for i in range(1, g.rank + 1)))
    if isinstance(g, FreeAbelian):
        names = tuple(f"x{i}" for i in range(1, g.rank + 1))
        rels = tuple(
            commutator(generator(a), generator(b))
            for i, a in enumerate(names)
            for b in names[i + 1 :]
        )
        return Presentation(names, rels)
    if isinstance(g, FiniteTagged):
        return g.presentation
    return None


# ---------------------------------------------------------------------------
# property flags


_TRISTATE_FIELDS = (
    "finite",
    "abelian",
    "cyclic",
    "solvable",
    "supersolvable",
    "polycyclic",
    "nilpotent",
    "virtually_nilpotent",
    "virtually_solvable",
)

# A -> B meaning: A true forces B true (all implications hold for arbitrary
# groups).  True flows forward, false flows backward.
_IMPLICATIONS = (
    ("cyclic", "abelian"),
    ("cyclic", "supersolvable"),
    ("abelian", "nilpotent"),
    ("nilpotent", "solvable"),
    ("nilpotent", "virtually_nilpotent"),
    ("supersolvable", "polycyclic"),
    ("polycyclic", "solvable"),
    ("solvable", "virtually_solvable"),
    ("virtually_nilpotent", "virtually_solvable"),
)


@dataclass(frozen=True)
class PropertyFlags:
    """Tri-state property record: True, False, or None (unknown).

    ``p_group`` holds the prime p when the group is known to be a finite
    p-group, else None.  ``nilpotency_class`` is an inclusive [lo, hi]
    interval, present only when nilpotency is known.  Construction closes
    the flags under standard implications (cyclic => abelian => nilpotent
    => solvable, ...) and rejects contradictory assignments.
    """

    finite: bool | None = None
    abelian: bool | None = None
    cyclic: bool | None = None
    solvable: bool | None = None
    supersolvable: bool | None = None
    polycyclic: bool | None = None
    nilpotent: bool | None = None
    virtually_nilpotent: bool | None = None
    virtually_solvable: bool | None = None
    p_group: int | None = None
    nilpotency_class: tuple[int, int] | None = None

    def __post_init__(self):
        state = {name: getattr(self, name) for name in _TRISTATE_FIELDS}
        if self.p_group is not None and self.p_group < 2:
            raise ValueError("p_group prime must be >= 2")
        if self.nilpotency_class is not None:
            lo, hi = self.nilpotency_class
            if not (0 <= lo <= hi):
                raise ValueError(f"bad nilpotency class interval {self.nilpotency_class}")
            object.__setattr__(self, "nilpotency_class", (int(lo), int(hi)))
            state["nilpotent"] = _join(state["nilpotent"], True, "nilpotent")
        if self.p_group is not None and state["finite"] is True:
            state["nilpotent"] = _join(state["nilpotent"], True, "nilpotent")
        changed = True
        while changed:
            changed = False
            for a, b in _IMPLICATIONS:
                if state[a] is True and state[b] is not True:
                    state[b] = _join(state[b], True, b)
                    changed = True
                if state[b] is False and state[a] is not False:
                    state[a] = _join(state[a], False, a)
                    changed = True
        for name in _TRISTATE_FIELDS:
            object.__setattr__(self, name, state[name])

    @property
    def nonabelian(self) -> bool | None:
        return None if self.abelian is None else not self.abelian

    def merged(self, other: "PropertyFlags") -> "PropertyFlags":
        """Combine two sound flag records; conflicting knowledge is an error."""
        kw = {}
        for f in fields(self):
            mine, theirs = getattr(self, f.name), getattr(other, f.name)
            if f.name == "nilpotency_class":
                if mine is not None and theirs is not None:
                    lo = max(mine[0], theirs[0])
                    hi = min(mine[1], theirs[1])
                    if lo > hi:
                        raise ValueError(f"incompatible nilpotency class intervals {mine} and {theirs}")
                    kw[f.name] = (lo, hi)
                else:
                    kw[f.name] = mine if mine is not None else theirs
            else:
                kw[f.name] = _join(mine, theirs, f.name)
        return PropertyFlags(**kw)

    def known(self) -> dict[str, object]:
        """The non-unknown flags, for display."""
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if v is not None:
                out[f.name] = v
        return out


def _join(a, b, name: str):
    if a is None:
        return b
    if b is None:
        return a
    if a != b:
        raise ValueError(f"contradictory values for property {name!r}: {a} vs {b}")
    return a


UNKNOWN_PROPS = PropertyFlags()


def _tri_all(values) -> bool | None:
    values = list(values)
    if any(v is False for v in values):
        return False
    if any(v is None for v in values):
        return None
    return True


def _prime_power(n: int) -> int | None:
    """The prime p when n = p^l with l >= 1, else None."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
        p += 1
    return n


_ALL_TRUE = PropertyFlags(
    finite=True,
    abelian=True,
    cyclic=True,
    solvable=True,
    supersolvable=True,
    polycyclic=True,
    nilpotent=True,
    virtually_nilpotent=True,
    virtually_solvable=True,
    nilpotency_class=(0, 0),
)


def props_from_descriptor(g: GroupDescriptor) -> PropertyFlags:
    """Sound property flags derivable from the descriptor shape alone."""
    g = canonical(g)
    if isinstance(g, Cyclic):
        if g.order == 1:
            return _ALL_TRUE
        return PropertyFlags(
            finite=True,
            cyclic=True,
            supersolvable=True,
            p_group=_prime_power(g.order),
            nilpotency_class=(1, 1),
            virtually_nilpotent=True,
        )
    if isinstance(g, Free):
        if g.rank == 1:
            return PropertyFlags(
                finite=False, cyclic=True, supersolvable=True, nilpotency_class=(1, 1)
            )
        return PropertyFlags(finite=False, virtually_solvable=False)
    if isinstance(g, FreeAbelian):
        return PropertyFlags(
            finite=False,
            abelian=True,
            cyclic=False,
            supersolvable=True,
            nilpotency_class=(1, 1),
        )
    if isinstance(g, FiniteTagged):
        if g.order == 1:
            return _ALL_TRUE
        p = _prime_power(g.order)
        kw: dict = {"finite": True, "p_group": p}
        if g.order >= 2 and _is_prime(g.order):
            kw.update(cyclic=True, supersolvable=True, nilpotency_class=(1, 1))
        return PropertyFlags(**kw)
    if isinstance(g, DirectSum):
        part_props = [props_from_descriptor(p) for p in g.parts]
        recognized = all(isinstance(p, (Cyclic, Free, FreeAbelian)) for p in g.parts)
        primes = {p.p_group for p in part_props}
        classes = [p.nilpotency_class for p in part_props]
        cls = None
        if all(c is not None for c in classes):
            cls = (max(c[0] for c in classes), max(c[1] for c in classes))
        return PropertyFlags(
            finite=_tri_all(p.finite for p in part_props),
            abelian=_tri_all(p.abelian for p in part_props),
            cyclic=False if recognized else None,
            solvable=_tri_all(p.solvable for p in part_props),
            supersolvable=_tri_all(p.supersolvable for p in part_props),
            polycyclic=_tri_all(p.polycyclic for p in part_props),
            nilpotent=_tri_all(p.nilpotent for p in part_props),
            virtually_nilpotent=_tri_all(p.virtually_nilpotent for p in part_props),
            virtually_solvable=_tri_all(p.virtually_solvable for p in part_props),
            p_group=primes.pop() if len(primes) == 1 else None,
            nilpotency_class=cls,
        )
    if isinstance(g, Tower):
        flags = props_from_descriptor(g.base)
        for n in g.kernels:
            flags = propagate_properties(flags, n)
        return flags
    raise TypeError(f"unknown descriptor {g!r}")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def propagate_properties(p: PropertyFlags, kernel_order: int) -> PropertyFlags:
    """Carry flags through a central extension by Z/kernel_order.

    Preserved true values: finite, solvable, supersolvable, polycyclic,
    nilpotent, and the virtual variants; being nonabelian (abelian=False)
    persists; a p-group stays one exactly when the kernel order is a power
    of the same p.  A nilpotency class interval [lo, hi] widens to
    [lo, hi+1].  Everything else degrades to unknown; unknown never
    upgrades.
    """
    if kernel_order < 2:
        raise ValueError("kernel order must be >= 2")
    cls = None
    if p.nilpotency_class is not None:
        cls = (p.nilpotency_class[0], p.nilpotency_class[1] + 1)
    keeps_p = p.p_group is not None and _prime_power(kernel_order) == p.p_group
    return PropertyFlags(
        finite=True if p.finite is True else None,
        abelian=False if p.abelian is False else None,
        cyclic=None,
        solvable=True if p.solvable is True else None,
        supersolvable=True if p.supersolvable is True else None,
        polycyclic=True if p.polycyclic is True else None,
        nilpotent=True if p.nilpotent is True else None,
        virtually_nilpotent=True if p.virtually_nilpotent is True else None,
        virtually_solvable=True if p.virtually_solvable is True else None,
        p_group=p.p_group if keeps_p else None,
        nilpotency_class=cls,
    )


# ---------------------------------------------------------------------------
# the central-extension step


def central_extend(
    g: GroupDescriptor,
    kernel_order: int,
    *,
    irreducible: bool = False,
    family_tag: str | None = None,
) -> GroupDescriptor:
    """Descriptor of a central extension of ``g`` by Z/kernel_order.

    First matching rule wins:

    a. cyclic group of an irreducible curve: stays cyclic, order multiplies;
    b. free group: H^2(F_k, Z/N) is trivial, so the extension splits off;
    c. free abelian group from the generic-lines family: splits off
       (certified by that family's direct computation, hence the tag gate);
    d. finite group of order coprime to the kernel: splits off;
    e. otherwise the extension stays unresolved as a tower.

    The rules agree wherever several apply, so order only fixes the
    canonical result.
    """
    if kernel_order < 2:
        raise ValueError("kernel order must be >= 2 (1 is the identity extension)")
    g = canonical(g)
    n = kernel_order
    if isinstance(g, Cyclic) and irreducible:
        return Cyclic(g.order * n)
    if isinstance(g, Free):
        return direct_sum(g, Cyclic(n))
    if isinstance(g, FreeAbelian) and family_tag == "generic-lines":
        return direct_sum(g, Cyclic(n))
    q = order_of(g)
    if q is not None and gcd(q, n) == 1:
        return direct_sum(g, Cyclic(n))
    if isinstance(g, Tower):
        return Tower(g.base, g.kernels + (n,))
    return Tower(g, (n,))


# ---------------------------------------------------------------------------
# split / non-split


class SplitKind(Enum):
    NON_SPLIT = "non-split"
    SPLITS_AS_DIRECT_SUM = "splits-as-direct-sum"
    UNKNOWN = "unknown"


RULE_SUMMANDS_NONCOPRIME = "summand-count-with-noncoprime-orders"
RULE_COPRIME_FINITE = "coprime-finite-order"
RULE_NONE = "no-rule-applies"


@dataclass(frozen=True)
class SplitVerdict:
    kind: SplitKind
    justification: str

    def __str__(self) -> str:
        return f"{self.kind.value} [{self.justification}]"


def split_test(h1: AbelianInvariants, components: int, kernel_order: int) -> SplitVerdict:
    """Split/non-split verdict for a central extension by Z/kernel_order of
    the group of a curve with ``components`` irreducible components and
    first homology ``h1``.

    Non-split when H1 has exactly ``components`` direct summands, each of
    order non-coprime to the kernel order (a free summand Z counts as
    non-coprime to everything: gcd(0, N) = N).  Splits as a direct sum in
    the coprime finite case, where the caller passes H1 only when the group
    itself is known finite abelian.  Otherwise unknown.
    """
    if components < 1:
        raise ValueError("component count must be >= 1")
    if kernel_order < 2:
        raise ValueError("kernel order must be >= 2")
    orders = [0] * h1.free_rank + list(h1.torsion)
    if len(orders) == components and all(gcd(d, kernel_order) > 1 for d in orders):
        return SplitVerdict(SplitKind.NON_SPLIT, RULE_SUMMANDS_NONCOPRIME)
    if h1.free_rank == 0 and gcd(prod(h1.torsion), kernel_order) == 1:
        return SplitVerdict(SplitKind.SPLITS_AS_DIRECT_SUM, RULE_COPRIME_FINITE)
    return SplitVerdict(SplitKind.UNKNOWN, RULE_NONE)
