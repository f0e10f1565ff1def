"""Multiplicity-sequence bookkeeping for plane-curve singularities.

A singularity type is the ordered list of multiplicities of the point along
its resolution by blow-ups; an entry may also be a blow-down record that
nests a head multiplicity over a multiset of infinitely-near clusters.
Multiplicity-1 entries are legal in storage (they keep the
self-intersection audit exact for degree-1 bookkeeping) but are elided in
display; runs of three or more equal multiplicities print abbreviated, so
[2,2,2] displays as [2_3].
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

Entry = Union[int, "BlowdownEntry"]


@dataclass(frozen=True)
class BlowdownEntry:
    """Head multiplicity of a blown-down point plus the cluster types that
    sat on the contracted exceptional section (an unordered multiset)."""

    head: int
    clusters: tuple["SingularityType", ...]

    def __post_init__(self):
        if self.head < 2:
            raise ValueError(f"blow-down head multiplicity must be >= 2, got {self.head}")
        if not self.clusters:
            raise ValueError("blow-down entry needs at least one cluster")
        object.__setattr__(self, "clusters", tuple(sorted(self.clusters, key=type_key)))


@dataclass(frozen=True)
class SingularityType:
    entries: tuple[Entry, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("a singularity type needs at least one entry")
        for e in self.entries:
            if isinstance(e, BlowdownEntry):
                continue
            if not isinstance(e, int) or e < 1:
                raise ValueError(f"multiplicity entries must be integers >= 1, got {e!r}")

    def __str__(self) -> str:
        return format_type(self)

    def pretty(self) -> str:
        return format_type(self, elide_ones=True)


def type_key(t: SingularityType):
    return tuple(
        (0, e) if isinstance(e, int) else (1, e.head, tuple(type_key(c) for c in e.clusters))
        for e in t.entries
    )


def tacnode_type(branches: int, order: int = 0) -> SingularityType:
    """Type of a point where ``branches`` smooth branches share a tangent to
    contact ``order``: the multiplicity d repeated order+1 times.  Order 0
    is an ordinary d-fold point [d]."""
    if branches < 2:
        raise ValueError("a tacnode needs at least 2 branches")
    if order < 0:
        raise ValueError("tacnode order must be >= 0")
    return SingularityType((branches,) * (order + 1))


def blowdown_type(head: int, clusters: Sequence[SingularityType]) -> SingularityType:
    """Blow-down of the given clusters under a point of multiplicity ``head``.

    A single all-plain cluster [t1,...,ts] flattens to [head, t1,...,ts];
    several clusters stay nested, e.g. [6,(|[2,2]|,|[2]|)].
    """
    if head < 2:
        raise ValueError(f"blow-down head multiplicity must be >= 2, got {head}")
    clusters = tuple(clusters)
    if not clusters:
        raise ValueError("blow-down needs at least one cluster")
    if len(clusters) == 1 and all(isinstance(e, int) for e in clusters[0].entries):
        return SingularityType((head,) + clusters[0].entries)
    return SingularityType((BlowdownEntry(head, clusters),))


def drop(t: SingularityType) -> int:
    """Total self-intersection decrease from resolving the point: the sum of
    squared multiplicities, recursing through blow-down entries."""
    total = 0
    for e in t.entries:
        if isinstance(e, int):
            total += e * e
        else:
            total += e.head * e.head + sum(drop(c) for c in e.clusters)
    return total


# ---------------------------------------------------------------------------
# text form: [3,3]  [2_3]  [6,(|[2,2]|,|[2]|)]


def _format_run(value: int, count: int) -> str:
    return f"{value}_{count}" if count >= 3 else ",".join([str(value)] * count)


def format_type(t: SingularityType, elide_ones: bool = False) -> str:
    entries = t.entries
    if elide_ones:
        kept = tuple(e for e in entries if not isinstance(e, int) or e > 1)
        if kept:
            entries = kept
    parts: list[str] = []
    i = 0
    while i < len(entries):
        e = entries[i]
        if isinstance(e, int):
            j = i
            while j < len(entries) and entries[j] == e:
                j += 1
            parts.append(_format_run(e, j - i))
            i = j
        else:
            inner = ",".join(f"|{format_type(c, elide_ones)}|" for c in e.clusters)
            parts.append(f"{e.head},({inner})")
            i += 1
    return "[" + ",".join(parts) + "]"


class _TypeParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        return ValueError(f"bad singularity type at position {self.pos}: {message} in {self.text!r}")

    def skip_space(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])

    def parse_type(self) -> SingularityType:
        self.expect("[")
        entries: list[Entry] = []
        while True:
            value = self.integer()
            if self.peek() == "_":
                self.pos += 1
                count = self.integer()
                if count < 1:
                    raise self.error("run length must be >= 1")
                entries.extend([value] * count)
            elif self.peek() == ",":
                save = self.pos
                self.pos += 1
                if self.peek() == "(":
                    entries.append(self.parse_blowdown(value))
                else:
                    self.pos = save
                    entries.append(value)
            else:
                entries.append(value)
            if self.peek() == ",":
                self.pos += 1
                continue
            self.expect("]")
            return SingularityType(tuple(entries))

    def parse_blowdown(self, head: int) -> BlowdownEntry:
        self.expect("(")
        clusters = []
        while True:
            self.expect("|")
            clusters.append(self.parse_type())
            self.expect("|")
            if self.peek() == ",":
                self.pos += 1
                continue
            self.expect(")")
            return BlowdownEntry(head, tuple(clusters))


def parse_type(text: str) -> SingularityType:
    parser = _TypeParser(text)
    result = parser.parse_type()
    parser.skip_space()
    if parser.pos != len(text):
        raise parser.error("trailing characters")
    return result


# ---------------------------------------------------------------------------
# multisets of types


@dataclass(frozen=True)
class SingularityMultiset:
    """Multiset of singularity types in canonical sorted order."""

    types: tuple[SingularityType, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "types", tuple(sorted(self.types, key=type_key)))

    def __add__(self, other: "SingularityMultiset") -> "SingularityMultiset":
        return SingularityMultiset(self.types + other.types)

    def __len__(self) -> int:
        return len(self.types)

    def __iter__(self):
        return iter(self.types)

    def counts(self) -> list[tuple[SingularityType, int]]:
        counter = Counter(self.types)
        return [(t, counter[t]) for t in sorted(counter, key=type_key)]

    def __str__(self) -> str:
        if not self.types:
            return "{}"
        parts = []
        for t, n in self.counts():
            parts.append(t.pretty() if n == 1 else f"{n} x {t.pretty()}")
        return "{" + ", ".join(parts) + "}"


EMPTY_MULTISET = SingularityMultiset()


def multiset(types: Iterable[SingularityType]) -> SingularityMultiset:
    return SingularityMultiset(tuple(types))
