"""
Exact partition values and the four ways of combining them.

Two kinds of value live here:

    Partition        weakly decreasing positive parts, with a multiplicity view
    IncrementVector  any finite integer sequence (growth steps, componentwise results)

Union and multiset difference work on multiplicities; componentwise addition and
subtraction work position by position with zero padding on the right.
"""

import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import zip_longest
from typing import Iterable, Mapping

from .errors import NotAPartition, OutOfRange, PartitionSyntaxError, UnderflowAtPart


# Sizes and parts must stay inside int64 so series coefficients and exported
# values never need widening
INT64_MAX = 2**63 - 1
MAX_LENGTH = 10**6


def _alternating_sum(entries: Iterable[int]) -> int:
    total = 0
    for index, value in enumerate(entries):
        total += value if index % 2 == 0 else -value
    return total


@dataclass(frozen=True)
class IncrementVector:
    """Finite integer sequence; entries may be negative, zero or unsorted."""
    entries: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    @property
    def total(self) -> int:
        return sum(self.entries)

    @property
    def alt_size(self) -> int:
        return _alternating_sum(self.entries)

    def stripped(self) -> tuple[int, ...]:
        """Entries with trailing zeros removed."""
        entries = list(self.entries)
        while entries and entries[-1] == 0:
            entries.pop()
        return tuple(entries)

    def is_partition(self) -> bool:
        entries = self.stripped()
        if any(x <= 0 for x in entries):
            return False
        return all(a >= b for a, b in zip(entries, entries[1:]))

    def to_partition(self) -> "Partition":
        """Convert after stripping trailing zeros; a zero before a positive entry fails."""
        if not self.is_partition():
            raise NotAPartition(self.entries)
        return Partition(self.stripped())

    def __add__(self, other):
        return comp_add(self, other)

    def __sub__(self, other):
        return comp_sub(self, other)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.entries) + ")"


@dataclass(frozen=True)
class Partition:
    """
    Weakly decreasing sequence of positive integers.

    The multiplicity view is derived from the parts and cached; both views always
    describe the same multiset.
    """
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise NotAPartition(parts, "parts must be positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise NotAPartition(parts, "parts must be weakly decreasing")
        if sum(parts) > INT64_MAX:
            raise OutOfRange("size", sum(parts), f"<= {INT64_MAX}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def from_multiplicities(cls, multiplicities: Mapping[int, int]) -> "Partition":
        for part in sorted(multiplicities, reverse=True):
            if multiplicities[part] < 0:
                raise UnderflowAtPart(part)
        total = sum(part * count for part, count in multiplicities.items())
        if total > INT64_MAX:
            raise OutOfRange("size", total, f"<= {INT64_MAX}")
        length = sum(multiplicities.values())
        if length > MAX_LENGTH:
            raise OutOfRange("length", length, f"<= {MAX_LENGTH}")
        parts: list[int] = []
        for part in sorted(multiplicities, reverse=True):
            count = multiplicities[part]
            parts.extend([part] * count)
        return cls(tuple(parts))

    @cached_property
    def multiplicities(self) -> dict[int, int]:
        """m_i for every part i that occurs."""
        return dict(Counter(self.parts))

    def multiplicity(self, part: int) -> int:
        return self.multiplicities.get(part, 0)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def alt_size(self) -> int:
        return _alternating_sum(self.parts)

    @property
    def smallest(self) -> int | None:
        return self.parts[-1] if self.parts else None

    def as_vector(self) -> IncrementVector:
        return IncrementVector(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __or__(self, other: "Partition") -> "Partition":
        return union(self, other)

    def __add__(self, other):
        return comp_add(self, other)

    def __sub__(self, other):
        return comp_sub(self, other)

    def to_json(self) -> dict:
        return {
            "parts": list(self.parts),
            "size": self.size,
            "length": self.length,
            "alt_size": self.alt_size,
        }

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")" if self.parts else "∅"


EMPTY = Partition()


def canonical_key(lam: Partition) -> tuple:
    """Ascending by size, then lexicographically descending parts."""
    return (lam.size, tuple(-p for p in lam.parts))


def canonical_order(items: Iterable[Partition]) -> list[Partition]:
    return sorted(items, key=canonical_key)


# Operations

def size(lam: Partition) -> int:
    return lam.size


def alt_size(v: Partition | IncrementVector | Iterable[int]) -> int:
    """Alternating sum, first entry with positive sign."""
    if isinstance(v, (Partition, IncrementVector)):
        return v.alt_size
    return _alternating_sum(v)


def union(lam: Partition, mu: Partition) -> Partition:
    """lam ⊔ mu: add multiplicities."""
    counts = Counter(lam.multiplicities)
    counts.update(mu.multiplicities)
    return Partition.from_multiplicities(counts)


def multiset_diff(lam: Partition, mu: Partition) -> Partition:
    """lam minus mu as multisets; every part of mu must occur often enough in lam."""
    counts = dict(lam.multiplicities)
    for part in sorted(mu.multiplicities):
        remaining = counts.get(part, 0) - mu.multiplicities[part]
        if remaining < 0:
            raise UnderflowAtPart(part)
        counts[part] = remaining
    return Partition.from_multiplicities(counts)


def _entries(v) -> tuple[int, ...]:
    if isinstance(v, Partition):
        return v.parts
    if isinstance(v, IncrementVector):
        return v.entries
    return tuple(v)


def comp_add(a, b) -> IncrementVector:
    """Componentwise sum, missing entries read as 0."""
    return IncrementVector(
        tuple(x + y for x, y in zip_longest(_entries(a), _entries(b), fillvalue=0))
    )


def comp_sub(a, b) -> IncrementVector:
    """Componentwise difference, missing entries read as 0."""
    return IncrementVector(
        tuple(x - y for x, y in zip_longest(_entries(a), _entries(b), fillvalue=0))
    )


# Text formats

_TOKEN = re.compile(r"\s*(?:(\d+)(?:\^(\d+))?)")
_COMMA_ITEM = re.compile(r"\s*(\d+)\s*")


def parse_partition(text: str) -> Partition:
    """
    Parse "11,9,7" (comma list, any order) or "1^4 3^2 7^3 9 11" (multiplicity notation).

    Empty text, "∅" and "()" all denote the empty partition.
    """
    stripped = text.strip()
    if stripped in ("", "∅", "()"):
        return EMPTY
    if stripped.startswith("(") and stripped.endswith(")"):
        offset = text.index("(") + 1
        return _parse_comma_list(text, offset, len(text.rstrip()) - 1)
    if "," in stripped:
        return _parse_comma_list(text, 0, len(text))
    return _parse_multiplicity(text)


def _parse_comma_list(text: str, start: int, end: int) -> Partition:
    parts: list[int] = []
    pos = start
    while True:
        match = _COMMA_ITEM.match(text, pos, end)
        if match is None:
            raise PartitionSyntaxError(text, pos, "expected a part")
        parts.append(int(match.group(1)))
        pos = match.end()
        if pos == end:
            break
        if text[pos] != ",":
            raise PartitionSyntaxError(text, pos)
        pos += 1
    if any(p == 0 for p in parts):
        raise NotAPartition(parts, "parts must be positive")
    return Partition.from_parts(parts)


def _parse_multiplicity(text: str) -> Partition:
    counts: Counter = Counter()
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        match = _TOKEN.match(text, pos)
        if match is None:
            # point at the first non-space character
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise PartitionSyntaxError(text, bad)
        part = int(match.group(1))
        count = int(match.group(2)) if match.group(2) is not None else 1
        if part == 0:
            raise NotAPartition([0], "parts must be positive")
        counts[part] += count
        pos = match.end()
        if pos < end and not text[pos].isspace():
            raise PartitionSyntaxError(text, pos)
    return Partition.from_multiplicities(counts)


def format_partition(lam: Partition) -> str:
    """Canonical text form: comma list, empty string for ∅."""
    return ",".join(str(p) for p in lam.parts)


def format_multiplicity(lam: Partition) -> str:
    """Multiplicity notation with ascending parts, e.g. "1^4 3^2 7^3 9 11"."""
    tokens = []
    for part in sorted(lam.multiplicities):
        count = lam.multiplicities[part]
        tokens.append(str(part) if count == 1 else f"{part}^{count}")
    return " ".join(tokens)
