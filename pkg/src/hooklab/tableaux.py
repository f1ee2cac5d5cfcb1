"""Standard, semistandard and flagged semistandard tableaux.

A tableau is an immutable map from boxes to positive integers, stored as a
sorted tuple of ((row, col), value) pairs so that tableaux hash and compare
canonically.  Enumerations return canonically sorted lists (sorted by the
row-major reading word) so fixture files stay stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotStandard
from .partitions import (
    Box,
    Partition,
    contains,
    flagging_prefix,
    normalize_partition,
    part,
    skew_cells,
    skew_size,
)


@dataclass(frozen=True)
class Flagging:
    """Per-row entry bounds: an explicit prefix plus a tail rule.

    tail "identity" extends with b_i = i (the shape of every induced
    flagging beyond its prefix); tail "constant" repeats the last prefix
    value (uniform caps).
    """

    prefix: tuple
    tail: str = "identity"

    def __post_init__(self):
        if self.tail not in ("identity", "constant"):
            raise ValueError(f"unknown tail rule {self.tail!r}")
        if self.tail == "constant" and not self.prefix:
            raise ValueError("constant tail needs a nonempty prefix")

    def bound(self, i: int) -> int:
        if i < 1:
            raise IndexError("rows are 1-indexed")
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        return i if self.tail == "identity" else self.prefix[-1]

    def is_weakly_increasing(self) -> bool:
        pairs = zip(self.prefix, self.prefix[1:])
        if any(a > b for a, b in pairs):
            return False
        if self.tail == "identity" and self.prefix:
            return self.prefix[-1] <= len(self.prefix) + 1
        return True


def uniform_flagging(cap: int) -> Flagging:
    return Flagging(prefix=(cap,), tail="constant")


def induced_flagging(lam: Partition, mu: Partition) -> Flagging:
    """The flagging induced by lam/mu; b_i = i holds beyond the prefix."""
    length = max(len(lam), len(mu), 1)
    return Flagging(prefix=flagging_prefix(lam, mu, length), tail="identity")


class Tableau:
    """An immutable filling of a finite set of boxes."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        if isinstance(entries, dict):
            items = tuple(sorted(entries.items()))
        else:
            items = tuple(sorted(entries))
        object.__setattr__(self, "entries", items)

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __len__(self):
        return len(self.entries)

    def items(self):
        return self.entries

    def boxes(self) -> frozenset:
        return frozenset(b for b, _ in self.entries)

    def get(self, box: Box) -> int | None:
        d = dict(self.entries)
        return d.get(box)

    def reading_word(self) -> tuple:
        return tuple(v for _, v in self.entries)

    def to_rows(self) -> list[list[int | None]]:
        """Row arrays with None for absent (skew) cells; JSON-ready."""
        if not self.entries:
            return []
        d = dict(self.entries)
        max_row = max(i for (i, _), _ in self.entries)
        rows: list[list[int | None]] = []
        for i in range(1, max_row + 1):
            cols = [j for (r, j) in d if r == i]
            if not cols:
                rows.append([])
                continue
            rows.append([d.get((i, j)) for j in range(1, max(cols) + 1)])
        return rows

    @classmethod
    def from_rows(cls, rows) -> "Tableau":
        entries = {}
        for i, row in enumerate(rows, start=1):
            for j, v in enumerate(row, start=1):
                if v is not None:
                    entries[(i, j)] = v
        return cls(entries)

    def __repr__(self):
        return f"Tableau({self.to_rows()})"


def shape_of_straight_tableau(t: Tableau) -> Partition | None:
    """The partition mu with boxes(t) = Y(mu), or None if not left-aligned."""
    rows: dict[int, set] = {}
    for (i, j), _ in t.items():
        rows.setdefault(i, set()).add(j)
    lengths = []
    for i in range(1, len(rows) + 1):
        cols = rows.get(i)
        if cols is None or cols != set(range(1, len(cols) + 1)):
            return None
        lengths.append(len(cols))
    try:
        return normalize_partition(lengths)
    except Exception:
        return None


def is_standard(t: Tableau) -> bool:
    """Entries are a bijection onto [n] and strictly increase along rows and columns."""
    values = sorted(v for _, v in t.items())
    if values != list(range(1, len(t) + 1)):
        return False
    d = dict(t.items())
    for (i, j), v in t.items():
        right = d.get((i, j + 1))
        below = d.get((i + 1, j))
        if right is not None and not v < right:
            return False
        if below is not None and not v < below:
            return False
    return True


def is_semistandard(t: Tableau) -> bool:
    """Rows weakly increase, columns strictly increase; entries positive."""
    d = dict(t.items())
    for (i, j), v in t.items():
        if v < 1:
            return False
        right = d.get((i, j + 1))
        below = d.get((i + 1, j))
        if right is not None and not v <= right:
            return False
        if below is not None and not v < below:
            return False
    return True


def enumerate_syt(lam: Partition, mu: Partition) -> list[Tableau]:
    """All standard tableaux of shape lam/mu, sorted by reading word.

    Non-containment yields the empty list.  Tableaux are generated by
    recursively removing the box holding the maximal entry, which must be
    an outer corner of the current shape.
    """
    return sorted(iter_syt(lam, mu), key=lambda t: t.reading_word())


def iter_syt(lam: Partition, mu: Partition):
    """Unordered generator over SYT(lam/mu); use enumerate_syt for canonical order."""
    if not contains(lam, mu):
        return
    n = skew_size(lam, mu)
    shape = list(lam)
    assignment: dict[Box, int] = {}

    def rec(k: int):
        if k == 0:
            yield Tableau(assignment)
            return
        for i in range(len(shape)):
            v = shape[i]
            below = shape[i + 1] if i + 1 < len(shape) else 0
            if v > below and v > part(mu, i + 1):
                shape[i] = v - 1
                assignment[(i + 1, v)] = k
                yield from rec(k - 1)
                del assignment[(i + 1, v)]
                shape[i] = v

    yield from rec(n)


def count_syt(lam: Partition, mu: Partition) -> int:
    return sum(1 for _ in iter_syt(lam, mu))


def content_word(t: Tableau) -> tuple:
    """(c_T(1), ..., c_T(n)) where c_T(k) = col - row of the box holding k."""
    if not is_standard(t):
        raise NotStandard("content words are defined for standard tableaux")
    by_value = {v: (j - i) for (i, j), v in t.items()}
    return tuple(by_value[k] for k in range(1, len(t) + 1))


def delete_min_entry(t: Tableau) -> tuple[Tableau, Box]:
    """Remove the entry 1 and decrement the rest; returns (new tableau, freed box)."""
    if not is_standard(t) or len(t) == 0:
        raise NotStandard("expected a nonempty standard tableau")
    box1 = next(b for b, v in t.items() if v == 1)
    return Tableau({b: v - 1 for b, v in t.items() if v != 1}), box1


def enumerate_fssyt(mu: Partition, b: Flagging) -> list[Tableau]:
    """All semistandard tableaux of shape mu with row-i entries at most b(i)."""
    boxes = sorted(skew_cells(mu, ()), key=lambda c: (c[0], c[1]))
    out: list[Tableau] = []
    entries: dict[Box, int] = {}

    def rec(pos: int):
        if pos == len(boxes):
            out.append(Tableau(entries))
            return
        i, j = boxes[pos]
        lo = 1
        if (i, j - 1) in entries:
            lo = max(lo, entries[(i, j - 1)])
        if (i - 1, j) in entries:
            lo = max(lo, entries[(i - 1, j)] + 1)
        for v in range(lo, b.bound(i) + 1):
            entries[(i, j)] = v
            rec(pos + 1)
        entries.pop((i, j), None)

    rec(0)
    out.sort(key=lambda t: t.reading_word())
    return out


def enumerate_ssyt(mu: Partition, cap: int) -> list[Tableau]:
    """All semistandard tableaux of shape mu with entries at most cap."""
    return enumerate_fssyt(mu, uniform_flagging(cap))
