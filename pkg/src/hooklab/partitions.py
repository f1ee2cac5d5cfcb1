"""Partitions, diagrams, hooks, Delta-sets and induced flaggings.

Partitions are plain tuples of weakly decreasing positive integers; trailing
zeros are stripped on construction, so tuple equality is partition equality.
Boxes are (row, col) pairs in matrix convention and diagrams are frozensets
of boxes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BoxOutsideShape,
    CutoffTooSmall,
    NotAPartition,
    NotContained,
    NotExtensible,
    ParseError,
)

Partition = tuple
Box = tuple
Diagram = frozenset

EMPTY: Partition = ()


def normalize_partition(parts) -> Partition:
    """Validate weak decrease / nonnegativity and strip trailing zeros."""
    parts = tuple(parts)
    for v in parts:
        if not isinstance(v, int) or v < 0:
            raise NotAPartition(f"entry {v!r} is not a nonnegative integer")
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise NotAPartition(f"entries increase: {a} < {b}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def parse_partition(text: str) -> Partition:
    """Parse 'a,b,c' (optionally bracketed, possibly empty) into a partition."""
    s = text.strip()
    if s and s[0] in "([" and s[-1] in ")]":
        s = s[1:-1].strip()
    if not s:
        return EMPTY
    entries = []
    for token in s.split(","):
        token = token.strip()
        try:
            entries.append(int(token))
        except ValueError:
            raise ParseError(f"bad partition entry {token!r}") from None
    for v in entries:
        if v <= 0:
            raise NotAPartition(f"entry {v} is not positive")
    for a, b in zip(entries, entries[1:]):
        if a < b:
            raise NotAPartition(f"entries increase: {a} < {b}")
    return tuple(entries)


def format_partition(p: Partition) -> str:
    return ",".join(str(v) for v in p)


def parse_shape(text: str) -> tuple[Partition, Partition]:
    """Parse 'lam/mu' (mu omitted means the empty partition)."""
    if text.count("/") > 1:
        raise ParseError(f"bad shape {text!r}")
    outer, _, inner = text.partition("/")
    lam = parse_partition(outer)
    mu = parse_partition(inner)
    return lam, mu


def format_shape(lam: Partition, mu: Partition) -> str:
    return format_partition(lam) + ("/" + format_partition(mu) if mu else "")


def part(p: Partition, i: int) -> int:
    """The i-th entry (1-indexed), zero beyond the length."""
    if i < 1:
        raise IndexError("partition entries are 1-indexed")
    return p[i - 1] if i <= len(p) else 0


def size(p: Partition) -> int:
    return sum(p)


def conjugate(p: Partition) -> Partition:
    if not p:
        return EMPTY
    return tuple(sum(1 for v in p if v >= k) for k in range(1, p[0] + 1))


def contains(lam: Partition, mu: Partition) -> bool:
    return len(mu) <= len(lam) and all(m <= l for l, m in zip(lam, mu))


def young_diagram(lam: Partition) -> Diagram:
    return frozenset((i, j) for i in range(1, len(lam) + 1) for j in range(1, lam[i - 1] + 1))


def skew_cells(lam: Partition, mu: Partition) -> Diagram:
    if not contains(lam, mu):
        raise NotContained(f"{mu} is not contained in {lam}")
    return frozenset(
        (i, j)
        for i in range(1, len(lam) + 1)
        for j in range(part(mu, i) + 1, lam[i - 1] + 1)
    )


def skew_size(lam: Partition, mu: Partition) -> int:
    return size(lam) - size(mu)


def hook_cells(lam: Partition, c: Box) -> Diagram:
    i, j = c
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise BoxOutsideShape(f"box {c} is not in the diagram of {lam}")
    arm = {(i, k) for k in range(j, lam[i - 1] + 1)}
    leg = {(k, j) for k in range(i, len(lam) + 1) if lam[k - 1] >= j}
    return frozenset(arm | leg)


def hook_length(lam: Partition, c: Box) -> int:
    return len(hook_cells(lam, c))


def delta_contains(p: Partition, d: int) -> bool:
    """Membership of d in the set {p_i - i | i >= 1}.

    Beyond the length of p the values p_i - i are just -i, so indices up to
    max(len(p), -d) decide membership.
    """
    bound = max(len(p), -d)
    return any(part(p, i) - i == d for i in range(1, bound + 1))


def er_set(mu: Partition) -> set[int]:
    """Rows (1-indexed) whose entry may be incremented; always finite."""
    return {k for k in range(1, len(mu) + 2) if k == 1 or part(mu, k) != part(mu, k - 1)}


def add_cell(mu: Partition, k: int) -> Partition:
    if k not in er_set(mu):
        raise NotExtensible(f"row {k} of {mu} cannot be extended")
    padded = list(mu) + [0] * (k - len(mu))
    padded[k - 1] += 1
    return normalize_partition(padded)


def cover_extensions(mu: Partition, lam: Partition) -> list[Partition]:
    """All nu with mu covered by nu inside lam, ordered by the extended row."""
    if not contains(lam, mu):
        raise NotContained(f"{mu} is not contained in {lam}")
    out = []
    for k in sorted(er_set(mu)):
        nu = add_cell(mu, k)
        if contains(lam, nu):
            out.append(nu)
    return out


def flagging_value(lam: Partition, mu: Partition, i: int) -> int:
    """b_i = max{k >= 0 | lam_k - k >= mu_i - i}, with lam_0 = +infinity."""
    return flagging_prefix(lam, mu, i)[-1]


def flagging_prefix(lam: Partition, mu: Partition, length: int) -> tuple:
    """(b_1, ..., b_length) for the flagging induced by lam/mu.

    lam_k - k is strictly decreasing and mu_i - i too, so the qualifying
    sets are prefixes and the maxima are found by one monotone scan.
    """
    out = []
    k = 0
    for i in range(1, length + 1):
        target = part(mu, i) - i
        while part(lam, k + 1) - (k + 1) >= target:
            k += 1
        out.append(k)
    return tuple(out)


@dataclass(frozen=True)
class SkewContext:
    """Cached profile of a pair (lam, mu): the sequences l_i, m_i, their
    conjugate versions and the induced flagging, all for i in [n]."""

    lam: Partition
    mu: Partition
    n: int
    ell: tuple
    m: tuple
    ell_t: tuple
    m_t: tuple
    b: tuple


def default_cutoff(lam: Partition, mu: Partition) -> int:
    return max(len(lam), len(mu)) + 1


def skew_context(lam: Partition, mu: Partition, n: int) -> SkewContext:
    if n < 1 or part(lam, n) != 0 or part(mu, n) != 0:
        raise CutoffTooSmall(f"cutoff {n} does not clear both {lam} and {mu}")
    lam_t = conjugate(lam)
    mu_t = conjugate(mu)
    return SkewContext(
        lam=lam,
        mu=mu,
        n=n,
        ell=tuple(part(lam, i) - i for i in range(1, n + 1)),
        m=tuple(part(mu, i) - i for i in range(1, n + 1)),
        ell_t=tuple(part(lam_t, i) - i for i in range(1, n + 1)),
        m_t=tuple(part(mu_t, i) - i for i in range(1, n + 1)),
        b=flagging_prefix(lam, mu, n),
    )


# ---------------------------------------------------------------------------
# enumeration helpers


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions with at most `rows` parts, each at most `cols`."""
    out = [EMPTY]

    def rec(prefix: list, maxpart: int):
        if len(prefix) == rows:
            return
        for v in range(1, maxpart + 1):
            cur = prefix + [v]
            out.append(tuple(cur))
            rec(cur, v)

    rec([], cols)
    out.sort(key=lambda p: (size(p), p))
    return out


def subpartitions(lam: Partition) -> list[Partition]:
    """All mu contained in lam, ordered by (size, entries)."""
    out = []

    def rec(i: int, prev: int, acc: tuple):
        if i == len(lam):
            out.append(acc)
            return
        rec(len(lam), 0, acc)  # all remaining rows zero
        for v in range(1, min(lam[i], prev) + 1):
            rec(i + 1, v, acc + (v,))

    if not lam:
        return [EMPTY]
    rec(0, lam[0], EMPTY)
    out.sort(key=lambda p: (size(p), p))
    return out


def partitions_of(n: int) -> list[Partition]:
    """All partitions of exactly n."""
    out = []

    def rec(remaining: int, maxpart: int, acc: tuple):
        if remaining == 0:
            out.append(acc)
            return
        for v in range(min(maxpart, remaining), 0, -1):
            rec(remaining - v, v, acc + (v,))

    rec(n, n, EMPTY)
    return out


def partitions_up_to(n: int) -> list[Partition]:
    """All partitions of size at most n, ordered by (size, entries)."""
    out = []
    for k in range(n + 1):
        out.extend(partitions_of(k))
    out.sort(key=lambda p: (size(p), p))
    return out
