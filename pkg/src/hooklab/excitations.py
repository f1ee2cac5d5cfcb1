"""Excited moves, excitation sets and the flagged-tableau correspondence.

The excitation set of lam/mu is computed by breadth-first closure under
excited moves, never through the tableau bijection: the bijection is then
an independently testable statement rather than an assumption.  Once a box
leaves Y(lam) it can never return (moves only travel southeast), so the
search may prune any move whose target falls outside Y(lam).
"""

from __future__ import annotations

from collections import deque

from .algebra import MPoly, xy_binomial
from .errors import MoveBlocked, NonpositiveBox, NotAnExcitation, NotSemistandard
from .partitions import Box, Diagram, Partition, contains, part, young_diagram
from .tableaux import Tableau, is_semistandard, shape_of_straight_tableau


def excited_move(d: Diagram, c: Box) -> Diagram:
    """Replace box c by its southeastern neighbour.

    Requires c in d and none of the eastern, southern and southeastern
    neighbours of c present.
    """
    i, j = c
    if c not in d:
        raise MoveBlocked(f"box {c} is not in the diagram")
    for nb in ((i, j + 1), (i + 1, j), (i + 1, j + 1)):
        if nb in d:
            raise MoveBlocked(f"move at {c} blocked by {nb}")
    return frozenset(d - {c} | {(i + 1, j + 1)})


def _movable(d: frozenset, c: Box) -> bool:
    i, j = c
    return (
        (i, j + 1) not in d and (i + 1, j) not in d and (i + 1, j + 1) not in d
    )


def enumerate_excitations(lam: Partition, mu: Partition) -> list[Diagram]:
    """The set E(lam/mu) as a canonically sorted list of diagrams."""
    if not contains(lam, mu):
        return []
    start = tuple(sorted(young_diagram(mu)))
    seen = {start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        boxes = frozenset(state)
        for c in state:
            i, j = c
            if part(lam, i + 1) < j + 1:  # target would leave Y(lam)
                continue
            if _movable(boxes, c):
                nxt = tuple(sorted(boxes - {c} | {(i + 1, j + 1)}))
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return [frozenset(s) for s in sorted(seen)]


def excitation_of_tableau(t: Tableau) -> Diagram:
    """The diagram D(T): box (i, j) moves to row T(i, j) along its diagonal."""
    mu = shape_of_straight_tableau(t)
    if mu is None or not is_semistandard(t):
        raise NotSemistandard("expected a semistandard tableau of straight shape")
    return frozenset((v, v + j - i) for (i, j), v in t.items())


def tableau_of_excitation(e: Diagram, mu: Partition) -> Tableau:
    """The unique semistandard T of shape mu with D(T) = e.

    On each diagonal, the boxes of Y(mu) (by row) are matched to the boxes
    of e (by row); the matched row becomes the entry.  Move sequences are
    not replayed because their order is not unique.
    """
    by_diag: dict[int, list[int]] = {}
    for (i, j) in e:
        by_diag.setdefault(j - i, []).append(i)
    for rows in by_diag.values():
        rows.sort()
    entries: dict[Box, int] = {}
    taken: dict[int, int] = {d: 0 for d in by_diag}
    for i in range(1, len(mu) + 1):
        for j in range(1, part(mu, i) + 1):
            d = j - i
            pos = taken.get(d, 0)
            rows = by_diag.get(d, [])
            if pos >= len(rows):
                raise NotAnExcitation(f"diagonal {d} of the diagram is too small")
            entries[(i, j)] = rows[pos]
            taken[d] = pos + 1
    if any(taken[d] != len(by_diag[d]) for d in by_diag):
        raise NotAnExcitation("diagram has boxes on diagonals not used by the shape")
    t = Tableau(entries)
    if not is_semistandard(t):
        raise NotAnExcitation("diagonal matching is not semistandard")
    return t


def weight_factors(e: Diagram) -> tuple:
    """The sorted (i, j) index pairs of the binomials x_i + y_j in the weight."""
    for (i, j) in e:
        if i < 1 or j < 1:
            raise NonpositiveBox(f"box {(i, j)} has a coordinate below 1")
    return tuple(sorted(e))


def excitation_weight(e: Diagram) -> MPoly:
    """The product of x_i + y_j over the boxes (i, j) of the diagram."""
    out = MPoly.const(1)
    for (i, j) in weight_factors(e):
        out = out * xy_binomial(i, j)
    return out
