"""Cycle structure of domino tableaux and moving through cycles.

Every domino covers exactly one cell with i+j odd (its pivot) and one
with i+j even.  Moving a domino keeps its pivot and swaps the even cell
for the opposite one on the same side of the pivot, when the label at
the blocking diagonal cell permits; dominos whose swap is blocked stay
put and form singleton closed cycles.  Labels are grouped into cycles by
chaining old and new positions, so that repositioning a whole cycle at
once yields another standard tableau.  Open cycles trade one boundary
cell of the shape for another; closed cycles fix the shape.

Pivot cells sit on the odd checkerboard class for both kinds; this is
the unique choice under which single-cycle moves match the left cell
partition of the group at small rank.

Extended open cycles of a same-shape pair chain open cycles of the two
tableaux through shared boundary cells until moving everything at once
changes both shapes identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .shapes import Cell
from .tableaux import Domino, DominoTableau, TableauPair, problems

_BIG = 10 ** 9


def _is_pivot(cell: Cell) -> bool:
    return (cell[0] + cell[1]) % 2 == 1


def _label_at(t: DominoTableau, cell: Cell) -> int:
    """Label at a cell; 0 outside the quadrant, huge when empty in-grid."""
    if cell[0] < 1 or cell[1] < 1:
        return 0
    got = t.cell_labels.get(cell)
    return _BIG if got is None else got


def alternate_position(t: DominoTableau, label: int) -> Domino:
    """New position of a domino under a cycle move; equals the old one
    when the move is blocked."""
    dom = t.domino(label)
    (a, b) = dom
    pivot, var = (a, b) if _is_pivot(a) else (b, a)
    (i, j) = pivot
    if var == (i, j + 1):  # points right; candidate: down
        if _label_at(t, (i + 1, j - 1)) < label:
            return tuple(sorted((pivot, (i + 1, j))))
        return dom
    if var == (i + 1, j):  # points down; candidate: right
        if _label_at(t, (i - 1, j + 1)) < label:
            return tuple(sorted((pivot, (i, j + 1))))
        return dom
    if var == (i, j - 1):  # points left; candidate: up
        if i >= 2 and _label_at(t, (i - 1, j + 1)) > label:
            return tuple(sorted((pivot, (i - 1, j))))
        return dom
    if var == (i - 1, j):  # points up; candidate: left
        if j >= 2 and _label_at(t, (i + 1, j - 1)) > label:
            return tuple(sorted((pivot, (i, j - 1))))
        return dom
    raise AssertionError(f"domino {label} is not edge-adjacent: {dom}")


@dataclass(frozen=True)
class Cycle:
    labels: frozenset[int]
    open: bool
    removed: Cell | None
    added: Cell | None

    @property
    def boundary(self) -> frozenset[Cell]:
        if not self.open:
            return frozenset()
        return frozenset((self.removed, self.added))


@lru_cache(maxsize=100_000)
def cycles(t: DominoTableau) -> tuple[Cycle, ...]:
    """Cycle decomposition; a partition of 1..rank ordered by least label."""
    n = t.rank
    alt = {k: alternate_position(t, k) for k in range(1, n + 1)}
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    cell_owner = {c: k for k, dom in enumerate(t.positions, 1) for c in dom}
    for k in range(1, n + 1):
        for cell in alt[k]:
            owner = cell_owner.get(cell)
            if owner is not None and owner != k:
                union(k, owner)
    groups: dict[int, set[int]] = {}
    for k in range(1, n + 1):
        groups.setdefault(find(k), set()).add(k)

    out = []
    for root in sorted(groups):
        labels = frozenset(groups[root])
        old = {c for k in labels for c in t.domino(k)}
        new = {c for k in labels for c in alt[k]}
        removed = old - new
        added = new - old
        if removed or added:
            assert len(removed) == 1 and len(added) == 1, (t, labels)
            out.append(Cycle(labels, True, min(removed), min(added)))
        else:
            out.append(Cycle(labels, False, None, None))
    return tuple(out)


def cycle_of(t: DominoTableau, label: int) -> Cycle:
    for c in cycles(t):
        if label in c.labels:
            return c
    raise ValueError(f"label {label} out of range")


def move_through(t: DominoTableau, cycle: Cycle | frozenset[int]) -> DominoTableau:
    """Reposition every domino of a cycle (or a union of cycles) at once."""
    labels = cycle.labels if isinstance(cycle, Cycle) else frozenset(cycle)
    own = {c.labels for c in cycles(t)}
    pending = set(labels)
    for grp in own:
        if grp <= pending:
            pending -= grp
    if pending:
        raise ValueError(f"labels {sorted(pending)} are not a union of cycles")
    moved = t.replace({k: alternate_position(t, k) for k in labels})
    bad = problems(moved)
    assert not bad, (t, labels, bad)
    return moved


# -- extended open cycles -------------------------------------------------------

@dataclass(frozen=True)
class ExtendedOpenCycle:
    left_labels: frozenset[int]
    right_labels: frozenset[int]


def extended_open_cycles(pair: TableauPair) -> tuple[ExtendedOpenCycle, ...]:
    """Extended open cycles of pair.left relative to pair.right.

    Open cycles from both sides are chained through shared boundary
    cells; a chained component counts only if moving it keeps the two
    shapes equal.
    """
    nodes: list[tuple[str, Cycle]] = []
    for c in cycles(pair.left):
        if c.open:
            nodes.append(("L", c))
    for c in cycles(pair.right):
        if c.open:
            nodes.append(("R", c))
    m = len(nodes)
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(m):
        for y in range(x + 1, m):
            if nodes[x][1].boundary & nodes[y][1].boundary:
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)

    comps: dict[int, list[tuple[str, Cycle]]] = {}
    for x in range(m):
        comps.setdefault(find(x), []).append(nodes[x])

    out = []
    for root in sorted(comps):
        left = frozenset().union(
            *(c.labels for side, c in comps[root] if side == "L"), frozenset()
        )
        right = frozenset().union(
            *(c.labels for side, c in comps[root] if side == "R"), frozenset()
        )
        new_left = move_through(pair.left, left) if left else pair.left
        new_right = move_through(pair.right, right) if right else pair.right
        if new_left.shape == new_right.shape:
            out.append(ExtendedOpenCycle(left, right))
    out.sort(key=lambda e: (min(e.left_labels, default=0), min(e.right_labels, default=0)))
    return tuple(out)


def move_pair_through(pair: TableauPair, subset) -> TableauPair:
    """Move a pair through a set of its extended open cycles at once."""
    eocs = tuple(subset)
    known = set(extended_open_cycles(pair))
    for e in eocs:
        if e not in known:
            raise ValueError(f"{e} is not an extended open cycle of the pair")
    left_labels = frozenset().union(*(e.left_labels for e in eocs), frozenset())
    right_labels = frozenset().union(*(e.right_labels for e in eocs), frozenset())
    new_left = move_through(pair.left, left_labels) if left_labels else pair.left
    new_right = (
        move_through(pair.right, right_labels) if right_labels else pair.right
    )
    moved = TableauPair(new_left, new_right)
    assert new_left.shape == new_right.shape, (pair, subset)
    return moved
