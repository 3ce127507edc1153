"""Standard domino tableaux of kinds B and C, and same-shape pairs.

A tableau of rank n tiles a shape with dominos labeled 1..n so that the
union of dominos 1..k is a partition diagram for every k (kind B adds a
reserved 0-cell at (1, 1) that no domino covers).  Tableaux are immutable
and hashable; all operations return new values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .shapes import (
    Cell,
    Shape,
    cells_of,
    domino_tableau_count,
    is_tilable,
    is_young,
    shape_of_cells,
)

Domino = tuple[Cell, Cell]

_CORE_CELL: Cell = (1, 1)


def _norm_domino(cells) -> Domino:
    a, b = sorted(tuple(c) for c in cells)
    if not (a[0] == b[0] and a[1] + 1 == b[1]) and not (
        a[1] == b[1] and a[0] + 1 == b[0]
    ):
        raise ValueError(f"cells {a}, {b} do not form a domino")
    return (a, b)


@dataclass(frozen=True)
class DominoTableau:
    """A standard domino tableau; ``positions[k-1]`` is the domino of k."""

    kind: str
    positions: tuple[Domino, ...]

    @property
    def rank(self) -> int:
        return len(self.positions)

    @cached_property
    def cell_labels(self) -> dict[Cell, int]:
        """Map from covered cell to label; the kind-B core carries 0."""
        out: dict[Cell, int] = {}
        if self.kind == "B":
            out[_CORE_CELL] = 0
        for k, dom in enumerate(self.positions, start=1):
            for c in dom:
                out[c] = k
        return out

    @cached_property
    def shape(self) -> Shape:
        return shape_of_cells(self.cell_labels.keys())

    def domino(self, label: int) -> Domino:
        return self.positions[label - 1]

    def label_at(self, cell: Cell) -> int | None:
        return self.cell_labels.get(cell)

    def is_vertical(self, label: int) -> bool:
        (a, b) = self.positions[label - 1]
        return a[1] == b[1]

    def prefix(self, k: int) -> "DominoTableau":
        if not 0 <= k <= self.rank:
            raise ValueError(f"prefix index {k} out of range 0..{self.rank}")
        return DominoTableau(self.kind, self.positions[:k])

    def transpose(self) -> "DominoTableau":
        flipped = tuple(
            _norm_domino(((c, r) for (r, c) in dom)) for dom in self.positions
        )
        return DominoTableau(self.kind, flipped)

    def replace(self, assignments: dict[int, Domino]) -> "DominoTableau":
        """New tableau with some labels repositioned."""
        new = list(self.positions)
        for label, dom in assignments.items():
            new[label - 1] = _norm_domino(dom)
        return DominoTableau(self.kind, tuple(new))

    def render(self) -> str:
        """Grid of labels, 0 at the kind-B core cell."""
        if not self.cell_labels:
            return "(empty)"
        shape = self.shape
        width = max(2, len(str(self.rank)))
        lines = []
        for i, p in enumerate(shape, start=1):
            lines.append(
                " ".join(
                    str(self.cell_labels[(i, j)]).rjust(width)
                    for j in range(1, p + 1)
                )
            )
        return "\n".join(lines)


def problems(t: DominoTableau) -> list[str]:
    """All violated tableau constraints, empty when the tableau is valid."""
    out = []
    if t.kind not in ("B", "C"):
        return [f"unknown kind {t.kind!r}"]
    seen: dict[Cell, int] = {}
    if t.kind == "B":
        seen[_CORE_CELL] = 0
    for k, dom in enumerate(t.positions, start=1):
        try:
            _norm_domino(dom)
        except ValueError as exc:
            out.append(f"domino {k}: {exc}")
            continue
        for c in dom:
            if c[0] < 1 or c[1] < 1:
                out.append(f"domino {k} leaves the quadrant at {c}")
            if c in seen:
                out.append(f"cell {c} covered by both {seen[c]} and {k}")
            seen[c] = k
    covered = set()
    if t.kind == "B":
        covered.add(_CORE_CELL)
    for k, dom in enumerate(t.positions, start=1):
        covered |= set(dom)
        if not is_young(covered):
            out.append(f"prefix 1..{k} is not a partition diagram")
    return out


def validate(t: DominoTableau) -> bool:
    return not problems(t)


def empty_tableau(kind: str) -> DominoTableau:
    return DominoTableau(kind, ())


def add_domino(t: DominoTableau, cells) -> DominoTableau:
    return DominoTableau(t.kind, t.positions + (_norm_domino(cells),))


def enumerate_tableaux(shape: Shape, kind: str) -> tuple[DominoTableau, ...]:
    """All standard domino tableaux of a shape, in placement-lex order."""
    if not is_tilable(shape, kind):
        raise ValueError(f"{shape} is not tilable for kind {kind}")
    target = cells_of(shape)
    base: frozenset[Cell] = frozenset({_CORE_CELL}) if kind == "B" else frozenset()
    out: list[DominoTableau] = []

    def addable(cov: frozenset[Cell]) -> list[Domino]:
        cands = []
        for (i, j) in sorted(target - cov):
            right = (i, j + 1)
            down = (i + 1, j)
            for other in (right, down):
                if other in target and other not in cov:
                    dom = _norm_domino(((i, j), other))
                    if is_young(cov | set(dom)):
                        cands.append(dom)
        return sorted(set(cands))

    def rec(cov: frozenset[Cell], acc: tuple[Domino, ...]):
        if cov == target:
            out.append(DominoTableau(kind, acc))
            return
        for dom in addable(cov):
            rec(cov | set(dom), acc + (dom,))

    rec(base, ())
    count = domino_tableau_count(shape, kind)
    assert len(out) == count, (shape, kind, len(out), count)
    return tuple(out)


class TableauPair(tuple):
    """Ordered pair of same-kind, same-shape tableaux."""

    def __new__(cls, left: DominoTableau, right: DominoTableau):
        return super().__new__(cls, (left, right))

    @property
    def left(self) -> DominoTableau:
        return self[0]

    @property
    def right(self) -> DominoTableau:
        return self[1]

    def swap(self) -> "TableauPair":
        return TableauPair(self[1], self[0])

    def transpose(self) -> "TableauPair":
        return TableauPair(self[0].transpose(), self[1].transpose())


def pair_problems(pair: TableauPair) -> list[str]:
    out = problems(pair.left) + problems(pair.right)
    if pair.left.kind != pair.right.kind:
        out.append("kinds differ")
    elif pair.left.rank != pair.right.rank:
        out.append("ranks differ")
    elif not out and pair.left.shape != pair.right.shape:
        out.append("shapes differ")
    return out


def validate_pair(pair: TableauPair) -> bool:
    return not pair_problems(pair)


# -- serialization -------------------------------------------------------------

def to_dict(t: DominoTableau) -> dict:
    return {
        "kind": t.kind,
        "rank": t.rank,
        "dominos": [
            {"label": k, "cells": [list(c) for c in dom]}
            for k, dom in enumerate(t.positions, start=1)
        ],
    }


def encode(t: DominoTableau) -> str:
    return json.dumps(to_dict(t), separators=(",", ":"))


def from_dict(data: dict) -> DominoTableau:
    if not isinstance(data, dict):
        raise ValueError("tableau JSON must be an object")
    for field in ("kind", "rank", "dominos"):
        if field not in data:
            raise ValueError(f"tableau JSON lacks {field!r}")
    kind = data["kind"]
    if kind not in ("B", "C"):
        raise ValueError(f"unknown kind {kind!r}")
    dominos = data["dominos"]
    if not isinstance(dominos, list) or len(dominos) != data["rank"]:
        raise ValueError("rank does not match the domino list")
    positions: list[Domino] = [((0, 0), (0, 0))] * data["rank"]
    seen = set()
    for entry in dominos:
        label = entry.get("label")
        if not isinstance(label, int) or not 1 <= label <= data["rank"]:
            raise ValueError(f"bad label {label!r}")
        if label in seen:
            raise ValueError(f"label {label} repeated")
        seen.add(label)
        cells = entry.get("cells")
        if not isinstance(cells, list) or len(cells) != 2:
            raise ValueError(f"domino {label} needs exactly two cells")
        positions[label - 1] = _norm_domino(tuple(tuple(c) for c in cells))
    t = DominoTableau(kind, tuple(positions))
    bad = problems(t)
    if bad:
        raise ValueError("; ".join(bad))
    return t


def decode(text: str) -> DominoTableau:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed tableau JSON: {exc}") from exc
    return from_dict(data)


def pair_to_dict(pair: TableauPair) -> dict:
    return {"left": to_dict(pair.left), "right": to_dict(pair.right)}


def encode_pair(pair: TableauPair) -> str:
    return json.dumps(pair_to_dict(pair), separators=(",", ":"))


def decode_pair(text: str) -> TableauPair:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed pair JSON: {exc}") from exc
    if not isinstance(data, dict) or "left" not in data or "right" not in data:
        raise ValueError("pair JSON needs 'left' and 'right'")
    pair = TableauPair(from_dict(data["left"]), from_dict(data["right"]))
    bad = pair_problems(pair)
    if bad:
        raise ValueError("; ".join(bad))
    return pair
