"""Domino Robinson-Schensted correspondence for signed permutations.

``insert`` maps a signed permutation to a pair (left, right) of same-shape
standard domino tableaux: positive letters enter as horizontal dominos at
the end of row 1, negative letters as vertical dominos at the end of
column 1, displacing larger labels by the usual bumping rules (a fully
covered domino reenters at the end of the next row/column, a half covered
one pivots around its free cell).  ``extract`` is the exact inverse; it
unwinds the bumping chain from the recorded growth cells and certifies
each step by reinsertion, so the round trip is self-checking.
"""

from __future__ import annotations

from .shapes import Cell, is_young
from .tableaux import Domino, DominoTableau, TableauPair, _CORE_CELL
from .weyl import SignedPerm, check_word

_Positions = dict[int, Domino]


def _base_cells(kind: str) -> frozenset[Cell]:
    return frozenset({_CORE_CELL}) if kind == "B" else frozenset()


def _row_len(cells, row: int) -> int:
    return max((j for (i, j) in cells if i == row), default=0)


def _col_len(cells, col: int) -> int:
    return max((i for (i, j) in cells if j == col), default=0)


def _initial_position(cells, value_positive: bool) -> Domino:
    if value_positive:
        c = _row_len(cells, 1)
        return ((1, c + 1), (1, c + 2))
    r = _col_len(cells, 1)
    return ((r + 1, 1), (r + 2, 1))


def _is_horizontal(dom: Domino) -> bool:
    return dom[0][0] == dom[1][0]


def insert_value(positions: _Positions, value: int, kind: str) -> _Positions:
    """One insertion step on a label->domino map with distinct labels."""
    k = abs(value)
    if k in positions:
        raise ValueError(f"label {k} already present")
    smaller = sorted(l for l in positions if l < k)
    larger = sorted(l for l in positions if l > k)
    out: _Positions = {l: positions[l] for l in smaller}
    covered = set(_base_cells(kind))
    for l in smaller:
        covered.update(positions[l])
    gamma = _initial_position(covered, value > 0)
    out[k] = gamma
    covered.update(gamma)
    for y in larger:
        dom = positions[y]
        overlap = set(dom) & covered
        if not overlap:
            new = dom
        elif len(overlap) == 2:
            if _is_horizontal(dom):
                r = dom[0][0] + 1
                c = _row_len(covered, r)
                new = ((r, c + 1), (r, c + 2))
            else:
                c = dom[0][1] + 1
                r = _col_len(covered, c)
                new = ((r + 1, c), (r + 2, c))
        else:
            (i, j) = dom[0]
            assert dom[0] in overlap, (dom, overlap)
            if _is_horizontal(dom):
                new = ((i, j + 1), (i + 1, j + 1))
            else:
                new = ((i + 1, j), (i + 1, j + 1))
        assert not set(new) & covered, (value, dom, new)
        out[y] = new
        covered.update(new)
    assert is_young(covered), (value, covered)
    return out


def _tableau(positions: _Positions, kind: str) -> DominoTableau:
    labels = sorted(positions)
    assert labels == list(range(1, len(labels) + 1))
    return DominoTableau(kind, tuple(positions[l] for l in labels))


def insert(word, kind: str) -> TableauPair:
    """Tableau pair (insertion tableau, recording tableau) of a word."""
    w = check_word(word)
    positions: _Positions = {}
    covered = set(_base_cells(kind))
    recording: list[Domino] = []
    for value in w:
        positions = insert_value(positions, value, kind)
        new_covered = set(_base_cells(kind))
        for dom in positions.values():
            new_covered.update(dom)
        added = sorted(new_covered - covered)
        assert len(added) == 2
        recording.append((added[0], added[1]))
        covered = new_covered
    left = _tableau(positions, kind)
    right = DominoTableau(kind, tuple(recording))
    return TableauPair(left, right)


# -- inverse -------------------------------------------------------------------

def _cells_map(positions: _Positions, kind: str) -> dict[Cell, int]:
    out: dict[Cell, int] = {}
    if kind == "B":
        out[_CORE_CELL] = 0
    for l, dom in positions.items():
        for c in dom:
            out[c] = l
    return out


def _valid_partial(positions: _Positions, kind: str) -> bool:
    covered = set(_base_cells(kind))
    for l in sorted(positions):
        dom = positions[l]
        if set(dom) & covered:
            return False
        covered.update(dom)
        if not is_young(covered):
            return False
    return True


def _uninsert_candidates(cur: _Positions, holes: frozenset[Cell], kind: str):
    """Yield (previous map, inserted value) candidates for one reverse step."""
    covering = [l for l, dom in cur.items() if set(dom) & holes]
    if not covering:
        return
    y = max(covering)
    dom = cur[y]
    dom_cells = set(dom)
    s_cells = set(_base_cells(kind))
    for l, d in cur.items():
        if l < y:
            s_cells.update(d)
    larger_cells = set()
    for l, d in cur.items():
        if l > y:
            larger_cells.update(d)
    smaller_map = _cells_map({l: d for l, d in cur.items() if l < y}, kind)

    def vacated_ok(old_cells: set[Cell]) -> bool:
        return all(
            c in holes or c in larger_cells for c in dom_cells - old_cells
        )

    # the domino may be the one that was inserted
    if holes <= dom_cells and vacated_ok(set()):
        if dom == _initial_position(s_cells, True):
            prev = {l: d for l, d in cur.items() if l != y}
            yield prev, y, frozenset()
        if dom == _initial_position(s_cells, False):
            prev = {l: d for l, d in cur.items() if l != y}
            yield prev, -y, frozenset()

    olds: list[Domino] = []
    (a, b) = dom
    if _is_horizontal(dom):
        (r, c) = a
        if r >= 2 and c == _row_len(s_cells, r) + 1:
            for j in range(1, _row_len(s_cells, r - 1)):
                old = ((r - 1, j), (r - 1, j + 1))
                if set(old) <= s_cells:
                    olds.append(old)
        if r >= 2 and (r - 1, c) in s_cells:
            olds.append(((r - 1, c), (r, c)))
    else:
        (r, c) = a
        if c >= 2 and r == _col_len(s_cells, c) + 1:
            for i in range(1, _col_len(s_cells, c - 1)):
                old = ((i, c - 1), (i + 1, c - 1))
                if set(old) <= s_cells:
                    olds.append(old)
        if c >= 2 and (r, c - 1) in s_cells:
            olds.append(((r, c - 1), (r, c)))

    for old in olds:
        old_cells = set(old)
        if old_cells & holes or old_cells & larger_cells:
            continue
        if not vacated_ok(old_cells):
            continue
        demands = frozenset(c for c in old_cells if c in smaller_map)
        new_holes = (holes - dom_cells) | demands
        if not new_holes:
            continue
        prev = dict(cur)
        prev[y] = old
        yield prev, None, new_holes


def uninsert(positions: _Positions, added: Domino, kind: str) -> tuple[_Positions, int]:
    """Undo the insertion step whose shape growth was ``added``."""
    target = dict(positions)
    results: list[tuple[_Positions, int]] = []

    def search(cur: _Positions, holes: frozenset[Cell]):
        for prev, value, new_holes in _uninsert_candidates(cur, holes, kind):
            if value is not None:
                if _valid_partial(prev, kind):
                    again = insert_value(prev, value, kind)
                    if again == target:
                        results.append((prev, value))
            else:
                search(prev, new_holes)

    search(target, frozenset(added))
    unique = {(_freeze(p), v) for p, v in results}
    if len(unique) != 1:
        raise ValueError(
            f"reverse insertion found {len(unique)} preimages for {added}"
        )
    return results[0]


def _freeze(positions: _Positions):
    return tuple(sorted(positions.items()))


def extract(pair: TableauPair) -> SignedPerm:
    """Inverse of ``insert``: the signed permutation of a tableau pair."""
    left, right = pair.left, pair.right
    if left.kind != right.kind or left.shape != right.shape:
        raise ValueError("extract needs a valid same-shape pair")
    kind = left.kind
    positions: _Positions = {
        k: left.domino(k) for k in range(1, left.rank + 1)
    }
    word = [0] * left.rank
    for k in range(left.rank, 0, -1):
        positions, value = uninsert(positions, right.domino(k), kind)
        word[k - 1] = value
    return tuple(word)
