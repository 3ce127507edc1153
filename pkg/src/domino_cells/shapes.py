"""Partition shapes and their two-core combinatorics.

Shapes are weakly decreasing tuples of positive integers, row 1 on top,
cells 1-indexed as (row, col).  This module covers row/column statistics,
2-core/2-quotient extraction via beta-numbers, domino tilability for the
two tableau kinds, extremal domino positions, the quasi-staircase shape
families acted on by the interchange operators, and specialness of a
shape via symbol interleaving.

Conventions frozen here and used everywhere else:

* Beta-numbers use the shape padded to an even number of rows.
* ``two_quotient`` returns (even runner, odd runner) components.
* The shape-to-representation dictionary puts the odd runner first for
  kind C and the even runner first for kind B; the first component is
  the top row of the symbol.
"""

from __future__ import annotations

import itertools
from functools import cache
from math import comb, factorial

Cell = tuple[int, int]
Shape = tuple[int, ...]
Bipartition = tuple[Shape, Shape]

KINDS = ("B", "C")


def check_shape(parts) -> Shape:
    """Return ``parts`` as a Shape tuple, or raise ValueError."""
    shape = tuple(int(p) for p in parts)
    if any(p <= 0 for p in shape):
        raise ValueError(f"shape parts must be positive: {shape}")
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError(f"shape parts must weakly decrease: {shape}")
    return shape


def parse_shape(text: str) -> Shape:
    """Parse a comma-separated part list such as ``"5,3,3,1"``."""
    text = text.strip()
    if not text:
        return ()
    return check_shape(text.split(","))


def format_shape(shape: Shape) -> str:
    return ",".join(str(p) for p in shape)


def total(shape: Shape) -> int:
    return sum(shape)


def rho(shape: Shape, i: int) -> int:
    """Length of row i (1-indexed), 0 past the last row."""
    if i < 1:
        raise ValueError("row index must be >= 1")
    return shape[i - 1] if i <= len(shape) else 0


def kappa(shape: Shape, j: int) -> int:
    """Length of column j (1-indexed), 0 past the last column."""
    if j < 1:
        raise ValueError("column index must be >= 1")
    return sum(1 for p in shape if p >= j)


def transpose_shape(shape: Shape) -> Shape:
    if not shape:
        return ()
    return tuple(kappa(shape, j) for j in range(1, shape[0] + 1))


def cells_of(shape: Shape) -> frozenset[Cell]:
    return frozenset(
        (i, j) for i, p in enumerate(shape, start=1) for j in range(1, p + 1)
    )


def shape_of_cells(cells) -> Shape:
    """Shape whose diagram is the given cell set; ValueError if not a diagram."""
    rows: dict[int, int] = {}
    for (i, j) in cells:
        rows[i] = max(rows.get(i, 0), j)
    if not rows:
        return ()
    parts = tuple(rows.get(i, 0) for i in range(1, max(rows) + 1))
    if 0 in parts or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("cells do not form a partition diagram")
    if sum(parts) != len(set(cells)):
        raise ValueError("cells do not form a partition diagram")
    return parts


def is_young(cells) -> bool:
    try:
        shape_of_cells(cells)
        return True
    except ValueError:
        return False


def _beta_numbers(shape: Shape) -> tuple[int, ...]:
    # Padded to an even number of rows so the runner split is canonical.
    length = len(shape) + (len(shape) % 2)
    parts = shape + (0,) * (length - len(shape))
    return tuple(parts[i] + (length - 1 - i) for i in range(length))


def _partition_from_beads(beads: tuple[int, ...]) -> Shape:
    desc = sorted(beads, reverse=True)
    m = len(desc)
    parts = tuple(desc[i] - (m - 1 - i) for i in range(m))
    return tuple(p for p in parts if p > 0)


@cache
def two_core_quotient(shape: Shape) -> tuple[Shape, Bipartition]:
    """2-core and 2-quotient of a shape via the two-runner abacus.

    The quotient is returned as (even runner, odd runner) with the shape
    padded to an even number of beta-numbers.
    """
    beta = _beta_numbers(shape)
    even = tuple(b // 2 for b in beta if b % 2 == 0)
    odd = tuple((b - 1) // 2 for b in beta if b % 2 == 1)
    quotient = (_partition_from_beads(even), _partition_from_beads(odd))
    core_beta = [2 * i for i in range(len(even))] + [
        2 * i + 1 for i in range(len(odd))
    ]
    core = _partition_from_beads(tuple(core_beta))
    return core, quotient


def two_core(shape: Shape) -> Shape:
    return two_core_quotient(shape)[0]


def two_quotient(shape: Shape) -> Bipartition:
    return two_core_quotient(shape)[1]


def is_tilable(shape: Shape, kind: str) -> bool:
    """Whether the shape carries standard domino tableaux of this kind.

    Kind C needs even total and empty 2-core; kind B needs odd total and
    2-core equal to the single cell.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    core = two_core(shape)
    if kind == "C":
        return total(shape) % 2 == 0 and core == ()
    return total(shape) % 2 == 1 and core == (1,)


def rank_of(shape: Shape, kind: str) -> int:
    """Number of dominos in a tableau of this shape."""
    t = total(shape)
    return t // 2 if kind == "C" else (t - 1) // 2


def tilable_shapes(n_cells: int, kind: str) -> tuple[Shape, ...]:
    """All tilable shapes with the given cell total, in lexicographic order."""
    return tuple(
        s for s in partitions_of(n_cells) if is_tilable(s, kind)
    )


@cache
def partitions_of(n: int) -> tuple[Shape, ...]:
    """All partitions of n, lexicographically decreasing-first."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    out: list[Shape] = []

    def rec(remaining: int, maxpart: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for p in range(min(remaining, maxpart), 0, -1):
            rec(remaining - p, p, prefix + (p,))

    rec(n, n, ())
    return tuple(out)


def hook_length_count(shape: Shape) -> int:
    """Number of standard Young tableaux of the shape."""
    if not shape:
        return 1
    tr = transpose_shape(shape)
    f = factorial(total(shape))
    for i, p in enumerate(shape, start=1):
        for j in range(1, p + 1):
            f //= (p - j) + (tr[j - 1] - i) + 1
    return f


def bitableau_count(bp: Bipartition) -> int:
    """Number of standard bitableaux on a bipartition."""
    a, b = bp
    n = total(a) + total(b)
    return comb(n, total(a)) * hook_length_count(a) * hook_length_count(b)


def domino_tableau_count(shape: Shape, kind: str) -> int:
    """Number of standard domino tableaux, via the 2-quotient."""
    if not is_tilable(shape, kind):
        raise ValueError(f"{shape} is not tilable for kind {kind}")
    return bitableau_count(two_quotient(shape))


# -- extremal positions ------------------------------------------------------

def domino_positions(shape: Shape) -> tuple[tuple[Cell, Cell], ...]:
    """All horizontal/vertical domino placements inside the shape."""
    cells = cells_of(shape)
    out = []
    for (i, j) in sorted(cells):
        if (i, j + 1) in cells:
            out.append(((i, j), (i, j + 1)))
        if (i + 1, j) in cells:
            out.append(((i, j), (i + 1, j)))
    return tuple(out)


def extremal_positions(shape: Shape, kind: str) -> tuple[tuple[Cell, Cell], ...]:
    """Domino positions whose removal leaves a tilable shape of the same kind.

    The empty shape (kind C) counts as tilable.
    """
    if not is_tilable(shape, kind):
        raise ValueError(f"{shape} is not tilable for kind {kind}")
    cells = cells_of(shape)
    out = []
    for pos in domino_positions(shape):
        rest = cells - set(pos)
        try:
            smaller = shape_of_cells(rest)
        except ValueError:
            continue
        if kind == "C" and smaller == ():
            out.append(pos)
        elif smaller and is_tilable(smaller, kind):
            out.append(pos)
    return tuple(out)


# -- quasi-staircase families ------------------------------------------------

def quasi_staircase_shape(kind: str, family: str, n: int) -> Shape:
    """The quasi-staircase shape for (kind, family, n), n >= 2.

    Kind C: sigma_n = (2n+1,...,n+3, n+1, n+1, n-1,...,1) and
    tau_n = (2n+2,...,n+4, n+3, n+1, n+1, n-1,...,1).  Kind B uses the
    analogous families around a doubled row of size n resp. n+2.
    """
    if n < 2:
        raise ValueError("quasi-staircase families start at n = 2")
    if family not in ("sigma", "tau"):
        raise ValueError(f"unknown family {family!r}")
    if kind == "C":
        if family == "sigma":
            head = list(range(2 * n + 1, n + 2, -1))
            parts = head + [n + 1, n + 1] + list(range(n - 1, 0, -1))
        else:
            head = list(range(2 * n + 2, n + 3, -1))
            parts = head + [n + 1, n + 1] + list(range(n - 1, 0, -1))
    elif kind == "B":
        if family == "sigma":
            head = list(range(2 * n + 1, n + 1, -1))
            parts = head + [n, n] + list(range(n - 2, 0, -1))
        else:
            head = list(range(2 * n + 2, n + 3, -1))
            parts = head + [n + 2, n + 2] + list(range(n, 0, -1))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return check_shape(parts)


def quasi_staircase_size(kind: str, family: str, n: int) -> int:
    """Number of dominos tiling the (kind, family, n) quasi-staircase."""
    t = total(quasi_staircase_shape(kind, family, n))
    return t // 2 if kind == "C" else (t - 1) // 2


def quasi_staircase_slots(kind: str, family: str, n: int) -> tuple[
    tuple[Cell, Cell], tuple[Cell, Cell]
]:
    """Positions of the two largest dominos in the canonical filling.

    Returns (vertical slot, horizontal slot): the vertical slot ends the
    two equal rows, the horizontal slot ends the row just above them.
    """
    shape = quasi_staircase_shape(kind, family, n)
    # the doubled rows:
    doubled = None
    for i in range(len(shape) - 1):
        if shape[i] == shape[i + 1]:
            doubled = i + 1  # 1-indexed first of the two
            break
    assert doubled is not None and doubled >= 2
    width = shape[doubled - 1]
    slot_v = ((doubled, width), (doubled + 1, width))
    above = shape[doubled - 2]
    slot_h = ((doubled - 1, above - 1), (doubled - 1, above))
    return slot_v, slot_h


def quasi_staircase(shape: Shape, kind: str):
    """Recognize a quasi-staircase shape (or a transpose).

    Returns (family, n, transposed) or None.
    """
    if not shape:
        return None
    t = total(shape)
    for family in ("sigma", "tau"):
        for n in itertools.count(2):
            qs = quasi_staircase_shape(kind, family, n)
            if total(qs) > t:
                break
            if total(qs) == t:
                if shape == qs:
                    return (family, n, False)
                if shape == transpose_shape(qs):
                    return (family, n, True)
    return None


# -- symbols and specialness --------------------------------------------------

def symbol(bp: Bipartition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Defect-one symbol of a bipartition, first component on top."""
    top_parts, bottom_parts = bp
    rows = max(len(top_parts), len(bottom_parts) + 1)
    top = sorted(top_parts + (0,) * (rows - len(top_parts)))
    bottom = sorted(bottom_parts + (0,) * (rows - 1 - len(bottom_parts)))
    return (
        tuple(v + i for i, v in enumerate(top)),
        tuple(v + i for i, v in enumerate(bottom)),
    )


def symbol_interleaves(top: tuple[int, ...], bottom: tuple[int, ...]) -> bool:
    """Weak interleaving a1 <= b1 <= a2 <= ... <= a_{m+1}."""
    merged = []
    for i, b in enumerate(bottom):
        merged.append((top[i], b))
    for a, b in merged:
        if a > b:
            return False
    for i in range(len(bottom)):
        if bottom[i] > top[i + 1]:
            return False
    return True


def rep_of_shape(shape: Shape, kind: str) -> Bipartition:
    """Bipartition indexing the irreducible attached to a tilable shape.

    Kind C reads (odd runner, even runner); kind B reads (even, odd).
    With this dictionary the single-row shape maps to ((n), ()) for both
    kinds, matching the trivial character.
    """
    if not is_tilable(shape, kind):
        raise ValueError(f"{shape} is not tilable for kind {kind}")
    q_even, q_odd = two_quotient(shape)
    return (q_odd, q_even) if kind == "C" else (q_even, q_odd)


def is_special_bipartition(bp: Bipartition) -> bool:
    return symbol_interleaves(*symbol(bp))


def is_special(shape: Shape, kind: str) -> bool:
    """Specialness of a tilable shape: its symbol interleaves weakly."""
    return is_special_bipartition(rep_of_shape(shape, kind))
