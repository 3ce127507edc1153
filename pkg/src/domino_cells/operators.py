"""Wall-crossing style operators on same-shape tableau pairs.

The same-length operators T_{a_i a_j} (|i-j| = 1, i, j >= 2) act on the
left tableau only, toggling which of the two adjacent tau entries is
present; the move is the unique label swap or 2x2-box flip among the
three consecutive dominos that restores standardness with the flipped
pattern.  U^L handles the length-asymmetric pair (a_1, a_2) through the
box recipe (kind C) or the hook recipe (kind B) on dominos 1 and 2, with
a second image when domino 2 then sits in a closed cycle.  The S family
interchanges the two largest dominos of a quasi-staircase prefix, and
the enlarged family composes that with extended-cycle moves, possibly
producing two images or moving the right tableau.
"""

from __future__ import annotations

from functools import lru_cache

from .shapes import (
    cells_of,
    is_young,
    quasi_staircase_shape,
    quasi_staircase_size,
    quasi_staircase_slots,
)
from .tableaux import (
    DominoTableau,
    TableauPair,
    enumerate_tableaux,
    problems,
)
from .cycles import (
    ExtendedOpenCycle,
    cycle_of,
    extended_open_cycles,
    move_pair_through,
    move_through,
)
from .weyl import SignedPerm, generator, left_descents, multiply

# operator ids:
#   ("T", i, j)                      same-length wall crossing
#   ("UL", "fwd" | "rev")            different-length, left version
#   ("S", family, n, transposed)     S family; family "sigma" -> S_n, "tau" -> S_n'
#   ("E", family, n, transposed)     enlarged family T_n etc.
OperatorId = tuple


@lru_cache(maxsize=200_000)
def tau(t: DominoTableau) -> frozenset[int]:
    """tau-invariant: indices of simple roots descending the tableau.

    alpha_1 is present when domino 1 is vertical; alpha_i (i >= 2) when
    domino i reaches strictly lower rows than domino i-1.
    """
    out = set()
    if t.rank >= 1 and t.is_vertical(1):
        out.add(1)
    for i in range(2, t.rank + 1):
        if t.domino(i)[1][0] > t.domino(i - 1)[1][0]:
            out.add(i)
    return frozenset(out)


def _young_prefix_ok(t: DominoTableau, upto: int, extra) -> bool:
    cells = set(t.cell_labels)
    keep = {c for c, lab in t.cell_labels.items() if lab <= upto}
    del cells
    return is_young(keep | set(extra))


def _is_box(d1, d2) -> bool:
    rows = {r for (r, _) in d1 + d2}
    cols = {c for (_, c) in d1 + d2}
    return len(rows) == 2 and len(cols) == 2 and len(set(d1 + d2)) == 4


def _box_flip(t: DominoTableau, x: int):
    """Retile the 2x2 box of consecutive dominos x, x+1, or None."""
    d1, d2 = t.domino(x), t.domino(x + 1)
    if not _is_box(d1, d2):
        return None
    r = min(c[0] for c in d1 + d2)
    c = min(c[1] for c in d1 + d2)
    if d1[0][0] == d1[1][0]:  # horizontal pair: x on top -> x on the left
        return {x: ((r, c), (r + 1, c)), x + 1: ((r, c + 1), (r + 1, c + 1))}
    return {x: ((r, c), (r, c + 1)), x + 1: ((r + 1, c), (r + 1, c + 1))}


def apply_T(pair: TableauPair, i: int, j: int) -> TableauPair | None:
    """Same-length wall crossing T_{a_i a_j} on the left tableau."""
    if abs(i - j) != 1 or min(i, j) < 2:
        raise ValueError("T needs adjacent same-length indices i, j >= 2")
    left = pair.left
    if max(i, j) > left.rank:
        return None
    pattern = tau(left)
    if j not in pattern or i in pattern:
        return None
    m = min(i, j)
    candidates = []
    for x in (m - 1, m):
        swapped = left.replace({x: left.domino(x + 1), x + 1: left.domino(x)})
        if _young_prefix_ok(swapped, x - 1, swapped.domino(x)):
            candidates.append(swapped)
        flip = _box_flip(left, x)
        if flip is not None:
            candidates.append(left.replace(flip))
    winners = []
    for cand in candidates:
        new_pattern = tau(cand)
        if i in new_pattern and j not in new_pattern and not problems(cand):
            winners.append(cand)
    uniq = sorted(set(winners), key=lambda t: t.positions)
    if len(uniq) != 1:
        raise RuntimeError(
            f"interchange for T_{{a{i} a{j}}} found {len(uniq)} moves on\n"
            f"{left.render()}"
        )
    return TableauPair(uniq[0], pair.right)


def _ul_orientation(left: DominoTableau) -> str | None:
    """'fwd' when dominos 1, 2 sit in the box/hook with domino 1 flat."""
    if left.rank < 2:
        return None
    want = (2, 2) if left.kind == "C" else (3, 1, 1)
    if left.prefix(2).shape != want:
        return None
    return "rev" if left.is_vertical(1) else "fwd"


def apply_UL(pair: TableauPair, direction: str) -> tuple[TableauPair, ...] | None:
    """U^L on the (a_1, a_2) wall: box/hook transpose, then an optional
    second image through a closed cycle of domino 2."""
    if direction not in ("fwd", "rev"):
        raise ValueError("direction must be 'fwd' or 'rev'")
    left = pair.left
    if _ul_orientation(left) != direction:
        return None
    if left.kind == "C":
        flip = _box_flip(left, 1)
        assert flip is not None
        first = left.replace(flip)
    else:
        first = left.replace({1: left.domino(2), 2: left.domino(1)})
    assert not problems(first), first
    images = [TableauPair(first, pair.right)]
    c2 = cycle_of(first, 2)
    if not c2.open:
        second = move_through(first, c2)
        if second != first:
            images.append(TableauPair(second, pair.right))
    return tuple(sorted(set(images)))


@lru_cache(maxsize=None)
def canonical_staircase(kind: str, family: str, n: int) -> DominoTableau:
    """The fixed quasi-staircase filling: slots occupied as specified,
    remaining dominos in the first enumeration order."""
    shape = quasi_staircase_shape(kind, family, n)
    slot_v, slot_h = quasi_staircase_slots(kind, family, n)
    m = quasi_staircase_size(kind, family, n)
    for t in enumerate_tableaux(shape, kind):
        if t.domino(m) == slot_v and t.domino(m - 1) == slot_h:
            return t
    raise AssertionError(f"no canonical filling for {kind} {family} {n}")


def _s_core(left: DominoTableau, family: str, n: int, strict: bool):
    kind = left.kind
    m = quasi_staircase_size(kind, family, n)
    if left.rank < m:
        return None
    pref = left.prefix(m)
    if pref.shape != quasi_staircase_shape(kind, family, n):
        return None
    slot_v, slot_h = quasi_staircase_slots(kind, family, n)
    top, second = left.domino(m), left.domino(m - 1)
    if {top, second} != {slot_v, slot_h}:
        return None
    if strict:
        canon = canonical_staircase(kind, family, n)
        if pref.positions[: m - 2] != canon.positions[: m - 2]:
            return None
    return left.replace({m: second, m - 1: top})


def apply_S(
    pair: TableauPair, family: str, n: int, transposed: bool, strict: bool = False
) -> TableauPair | None:
    """S_n / S_n' (family sigma/tau) or their transposes: interchange the
    two largest dominos of the quasi-staircase prefix."""
    left = pair.left
    work = left.transpose() if transposed else left
    moved = _s_core(work, family, n, strict)
    if moved is None:
        return None
    if transposed:
        moved = moved.transpose()
    assert not problems(moved), moved
    return TableauPair(moved, pair.right)


# -- enlarged operators ----------------------------------------------------------

def _eoc_containing(pair: TableauPair, label: int) -> ExtendedOpenCycle | None:
    for e in extended_open_cycles(pair):
        if label in e.left_labels:
            return e
    return None


def _largest_in_region(t: DominoTableau, region) -> tuple[int, int] | None:
    inside = [
        k for k in range(1, t.rank + 1) if set(t.domino(k)) <= region
    ]
    if len(inside) < 2:
        return None
    inside.sort()
    return inside[-1], inside[-2]


def apply_enlarged(
    pair: TableauPair,
    family: str,
    n: int,
    transposed: bool,
    typo_d1: bool = False,
) -> tuple[TableauPair, ...] | None:
    """Enlarged operators: pre/post-compose the S move with extended open
    cycle moves; S'-type is single valued, S-type may have two images.

    ``typo_d1`` switches the published membership test for the second
    image from d2 to d1 in the already-in-position branch.
    """
    if transposed:
        inner = apply_enlarged(pair.transpose(), family, n, False, typo_d1)
        if inner is None:
            return None
        return tuple(sorted(p.transpose() for p in inner))

    left, right = pair.left, pair.right
    kind = left.kind
    m = quasi_staircase_size(kind, family, n)
    if left.rank < m:
        return None
    region = cells_of(quasi_staircase_shape(kind, family, n))
    if not region <= set(left.cell_labels):
        return None
    largest = _largest_in_region(left, region)
    if largest is None:
        return None
    d1, d2 = largest

    def swap(t: DominoTableau) -> DominoTableau | None:
        out = t.replace({d1: t.domino(d2), d2: t.domino(d1)})
        return None if problems(out) else out

    if family == "tau":
        moved = swap(left)
        if moved is None:
            return None
        return (TableauPair(moved, right),)

    slot_v, slot_h = quasi_staircase_slots(kind, family, n)
    in_slots = (
        left.prefix(m).shape == quasi_staircase_shape(kind, family, n)
        and {left.domino(d1), left.domino(d2)} == {slot_v, slot_h}
        and d1 == m
        and d2 == m - 1
    )

    def second_image(first: TableauPair) -> tuple[TableauPair, ...]:
        e = _eoc_containing(first, d1)
        probe = d1 if typo_d1 else d2
        if e is None or probe in e.left_labels:
            return (first,)
        return tuple(sorted({first, move_pair_through(first, (e,))}))

    if in_slots:
        moved = swap(left)
        if moved is None:
            return None
        return second_image(TableauPair(moved, right))

    if _is_box(left.domino(d1), left.domino(d2)):
        flip = _box_flip(left, d2) if d1 == d2 + 1 else None
        if flip is None:
            moved = swap(left)
        else:
            moved = left.replace(flip)
            if problems(moved):
                moved = None
        if moved is None:
            return None
        return second_image(TableauPair(moved, right))

    e2 = _eoc_containing(pair, d2)
    if e2 is None:
        return None
    moved_pair = move_pair_through(pair, (e2,))
    t1 = moved_pair.left
    if _is_box(t1.domino(d1), t1.domino(d2)):
        flip = _box_flip(t1, d2) if d1 == d2 + 1 else None
        out = t1.replace(flip) if flip is not None else swap(t1)
    elif (
        t1.prefix(m).shape == quasi_staircase_shape(kind, family, n)
        and {t1.domino(d1), t1.domino(d2)} == {slot_v, slot_h}
    ):
        out = t1.replace({d1: t1.domino(d2), d2: t1.domino(d1)})
    else:
        return None
    if out is None or problems(out):
        return None
    return (TableauPair(out, moved_pair.right),)


# -- dispatch --------------------------------------------------------------------

def theorem1_ops(rank: int, kind: str, include_s: bool = True) -> tuple[OperatorId, ...]:
    """The operator family of the transitivity theorem at a given rank."""
    ops: list[OperatorId] = []
    for i in range(2, rank):
        ops.append(("T", i, i + 1))
        ops.append(("T", i + 1, i))
    ops.append(("UL", "fwd"))
    ops.append(("UL", "rev"))
    if include_s:
        for family in ("sigma", "tau"):
            n = 2
            while quasi_staircase_size(kind, family, n) <= rank:
                for transposed in (False, True):
                    ops.append(("S", family, n, transposed))
                n += 1
    return tuple(ops)


def apply_operator(pair: TableauPair, op: OperatorId) -> tuple[TableauPair, ...]:
    """Image set of one operator; empty when out of domain."""
    head = op[0]
    if head == "T":
        got = apply_T(pair, op[1], op[2])
        return () if got is None else (got,)
    if head == "UL":
        got = apply_UL(pair, op[1])
        return got or ()
    if head == "S":
        got = apply_S(pair, op[1], op[2], op[3])
        return () if got is None else (got,)
    if head == "E":
        got = apply_enlarged(pair, op[1], op[2], op[3])
        return got or ()
    raise ValueError(f"unknown operator {op!r}")


def apply_sequence(pair: TableauPair, seq) -> tuple[TableauPair, ...]:
    """Left-to-right composition, unioning images, dropping dead branches."""
    frontier = {pair}
    for op in seq:
        nxt = set()
        for p in frontier:
            nxt.update(apply_operator(p, op))
        frontier = nxt
        if not frontier:
            break
    return tuple(sorted(frontier))


_FAMILY_CODE = {"sigma": "", "tau": "'"}


def format_op(op: OperatorId) -> str:
    head = op[0]
    if head == "T":
        return f"T:{op[1]},{op[2]}"
    if head == "UL":
        return f"UL:{op[1]}"
    prefix = "t" if op[3] else ""
    name = "S" if head == "S" else "EnlT"
    return f"{prefix}{name}{_FAMILY_CODE[op[1]]}:{op[2]}"


def parse_op(text: str) -> OperatorId:
    """Parse operator literals like T:2,3  UL:fwd  S':2  tS:2  EnlT:2."""
    text = text.strip()
    if ":" not in text:
        raise ValueError(f"malformed operator literal {text!r}")
    name, arg = text.split(":", 1)
    if name == "T":
        try:
            i, j = (int(v) for v in arg.split(","))
        except ValueError as exc:
            raise ValueError(f"T needs two indices: {text!r}") from exc
        return ("T", i, j)
    if name == "UL":
        if arg not in ("fwd", "rev"):
            raise ValueError(f"UL direction must be fwd or rev: {text!r}")
        return ("UL", arg)
    transposed = name.startswith("t")
    if transposed:
        name = name[1:]
    family = "tau" if name.endswith("'") else "sigma"
    if name.rstrip("'") == "S":
        head = "S"
    elif name.rstrip("'") == "EnlT":
        head = "E"
    else:
        raise ValueError(f"unknown operator name {text!r}")
    try:
        n = int(arg)
    except ValueError as exc:
        raise ValueError(f"bad staircase index in {text!r}") from exc
    return (head, family, n, transposed)


def parse_sequence(text: str) -> tuple[OperatorId, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_op(part) for part in text.split(";"))


# -- group-side oracles ------------------------------------------------------------

def group_wall_cross(w: SignedPerm, i: int, j: int) -> SignedPerm:
    """Wall crossing on the group: the unique left multiple flipping the
    left-descent pattern from {j, not i} to {i, not j}."""
    n = len(w)
    des = left_descents(w)
    if j not in des or i in des:
        raise ValueError("element outside the wall-crossing domain")
    winners = []
    for idx in (i, j):
        cand = multiply(generator(n, idx), w)
        cdes = left_descents(cand)
        if i in cdes and j not in cdes:
            winners.append(cand)
    if len(winners) != 1:
        raise AssertionError(f"wall crossing not unique at {w}")
    return winners[0]


def group_ul_candidates(w: SignedPerm, direction: str) -> tuple[SignedPerm, ...]:
    """Group-side candidates for U^L: left multiples by s_1, s_2 with the
    flipped {a_1, a_2} pattern."""
    n = len(w)
    des = left_descents(w)
    want_in, want_out = (2, 1) if direction == "fwd" else (1, 2)
    if want_in not in des or want_out in des:
        return ()
    out = []
    for idx in (1, 2):
        cand = multiply(generator(n, idx), w)
        cdes = left_descents(cand)
        if want_out in cdes and want_in not in cdes:
            out.append(cand)
    return tuple(sorted(out))
