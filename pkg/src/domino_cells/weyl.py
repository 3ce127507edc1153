"""The hyperoctahedral Weyl group W(B_n) = W(C_n) as signed permutations.

Elements are tuples (w(1), ..., w(n)) of nonzero integers whose absolute
values permute 1..n, extended to negatives by w(-i) = -w(i).  Generators:
s_1 flips the sign of the value at position 1; s_i (i >= 2) swaps the
values at positions i-1 and i.  Length, descents, Bruhat order, reduced
words, and signed-cycle-type conjugacy classes live here.
"""

from __future__ import annotations

import itertools
from functools import cache

from .shapes import Shape

SignedPerm = tuple[int, ...]


def check_word(images) -> SignedPerm:
    w = tuple(int(v) for v in images)
    if sorted(abs(v) for v in w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a signed permutation: {w}")
    return w


def parse_word(text: str) -> SignedPerm:
    return check_word(text.strip().split(","))


def format_word(w: SignedPerm) -> str:
    return ",".join(str(v) for v in w)


def identity(n: int) -> SignedPerm:
    return tuple(range(1, n + 1))


def apply(w: SignedPerm, i: int) -> int:
    """Value w(i), defined for i in +-1..+-n."""
    if i > 0:
        return w[i - 1]
    return -w[-i - 1]


def multiply(u: SignedPerm, v: SignedPerm) -> SignedPerm:
    """Composition (u v)(i) = u(v(i))."""
    if len(u) != len(v):
        raise ValueError("rank mismatch")
    return tuple(apply(u, v[i]) for i in range(len(u)))


def inverse(u: SignedPerm) -> SignedPerm:
    out = [0] * len(u)
    for i, img in enumerate(u, start=1):
        if img > 0:
            out[img - 1] = i
        else:
            out[-img - 1] = -i
    return tuple(out)


def generator(n: int, i: int) -> SignedPerm:
    """Simple reflection s_i of W(B_n)."""
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range 1..{n}")
    w = list(range(1, n + 1))
    if i == 1:
        w[0] = -1
    else:
        w[i - 2], w[i - 1] = w[i - 1], w[i - 2]
    return tuple(w)


def generators(n: int) -> tuple[SignedPerm, ...]:
    return tuple(generator(n, i) for i in range(1, n + 1))


def length(w: SignedPerm) -> int:
    """Coxeter length: inversions plus the sum of negated values."""
    n = len(w)
    inv = sum(
        1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j]
    )
    neg = sum(-v for v in w if v < 0)
    return inv + neg


def right_descents(w: SignedPerm) -> frozenset[int]:
    out = set()
    if w[0] < 0:
        out.add(1)
    for i in range(2, len(w) + 1):
        if w[i - 2] > w[i - 1]:
            out.add(i)
    return frozenset(out)


def left_descents(w: SignedPerm) -> frozenset[int]:
    return right_descents(inverse(w))


def descents(w: SignedPerm, side: str) -> frozenset[int]:
    if side == "left":
        return left_descents(w)
    if side == "right":
        return right_descents(w)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def reduced_word(w: SignedPerm) -> tuple[int, ...]:
    """A reduced word, leftmost-descent-first: w = s_{i1} ... s_{ik}."""
    n = len(w)
    word = []
    cur = w
    while True:
        des = right_descents(cur)
        if not des:
            break
        i = min(des)
        word.append(i)
        cur = multiply(cur, generator(n, i))
    return tuple(reversed(word))


@cache
def enumerate_group(n: int) -> tuple[SignedPerm, ...]:
    """All 2^n n! elements, sorted by (length, word) for determinism."""
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            out.append(tuple(s * p for s, p in zip(signs, perm)))
    out.sort(key=lambda w: (length(w), w))
    return tuple(out)


def reflections(n: int) -> tuple[SignedPerm, ...]:
    """All n^2 reflections of W(B_n)."""
    out = []
    for i in range(1, n + 1):
        w = list(identity(n))
        w[i - 1] = -i
        out.append(tuple(w))
        for j in range(i + 1, n + 1):
            w = list(identity(n))
            w[i - 1], w[j - 1] = j, i
            out.append(tuple(w))
            w = list(identity(n))
            w[i - 1], w[j - 1] = -j, -i
            out.append(tuple(w))
    return tuple(out)


@cache
def _bruhat_down(n: int) -> dict[SignedPerm, frozenset[SignedPerm]]:
    """Map w -> {u : u <= w} via the covering relation."""
    elements = enumerate_group(n)
    refl = reflections(n)
    down: dict[SignedPerm, frozenset[SignedPerm]] = {}
    for w in elements:  # ordered by increasing length
        lw = length(w)
        below = {w}
        for t in refl:
            u = multiply(w, t)
            if length(u) == lw - 1:
                below |= down[u]
        down[w] = frozenset(below)
    return down


def bruhat_leq(u: SignedPerm, v: SignedPerm) -> bool:
    if len(u) != len(v):
        raise ValueError("rank mismatch")
    return u in _bruhat_down(len(u))[v]


def bruhat_interval(u: SignedPerm, v: SignedPerm) -> tuple[SignedPerm, ...]:
    down = _bruhat_down(len(u))
    return tuple(sorted(
        (z for z in down[v] if u in down[z]),
        key=lambda w: (length(w), w),
    ))


def subword_leq(u: SignedPerm, v: SignedPerm) -> bool:
    """Independent Bruhat test: u is a subword product of a reduced word of v."""
    n = len(u)
    reachable = {identity(n)}
    for i in reduced_word(v):
        s = generator(n, i)
        reachable |= {multiply(x, s) for x in reachable}
    return u in reachable


def longest_element(n: int) -> SignedPerm:
    return tuple(-i for i in range(1, n + 1))


# -- conjugacy classes ---------------------------------------------------------

def signed_cycle_type(w: SignedPerm) -> tuple[Shape, Shape]:
    """(positive cycle type, negative cycle type) of a signed permutation."""
    n = len(w)
    seen = [False] * (n + 1)
    pos, neg = [], []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        sign = 1
        size = 0
        i = start
        while not seen[i]:
            seen[i] = True
            size += 1
            v = w[i - 1]
            if v < 0:
                sign = -sign
            i = abs(v)
        (pos if sign > 0 else neg).append(size)
    return (
        tuple(sorted(pos, reverse=True)),
        tuple(sorted(neg, reverse=True)),
    )


def class_representative(alpha: Shape, beta: Shape) -> SignedPerm:
    """Canonical element with the given signed cycle type."""
    n = sum(alpha) + sum(beta)
    w = [0] * n
    next_pos = 1

    def install(size: int, negative: bool):
        nonlocal next_pos
        idx = list(range(next_pos, next_pos + size))
        for a, b in zip(idx, idx[1:]):
            w[a - 1] = b
        w[idx[-1] - 1] = -idx[0] if negative else idx[0]
        next_pos += size

    for part in alpha:
        install(part, False)
    for part in beta:
        install(part, True)
    return tuple(w)


@cache
def conjugacy_classes(n: int) -> tuple[tuple[tuple[Shape, Shape], SignedPerm, int], ...]:
    """All classes as (signed cycle type, representative, class size)."""
    from .shapes import partitions_of

    order = (2 ** n) * _factorial(n)
    out = []
    for k in range(n + 1):
        for alpha in partitions_of(k):
            for beta in partitions_of(n - k):
                size = order // _centralizer_order(alpha, beta)
                out.append(((alpha, beta), class_representative(alpha, beta), size))
    out.sort(key=lambda item: item[0])
    return tuple(out)


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _centralizer_order(alpha: Shape, beta: Shape) -> int:
    out = 1
    for parts in (alpha, beta):
        mult: dict[int, int] = {}
        for p in parts:
            mult[p] = mult.get(p, 0) + 1
        for p, m in mult.items():
            out *= (2 * p) ** m * _factorial(m)
    return out
