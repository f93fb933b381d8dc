"""Flip-order permutations and origin recovery.

Applying f repeatedly to a zero-flaw Dyck path x flips every step exactly
once.  The order of flipped positions, pi(x), can be obtained either by
literally iterating g and h (``pi_direct``, quadratic) or from the hill
structure of x in linear time (``pi_recursive``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .bijections import apply_g, apply_h
from .errors import DomainError
from .paths import LatticePath, count_down_at, is_dyck, require_balanced


@dataclass(frozen=True)
class FlipPermutation:
    """Positions flipped by g, h, g, h, ... along a full column.

    Entries at odd 1-based indices are down-steps turned up by g, entries at
    even indices are up-steps turned down by h.
    """

    entries: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def pair(self, i: int) -> Tuple[int, int]:
        """(down_flip, up_flip) of the i-th application of f, 1-based."""
        return self.entries[2 * i - 2], self.entries[2 * i - 1]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


@dataclass(frozen=True)
class OriginWitness:
    up_set: FrozenSet[int]
    down_set: FrozenSet[int]
    origin: LatticePath


@dataclass(frozen=True)
class HillMatching:
    """partner[i] is the matching step of step i (1-based), or 0 if unmatched.

    An up-step i is matched with the first later down-step j returning to
    height(i-1); every step of a zero-flaw Dyck path is matched.
    """

    partner: Tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.partner[i]


class DyckSubpath(NamedTuple):
    start: int
    end: int
    level: int


@dataclass
class PiStats:
    frames: int = 0
    emits: int = 0


def hill_matching(x: LatticePath) -> HillMatching:
    partner = [0] * (len(x) + 1)
    stack: List[int] = []
    push = stack.append
    pop = stack.pop
    for i, ch in enumerate(x.text, start=1):
        if ch == "U":
            push(i)
        elif stack:
            j = pop()
            partner[i] = j
            partner[j] = i
    return HillMatching(tuple(partner))


def _require_dyck(x: LatticePath) -> None:
    if not is_dyck(x):
        raise DomainError(f"{x.text!r} is not a zero-flaw Dyck path")


def pi_direct(x: LatticePath) -> FlipPermutation:
    """pi(x) by applying g and h k times; quadratic, used as the reference."""
    _require_dyck(x)
    entries: List[int] = []
    cur = x
    for _ in range(x.k):
        g = apply_g(cur)
        h = apply_h(g.path)
        entries += (g.position, h.position)
        cur = h.path
    return FlipPermutation(tuple(entries))


def pi_recursive(x: LatticePath, stats: Optional[PiStats] = None) -> FlipPermutation:
    """pi(x) in linear time from the hill matching of x.

    A forward segment [lo, hi] starts with an up-step at lo whose partner p
    is flipped first, then the inner segment (lo, p) is handled backwards,
    then lo, then the rest (p, hi] forwards.  A backward segment is the
    mirror image: partner of hi first, inner part forwards, hi, then the
    rest [lo, p) backwards.  Bare ints on the work stack are pending emits.
    """
    _require_dyck(x)
    n = len(x)
    partner = hill_matching(x).partner
    out: List[int] = []
    emit = out.append
    stack: list = [(1, n, False)] if n else []
    push = stack.append
    pop = stack.pop
    frames = 0
    while stack:
        item = pop()
        if type(item) is int:
            emit(item)
            continue
        lo, hi, backward = item
        frames += 1
        if backward:
            p = partner[hi]
            emit(p)
            if p > lo:
                push((lo, p - 1, True))
            push(hi)
            if hi - 1 > p:
                push((p + 1, hi - 1, False))
        else:
            p = partner[lo]
            emit(p)
            if p < hi:
                push((p + 1, hi, False))
            push(lo)
            if p - 1 > lo:
                push((lo + 1, p - 1, True))
    if stats is not None:
        stats.frames += frames
        stats.emits += len(out)
    return FlipPermutation(tuple(out))


def recover_origin(x: LatticePath) -> OriginWitness:
    """The zero-flaw path x0 with f^e(x0) = x, and the positions where they differ."""
    require_balanced(x)
    h = x.heights
    text = x.text
    quota = count_down_at(x, 0)
    ups = []
    downs = []
    for i, ch in enumerate(text):
        if ch == "U":
            if h[i + 1] <= 0:
                ups.append(i + 1)
        elif h[i] <= -1:
            downs.append(i + 1)
        elif quota and (h[i] == 0 or h[i + 1] == 0):
            # one of the first d_0(x) down-steps touching y=0
            downs.append(i + 1)
            quota -= 1
    chars = list(text)
    for i in ups:
        chars[i - 1] = "D"
    for i in downs:
        chars[i - 1] = "U"
    return OriginWitness(frozenset(ups), frozenset(downs), LatticePath("".join(chars)))


def is_alternating(p: Sequence[int]) -> bool:
    """Descents at even 1-based indices, ascents at odd indices >= 3."""
    seq = list(p)
    for i in range(1, len(seq)):
        # seq[i] is the entry at 1-based index i+1
        if (i + 1) % 2 == 0:
            if not seq[i - 1] > seq[i]:
                return False
        elif not seq[i - 1] < seq[i]:
            return False
    return True


def dyck_subpaths(x: LatticePath) -> List[DyckSubpath]:
    """Every run of consecutive sibling hills, as (start, end, level).

    These are exactly the subpaths that start and end on a common line y=c
    without a down-step going below it.
    """
    _require_dyck(x)
    partner = hill_matching(x).partner
    h = x.heights
    text = x.text
    n = len(x)
    out = []
    for i in range(1, n + 1):
        if text[i - 1] != "U":
            continue
        level = h[i - 1]
        j = i
        while j <= n and text[j - 1] == "U" and h[j - 1] == level:
            end = partner[j]
            out.append(DyckSubpath(i, end, level))
            j = end + 1
    out.sort()
    return out
