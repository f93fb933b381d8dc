"""Loopless column iteration and saw-tooth enumeration of all of L_{2k,k}."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, List, Optional, Tuple

from .errors import DomainError
from .flips import FlipPermutation, pi_recursive, recover_origin
from .paths import LatticePath, is_dyck, mirror, require_balanced

# ord('U') ^ ord('D'): xor toggles a step byte in place
_TOGGLE = ord("U") ^ ord("D")


@dataclass(frozen=True)
class FlipDelta:
    up_flip: int
    down_flip: int
    resulting_flaws: int


class ColumnIterator:
    """Yields f(x), f^2(x), ..., f^(k-e)(x) after linear-time setup.

    Each ``next()`` flips two bytes of a single working buffer and returns
    the delta plus a read-only view of the buffer.  The view is live: copy it
    (``snapshot()``) if you need to keep a path.

    ``last_ops`` holds the number of primitive operations done by the most
    recent call and ``max_ops`` the maximum over all calls so far.
    """

    def __init__(self, x: LatticePath):
        require_balanced(x)
        witness = recover_origin(x)
        self.perm: FlipPermutation = pi_recursive(witness.origin)
        self.k = x.k
        self.flaws = len(witness.up_set)
        self.cursor = self.flaws + 1
        self._entries = self.perm.entries
        self._buf = bytearray(x.text, "ascii")
        self._view = memoryview(self._buf).toreadonly()
        self.last_ops = 0
        self.max_ops = 0

    @property
    def remaining(self) -> int:
        return self.k - self.cursor + 1

    @property
    def view(self) -> memoryview:
        return self._view

    def snapshot(self) -> LatticePath:
        return LatticePath(self._buf.decode("ascii"))

    def __iter__(self) -> "ColumnIterator":
        return self

    def __next__(self) -> Tuple[FlipDelta, memoryview]:
        c = self.cursor
        ops = 1
        if c > self.k:
            self.last_ops = ops
            raise StopIteration
        entries = self._entries
        down = entries[2 * c - 2]
        up = entries[2 * c - 1]
        ops += 2
        buf = self._buf
        buf[down - 1] ^= _TOGGLE
        buf[up - 1] ^= _TOGGLE
        ops += 2
        self.cursor = c + 1
        self.flaws += 1
        ops += 2
        self.last_ops = ops
        if ops > self.max_ops:
            self.max_ops = ops
        return FlipDelta(up, down, self.flaws), self._view


def column_iterator(x: LatticePath) -> ColumnIterator:
    return ColumnIterator(x)


def enumerate_column(x0: LatticePath) -> List[LatticePath]:
    """[x0, f(x0), ..., f^k(x0)] for a zero-flaw Dyck path x0."""
    if not is_dyck(x0):
        raise DomainError(f"{x0.text!r} is not a zero-flaw Dyck path")
    it = ColumnIterator(x0)
    out = [x0]
    for _ in it:
        out.append(it.snapshot())
    return out


def dyck_paths(k: int) -> Iterator[LatticePath]:
    """All zero-flaw Dyck paths with 2k steps, lexicographic with U < D."""
    if k < 0:
        raise DomainError("k must be non-negative")
    n = 2 * k
    buf = [""] * n

    def extend(i: int, height: int, ups: int) -> Iterator[LatticePath]:
        if i == n:
            yield LatticePath("".join(buf))
            return
        if ups < k:
            buf[i] = "U"
            yield from extend(i + 1, height + 1, ups + 1)
        if height > 0:
            buf[i] = "D"
            yield from extend(i + 1, height - 1, ups)

    yield from extend(0, 0, 0)


RowOrder = Callable[[int], Iterable[LatticePath]]


def iter_grid(
    k: int, row_order: Optional[RowOrder] = None
) -> Iterator[Tuple[Optional[FlipDelta], memoryview]]:
    """Saw-tooth walk through the flaw grid, one column per zero-flaw path.

    Yields ``(None, view)`` at the first path of each column and
    ``(delta, view)`` for every two-position flip inside a column.  Even
    columns (0-based) run from zero flaws down to k flaws by f, odd columns
    start at the mirror image and climb back with f^-1, which undoes the
    same position pairs in reverse order.
    """
    rows = (row_order or dyck_paths)(k)
    for col, x0 in enumerate(rows):
        if len(x0) != 2 * k or not is_dyck(x0):
            raise DomainError(f"row order produced {x0.text!r}, not a zero-flaw Dyck path of length {2 * k}")
        entries = pi_recursive(x0).entries
        if col % 2 == 0:
            buf = bytearray(x0.text, "ascii")
            view = memoryview(buf).toreadonly()
            yield None, view
            for i in range(k):
                down, up = entries[2 * i], entries[2 * i + 1]
                buf[down - 1] ^= _TOGGLE
                buf[up - 1] ^= _TOGGLE
                yield FlipDelta(up, down, i + 1), view
        else:
            buf = bytearray(mirror(x0).text, "ascii")
            view = memoryview(buf).toreadonly()
            yield None, view
            for i in range(k - 1, -1, -1):
                down, up = entries[2 * i], entries[2 * i + 1]
                buf[down - 1] ^= _TOGGLE
                buf[up - 1] ^= _TOGGLE
                yield FlipDelta(up, down, i), view


def sawtooth_enumerate(k: int, row_order: Optional[RowOrder] = None) -> Iterator[LatticePath]:
    """Every path of L_{2k,k} exactly once, column by column."""
    for _, view in iter_grid(k, row_order):
        yield LatticePath(view.tobytes().decode("ascii"))
