"""Lattice paths with up/down steps, height bookkeeping and flaw counting.

A path is stored as a string over ``U``/``D`` together with its prefix-sum
height profile.  All public positions are 1-based: step ``i`` goes from
``height(i - 1)`` to ``height(i)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Iterator, List, Optional

from .errors import DomainError, ParseError

_FLIP = str.maketrans("UD", "DU")
_FROM_BITS = str.maketrans("10", "UD")
_TO_BITS = str.maketrans("UD", "10")
_DELTA = {"U": 1, "D": -1}


class Step(enum.Enum):
    UP = "U"
    DOWN = "D"

    @property
    def delta(self) -> int:
        return 1 if self is Step.UP else -1

    @property
    def flipped(self) -> "Step":
        return Step.DOWN if self is Step.UP else Step.UP


class LatticePath:
    """Immutable sequence of up/down steps with a cached height profile."""

    __slots__ = ("text", "heights")

    def __init__(self, text: str = ""):
        self.text = text
        self.heights = tuple(accumulate(map(_DELTA.__getitem__, text), initial=0))

    @classmethod
    def from_steps(cls, steps: Iterable[Step]) -> "LatticePath":
        return cls("".join(s.value for s in steps))

    def __len__(self) -> int:
        return len(self.text)

    def __iter__(self) -> Iterator[Step]:
        for ch in self.text:
            yield Step(ch)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LatticePath):
            return self.text == other.text
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.text)

    def __lt__(self, other: "LatticePath") -> bool:
        return self.text < other.text

    def __add__(self, other: "LatticePath") -> "LatticePath":
        return LatticePath(self.text + other.text)

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"LatticePath({self.text!r})"

    @property
    def k(self) -> int:
        return len(self.text) // 2

    @property
    def ups(self) -> int:
        return self.text.count("U")

    def step(self, i: int) -> Step:
        if not 1 <= i <= len(self.text):
            raise IndexError(f"position {i} out of range 1..{len(self.text)}")
        return Step(self.text[i - 1])

    def height(self, i: int) -> int:
        return self.heights[i]

    def is_balanced(self) -> bool:
        """True iff the path lies in L_{2k,k}, i.e. ends at height 0."""
        return len(self.text) % 2 == 0 and self.heights[-1] == 0

    def is_raised(self) -> bool:
        """True iff the path has 2k steps of which k+1 are up, i.e. ends at height 2."""
        return len(self.text) % 2 == 0 and self.heights[-1] == 2

    def flip(self, *positions: int) -> "LatticePath":
        chars = list(self.text)
        for i in positions:
            if not 1 <= i <= len(chars):
                raise IndexError(f"position {i} out of range 1..{len(chars)}")
            chars[i - 1] = "D" if chars[i - 1] == "U" else "U"
        return LatticePath("".join(chars))


def parse_path(text: str) -> LatticePath:
    """Parse ``U``/``D`` text (or ``1``/``0`` bits, Up = 1) into a path.

    Surrounding whitespace is ignored. The reported error index is 1-based.
    """
    text = text.strip()
    for i, ch in enumerate(text, start=1):
        if ch not in "UD10":
            raise ParseError(i, ch, text)
    return LatticePath(text.translate(_FROM_BITS))


def format_path(x: LatticePath, bits: bool = False) -> str:
    return x.text.translate(_TO_BITS) if bits else x.text


def read_paths(lines: Iterable[str]) -> List[LatticePath]:
    """Parse the one-path-per-line text format; ``#`` lines and blank lines are skipped."""
    out = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        out.append(parse_path(line))
    return out


def require_balanced(x: LatticePath) -> None:
    if not x.is_balanced():
        raise DomainError(f"{x.text!r} is not in L_(2k,k): {x.ups} up-steps for length {len(x)}")


def require_raised(x: LatticePath) -> None:
    if not x.is_raised():
        raise DomainError(f"{x.text!r} is not in L_(2k,k+1): {x.ups} up-steps for length {len(x)}")


def flaws(x: LatticePath) -> int:
    """Number of down-steps starting at height <= 0."""
    require_balanced(x)
    h = x.heights
    return sum(1 for i, ch in enumerate(x.text) if ch == "D" and h[i] <= 0)


def is_dyck(x: LatticePath) -> bool:
    """True iff x is a Dyck path with zero flaws."""
    return x.is_balanced() and min(x.heights) >= 0


def count_up_at(x: LatticePath, c: int) -> int:
    """Number of up-steps starting on the line y=c."""
    return sum(1 for ch, hi in zip(x.text, x.heights) if hi == c and ch == "U")


def count_down_at(x: LatticePath, c: int) -> int:
    """Number of down-steps starting on the line y=c."""
    return sum(1 for ch, hi in zip(x.text, x.heights) if hi == c and ch == "D")


def touching_positions(x: LatticePath, kind: Step, c: int) -> List[int]:
    """Ascending positions of steps of the given kind that start or end on y=c."""
    h = x.heights
    ch_kind = kind.value
    return [
        i + 1
        for i, ch in enumerate(x.text)
        if ch == ch_kind and (h[i] == c or h[i + 1] == c)
    ]


def nth_touching(x: LatticePath, kind: Step, c: int, n: int) -> Optional[int]:
    """Position of the n-th (1-based) step of ``kind`` touching y=c, or None."""
    if n < 1:
        return None
    h = x.heights
    ch_kind = kind.value
    seen = 0
    for i, hi in enumerate(h[:-1]):
        if (hi == c or h[i + 1] == c) and x.text[i] == ch_kind:
            seen += 1
            if seen == n:
                return i + 1
    return None


def mirror(x: LatticePath) -> LatticePath:
    """Reflect at the line y=0 (swap every step)."""
    return LatticePath(x.text.translate(_FLIP))


def rev_complement(x: LatticePath) -> LatticePath:
    """Reverse and complement; reflects the path at the vertical line through its midpoint."""
    return LatticePath(x.text[::-1].translate(_FLIP))


@dataclass(frozen=True)
class CanonicalDecomposition:
    """x = Up + u + Down + v where b is the first down-step touching y=0."""

    b: int
    u: LatticePath
    v: LatticePath

    def reassemble(self) -> LatticePath:
        return LatticePath("U" + self.u.text + "D" + self.v.text)


def canonical_decomposition(x: LatticePath) -> CanonicalDecomposition:
    if len(x) == 0 or not is_dyck(x):
        raise DomainError(f"{x.text!r} is not a non-empty zero-flaw Dyck path")
    b = nth_touching(x, Step.DOWN, 0, 1)
    return CanonicalDecomposition(b, LatticePath(x.text[1 : b - 1]), LatticePath(x.text[b:]))
