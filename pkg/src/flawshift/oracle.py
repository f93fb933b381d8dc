"""Brute-force ground truth: exhaustive enumeration and exact counting."""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Tuple

from .errors import DomainError
from .paths import LatticePath

DEFAULT_MAX_K = 10
INT64_MAX = 2**63 - 1


def max_k() -> int:
    """Exhaustive-enumeration cap, overridable by FLAWSHIFT_MAX_K."""
    raw = os.environ.get("FLAWSHIFT_MAX_K")
    if raw is None:
        return DEFAULT_MAX_K
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"FLAWSHIFT_MAX_K must be an integer, got {raw!r}") from None


def enumerate_lattice_paths(k: int, cap: Optional[int] = None) -> List[LatticePath]:
    """All binomial(2k, k) paths with k up-steps, lexicographic with U < D."""
    cap = max_k() if cap is None else cap
    if k < 0:
        raise DomainError("k must be non-negative")
    if k > cap:
        raise DomainError(f"refusing to enumerate L_(2k,k) for k={k} > cap {cap} (set FLAWSHIFT_MAX_K to raise it)")
    n = 2 * k
    out = []
    for ups in combinations(range(n), k):
        chars = ["D"] * n
        for i in ups:
            chars[i] = "U"
        out.append(LatticePath("".join(chars)))
    return out


def catalan(k: int, limit: int = INT64_MAX) -> int:
    """C_k = binomial(2k, k) / (k + 1), refusing results above ``limit``."""
    if k < 0:
        raise DomainError("k must be non-negative")
    c = comb(2 * k, k) // (k + 1)
    if c > limit:
        raise OverflowError(f"C_{k} = {c} exceeds {limit}")
    return c


def count_flaws(x: LatticePath) -> int:
    """Flaw count by walking the steps; independent of ``paths.flaws``."""
    height = 0
    count = 0
    for ch in x.text:
        if ch == "D":
            if height <= 0:
                count += 1
            height -= 1
        else:
            height += 1
    return count


@dataclass
class FlawPartition:
    k: int
    classes: Dict[int, List[LatticePath]]

    def sizes(self) -> List[int]:
        return [len(self.classes.get(e, [])) for e in range(self.k + 1)]


def verify_chung_feller(k: int, cap: Optional[int] = None) -> Tuple[FlawPartition, bool]:
    """Partition L_{2k,k} by flaw count; passes iff every class has C_k paths."""
    classes: Dict[int, List[LatticePath]] = {e: [] for e in range(k + 1)}
    for x in enumerate_lattice_paths(k, cap):
        classes[count_flaws(x)].append(x)
    part = FlawPartition(k, classes)
    target = catalan(k)
    return part, all(size == target for size in part.sizes())


def hamming(x: LatticePath, y: LatticePath) -> int:
    if len(x) != len(y):
        raise DomainError(f"length mismatch: {len(x)} vs {len(y)}")
    return sum(a != b for a, b in zip(x.text, y.text))


def enumerate_raised_paths(k: int, cap: Optional[int] = None) -> List[LatticePath]:
    """All binomial(2k, k+1) paths with 2k steps and k+1 up-steps."""
    cap = max_k() if cap is None else cap
    if k > cap:
        raise DomainError(f"refusing to enumerate L_(2k,k+1) for k={k} > cap {cap}")
    n = 2 * k
    out = []
    for ups in combinations(range(n), k + 1):
        chars = ["D"] * n
        for i in ups:
            chars[i] = "U"
        out.append(LatticePath("".join(chars)))
    return out


def random_lattice_path(k: int, rng) -> LatticePath:
    chars = ["U"] * k + ["D"] * k
    rng.shuffle(chars)
    return LatticePath("".join(chars))


def random_dyck_path(k: int, rng) -> LatticePath:
    """Rotate a random balanced path to start right after its first global minimum."""
    text = random_lattice_path(k, rng).text
    height = low = 0
    cut = 0
    for i, ch in enumerate(text, start=1):
        height += 1 if ch == "U" else -1
        if height < low:
            low, cut = height, i
    return LatticePath(text[cut:] + text[:cut])
