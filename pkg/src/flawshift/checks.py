"""Property checks over every path at a given k, one row per proven property.

Each check returns a ``CheckResult``; a check passes iff it examined at
least one case (or had nothing to examine) and found zero violations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from .bijections import (
    apply_f,
    apply_f_classic,
    apply_f_inverse,
    apply_g,
    apply_g_prime,
    apply_h,
    apply_h_prime,
)
from .factors import middle_factor, odd_factor, verify_factor
from .flips import dyck_subpaths, is_alternating, pi_direct, pi_recursive, recover_origin
from .generator import ColumnIterator
from .oracle import (
    catalan,
    count_flaws,
    enumerate_lattice_paths,
    enumerate_raised_paths,
    hamming,
    random_dyck_path,
    verify_chung_feller,
)
from .paths import LatticePath, Step, mirror, rev_complement, touching_positions


@dataclass
class CheckResult:
    name: str
    k: int
    checked: int = 0
    violations: int = 0
    first: Optional[str] = None
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def fail(self, msg: str) -> None:
        self.violations += 1
        if self.first is None:
            self.first = msg

    def row(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status}  {self.name:<28} k={self.k:<3} checked={self.checked:<8} violations={self.violations}"
        if self.first:
            line += f"  first: {self.first}"
        for note in self.notes:
            line += f"  [{note}]"
        return line


def _by_flaws(k: int) -> Dict[int, List[LatticePath]]:
    classes: Dict[int, List[LatticePath]] = {e: [] for e in range(k + 1)}
    for x in enumerate_lattice_paths(k):
        classes[count_flaws(x)].append(x)
    return classes


def check_chung_feller(k: int) -> CheckResult:
    res = CheckResult("chung-feller classes", k)
    part, ok = verify_chung_feller(k)
    res.checked = sum(part.sizes())
    if not ok:
        res.fail(f"class sizes {part.sizes()} != C_{k} = {catalan(k)}")
    return res


def check_inverse_pairs(k: int) -> CheckResult:
    """h' undoes g on L_{2k,k} minus D^k, and g' undoes h on L_{2k,k+1}."""
    res = CheckResult("g/h' and h/g' inverses", k)
    for x in enumerate_lattice_paths(k):
        if count_flaws(x) == k:
            continue
        res.checked += 1
        y = apply_g(x)
        back = apply_h_prime(y.path)
        if back.path != x or back.position != y.position:
            res.fail(f"h'(g({x})) = {back.path}")
    for y in enumerate_raised_paths(k):
        res.checked += 1
        x = apply_h(y)
        back = apply_g_prime(x.path)
        if back.path != y or back.position != x.position:
            res.fail(f"g'(h({y})) = {back.path}")
    return res


def _ups_touching_one_between(x: LatticePath, lo: int, hi: int) -> List[int]:
    return [i for i in touching_positions(x, Step.UP, 1) if lo < i < hi]


def check_g_then_h_positions(k: int) -> CheckResult:
    """pos(h, g(x)) < pos(g, x) with no up-step touching y=1 strictly between."""
    res = CheckResult("g-then-h flip positions", k)
    for x in enumerate_lattice_paths(k):
        if count_flaws(x) == k:
            continue
        res.checked += 1
        g = apply_g(x)
        a = apply_h(g.path).position
        b = g.position
        if not a < b:
            res.fail(f"{x}: a={a} >= b={b}")
        elif _ups_touching_one_between(x, a, b) or _ups_touching_one_between(g.path, a, b):
            res.fail(f"{x}: up-step touching y=1 between {a} and {b}")
    return res


def check_h_then_g_positions(k: int) -> CheckResult:
    """pos(h, y) < pos(g, h(y)) with no down-step of h(y) touching y=0 between.

    g is undefined when h(y) already has k flaws; those inputs are skipped
    and counted in a note.
    """
    res = CheckResult("h-then-g flip positions", k)
    skipped = 0
    for y in enumerate_raised_paths(k):
        hy = apply_h(y)
        if count_flaws(hy.path) == k:
            skipped += 1
            continue
        res.checked += 1
        a = hy.position
        b = apply_g(hy.path).position
        if not a < b:
            res.fail(f"{y}: a={a} >= b={b}")
        elif [i for i in touching_positions(hy.path, Step.DOWN, 0) if a < i < b]:
            res.fail(f"{y}: down-step touching y=0 between {a} and {b}")
    res.notes.append(f"{skipped} inputs with h(y) at k flaws skipped")
    return res


def check_f_bijection(k: int) -> CheckResult:
    """f maps flaw class e onto class e+1 by flipping exactly two steps."""
    res = CheckResult("f minimum-change bijection", k)
    classes = _by_flaws(k)
    for e in range(k):
        image = set()
        for x in classes[e]:
            res.checked += 1
            r = apply_f(x)
            y = r.path
            image.add(y)
            if hamming(x, y) != 2:
                res.fail(f"hamming({x}, {y}) = {hamming(x, y)}")
            if not r.up_flip < r.down_flip:
                res.fail(f"{x}: up_flip {r.up_flip} >= down_flip {r.down_flip}")
            if any(hy > hx for hx, hy in zip(x.heights, y.heights)):
                res.fail(f"{x}: f shifts a step up")
            if apply_f_inverse(y).path != x:
                res.fail(f"f^-1(f({x})) != {x}")
        if image != set(classes[e + 1]):
            res.fail(f"image of class {e} is not class {e + 1}")
    return res


def check_flaw_increment(k: int) -> CheckResult:
    res = CheckResult("f adds exactly one flaw", k)
    for x in enumerate_lattice_paths(k):
        e = count_flaws(x)
        if e == k:
            continue
        res.checked += 1
        if count_flaws(apply_f(x).path) != e + 1:
            res.fail(f"{x}")
    return res


def _f_power(x: LatticePath, times: int) -> LatticePath:
    for _ in range(times):
        x = apply_f(x).path
    return x


def check_origin_recovery(k: int) -> CheckResult:
    res = CheckResult("origin recovery", k)
    for x in enumerate_lattice_paths(k):
        res.checked += 1
        e = count_flaws(x)
        w = recover_origin(x)
        if len(w.up_set) != e or len(w.down_set) != e:
            res.fail(f"{x}: |U|={len(w.up_set)} |D|={len(w.down_set)} e={e}")
        elif count_flaws(w.origin) != 0 or _f_power(w.origin, e) != x:
            res.fail(f"{x}: origin {w.origin} does not reach x")
    return res


def _dyck_paths(k: int) -> List[LatticePath]:
    return [x for x in enumerate_lattice_paths(k) if count_flaws(x) == 0]


def check_alternating(k: int) -> CheckResult:
    res = CheckResult("pi alternating, f^k = mirror", k)
    for x in _dyck_paths(k):
        res.checked += 1
        p = pi_direct(x).entries
        if sorted(p) != list(range(1, 2 * k + 1)) or not is_alternating(p):
            res.fail(f"pi({x}) = {p}")
        if _f_power(x, k) != mirror(x):
            res.fail(f"f^k({x}) != mirror")
    return res


def check_pi_recursive(k: int, samples: int = 0, seed: int = 0) -> CheckResult:
    """Linear-time pi agrees with literal iteration, exhaustively or on random paths."""
    res = CheckResult("linear-time pi == direct pi", k)
    if samples:
        rng = random.Random(seed)
        paths = (random_dyck_path(k, rng) for _ in range(samples))
        res.notes.append(f"{samples} random paths, seed {seed}")
    else:
        paths = _dyck_paths(k)
    for x in paths:
        res.checked += 1
        if pi_recursive(x) != pi_direct(x):
            res.fail(f"{x}")
    return res


def check_subpath_restriction(k: int) -> CheckResult:
    """Every Dyck subpath is flipped as a consecutive block in the predicted order."""
    res = CheckResult("subpath restriction of pi", k)
    cache: Dict[LatticePath, tuple] = {}

    def pi_of(p: LatticePath) -> tuple:
        if p not in cache:
            cache[p] = pi_direct(p).entries
        return cache[p]

    for x in _dyck_paths(k):
        p = pi_of(x)
        for start, end, level in dyck_subpaths(x):
            res.checked += 1
            idx = [i for i, v in enumerate(p) if start <= v <= end]
            if idx != list(range(idx[0], idx[0] + len(idx))):
                res.fail(f"{x} [{start},{end}]: not consecutive")
                continue
            restricted = tuple(p[i] - (start - 1) for i in idx)
            s = LatticePath(x.text[start - 1 : end])
            if level % 2 == 0:
                expected = pi_of(s)
            else:
                expected = tuple(len(s) + 1 - v for v in pi_of(rev_complement(s)))
            if restricted != expected:
                res.fail(f"{x} [{start},{end}] level {level}: {restricted} != {expected}")
    return res


def check_column_replay(k: int) -> CheckResult:
    """The loopless iterator reproduces literal f iteration from every start path."""
    res = CheckResult("loopless column replay", k)
    for x in enumerate_lattice_paths(k):
        it = ColumnIterator(x)
        cur = x
        for delta, view in it:
            res.checked += 1
            r = apply_f(cur)
            cur = r.path
            if view.tobytes().decode() != cur.text or (delta.up_flip, delta.down_flip) != (r.up_flip, r.down_flip):
                res.fail(f"{x}: replay diverges at {cur}")
                break
        if count_flaws(cur) != k:
            res.fail(f"{x}: column ends at {cur}")
    return res


def check_odd_factor(k: int) -> CheckResult:
    res = CheckResult("odd graph cycle factor", k)
    rep = verify_factor(odd_factor(k))
    res.checked = rep.covered
    if not rep.passed:
        res.fail(rep.violation or "failed")
    if rep.cycle_count != catalan(k) or set(rep.cycle_lengths) != {2 * k + 1}:
        res.fail(f"{rep.cycle_count} cycles of lengths {sorted(set(rep.cycle_lengths))}")
    return res


def check_middle_factor(k: int) -> CheckResult:
    res = CheckResult("middle levels cycle factor", k)
    rep = verify_factor(middle_factor(k))
    res.checked = rep.covered
    if not rep.passed:
        res.fail(rep.violation or "failed")
    if rep.cycle_count != catalan(k) or set(rep.cycle_lengths) != {4 * k + 2}:
        res.fail(f"{rep.cycle_count} cycles of lengths {sorted(set(rep.cycle_lengths))}")
    return res


def check_classic(k: int) -> CheckResult:
    """f' is a bijection between consecutive flaw classes and is not minimum-change."""
    res = CheckResult("classic f' contrast", k)
    classes = _by_flaws(k)
    widest = 0
    for e in range(k):
        image = set()
        for x in classes[e]:
            res.checked += 1
            y = apply_f_classic(x)
            image.add(y)
            widest = max(widest, hamming(x, y))
        if image != set(classes[e + 1]):
            res.fail(f"image of class {e} is not class {e + 1}")
    res.notes.append(f"max hamming {widest}")
    if k >= 2 and widest <= 2:
        res.fail("no input with hamming distance > 2")
    return res


CHECKS: Dict[str, Callable[[int], CheckResult]] = {
    "chung-feller": check_chung_feller,
    "inverses": check_inverse_pairs,
    "g-h-positions": check_g_then_h_positions,
    "h-g-positions": check_h_then_g_positions,
    "flaw-increment": check_flaw_increment,
    "f-bijection": check_f_bijection,
    "origin": check_origin_recovery,
    "alternating": check_alternating,
    "pi-linear": check_pi_recursive,
    "subpath": check_subpath_restriction,
    "column": check_column_replay,
    "odd-factor": check_odd_factor,
    "middle-factor": check_middle_factor,
    "classic": check_classic,
}


def run_all(k: int, names: Optional[List[str]] = None, jobs: int = 1) -> List[CheckResult]:
    selected = [CHECKS[n] for n in (names or CHECKS)]
    if jobs <= 1:
        return [check(k) for check in selected]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(check, k) for check in selected]
        return [f.result() for f in futures]
