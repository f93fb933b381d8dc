"""Cycle factors of the odd graph O_{2k+1} and the middle levels graph M_{2k+1}.

Every column x0, f(x0), ..., f^k(x0) of the flaw grid, together with the
intermediate paths g(f^i(x0)), becomes one cycle of length 2k+1 in the odd
graph once the intermediate (k+1)-sets are complemented and extended by the
extra element 2k+1.  Doubling those odd cycles gives cycles of length 4k+2
in the middle levels graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterator, List, Optional, Sequence, Tuple

from .bijections import apply_g, apply_h
from .errors import DomainError
from .flips import pi_recursive
from .generator import dyck_paths
from .paths import LatticePath, is_dyck

VertexSet = Tuple[int, ...]
FactorCycle = Tuple[VertexSet, ...]

ODD = "odd"
MIDDLE = "middle_levels"

# beyond this k the coverage bitmap (binomial(2k+1, k) entries) is not built
COVERAGE_MAX_K = 12


@dataclass
class CycleFactor:
    kind: str
    k: int
    cycles: List[FactorCycle]


@dataclass
class FactorReport:
    passed: bool
    kind: str
    k: int
    cycle_count: int
    cycle_lengths: List[int]
    covered: int
    order: int
    coverage_checked: bool
    violation: Optional[str] = None
    notes: List[str] = field(default_factory=list)

    def summary(self) -> str:
        lengths = sorted(set(self.cycle_lengths))
        length = lengths[0] if len(lengths) == 1 else lengths
        status = "pass" if self.passed else "FAIL"
        cov = f"{self.covered}/{self.order}"
        if not self.coverage_checked:
            cov += " (counted, not checked)"
        line = f"{status}: {self.kind} k={self.k}, {self.cycle_count} cycles x length {length}, coverage {cov}"
        if self.violation:
            line += f"; first violation: {self.violation}"
        return line


def path_to_set(x: LatticePath) -> VertexSet:
    """Positions of the up-steps."""
    return tuple(i for i, ch in enumerate(x.text, start=1) if ch == "U")


def _complement_plus(s: VertexSet, k: int) -> VertexSet:
    """([2k] \\ s) + {2k+1}."""
    inside = set(s)
    return tuple(i for i in range(1, 2 * k + 1) if i not in inside) + (2 * k + 1,)


def odd_cycle(x: LatticePath) -> FactorCycle:
    """The (2k+1)-cycle of O_{2k+1} built from the column of x by literal g/h steps."""
    if not is_dyck(x) or len(x) == 0:
        raise DomainError(f"{x.text!r} is not a non-empty zero-flaw Dyck path")
    k = x.k
    out = [path_to_set(x)]
    cur = x
    for _ in range(k):
        y = apply_g(cur).path
        cur = apply_h(y).path
        out.append(_complement_plus(path_to_set(y), k))
        out.append(path_to_set(cur))
    return tuple(out)


def _odd_cycle_replay(x: LatticePath) -> FactorCycle:
    """Same cycle as ``odd_cycle`` but driven by the flip permutation of x."""
    k = x.k
    entries = pi_recursive(x).entries
    members = [False] * (2 * k + 2)
    for i, ch in enumerate(x.text, start=1):
        members[i] = ch == "U"
    top = 2 * k + 1

    def current() -> VertexSet:
        return tuple(i for i in range(1, top) if members[i])

    out = [current()]
    for i in range(k):
        down, up = entries[2 * i], entries[2 * i + 1]
        members[down] = True
        out.append(tuple(j for j in range(1, top) if not members[j]) + (top,))
        members[up] = False
        out.append(current())
    return tuple(out)


def iter_odd_cycles(k: int) -> Iterator[FactorCycle]:
    for x in dyck_paths(k):
        yield _odd_cycle_replay(x)


def odd_factor(k: int) -> CycleFactor:
    if k < 1:
        raise DomainError("k must be at least 1")
    return CycleFactor(ODD, k, list(iter_odd_cycles(k)))


def middle_levels_double(c: Sequence[VertexSet], k: Optional[int] = None) -> FactorCycle:
    """Turn an odd cycle (x1, ..., xl) of O_{2k+1} into a 2l-cycle of M_{2k+1}.

    The result walks around c twice, complementing every second vertex:
    (x1, ~x2, x3, ..., xl, ~x1, x2, ..., ~xl).
    """
    length = len(c)
    if length < 3 or length % 2 == 0:
        raise DomainError(f"cycle length must be odd and at least 3, got {length}")
    if k is None:
        k = len(c[0])
    ground = range(1, 2 * k + 2)
    out = []
    for i in range(2 * length):
        v = c[i % length]
        if i % 2:
            inside = set(v)
            v = tuple(j for j in ground if j not in inside)
        out.append(tuple(v))
    return tuple(out)


def middle_factor(k: int) -> CycleFactor:
    if k < 1:
        raise DomainError("k must be at least 1")
    return CycleFactor(MIDDLE, k, [middle_levels_double(c, k) for c in iter_odd_cycles(k)])


def _mask(v: VertexSet) -> int:
    m = 0
    for i in v:
        m |= 1 << i
    return m


def _colex_rank(v: VertexSet) -> int:
    # v sorted ascending, elements 1-based
    return sum(comb(e - 1, j + 1) for j, e in enumerate(v))


def graph_order(kind: str, k: int) -> int:
    n = comb(2 * k + 1, k)
    return n if kind == ODD else 2 * n


def verify_factor(fac: CycleFactor) -> FactorReport:
    """Check a cycle factor and report the first violation found.

    Checks vertex validity, adjacency along every cycle, distinctness inside
    each cycle, equal cycle lengths, disjointness across cycles and total
    coverage.  For k > COVERAGE_MAX_K the cross-cycle checks are skipped and
    only the vertex count is compared with the graph order.
    """
    k = fac.k
    kind = fac.kind
    if kind not in (ODD, MIDDLE):
        raise DomainError(f"unknown graph kind {kind!r}")
    top = 2 * k + 1
    order = graph_order(kind, k)
    lengths = [len(c) for c in fac.cycles]
    covered = sum(lengths)
    check_coverage = k <= COVERAGE_MAX_K
    report = FactorReport(True, kind, k, len(fac.cycles), lengths, covered, order, check_coverage)
    if not check_coverage:
        report.notes.append(f"k > {COVERAGE_MAX_K}: cross-cycle disjointness and coverage not checked, only counted")

    def fail(msg: str) -> FactorReport:
        report.passed = False
        report.violation = msg
        return report

    sizes = (k,) if kind == ODD else (k, k + 1)
    base = comb(top, k)
    seen = bytearray(order) if check_coverage else None

    for ci, cyc in enumerate(fac.cycles):
        masks = []
        for v in cyc:
            if len(v) not in sizes or any(not 1 <= e <= top for e in v) or list(v) != sorted(set(v)):
                return fail(f"cycle {ci}: invalid vertex {set(v) or '{}'}")
            masks.append(_mask(v))
        if len(set(masks)) != len(masks):
            return fail(f"cycle {ci}: repeated vertex")
        n = len(cyc)
        if n < 3:
            return fail(f"cycle {ci}: length {n} < 3")
        for i in range(n):
            a, b = masks[i], masks[(i + 1) % n]
            if kind == ODD:
                ok = a & b == 0
            else:
                ok = a != b and (a & b == a or a & b == b)
            if not ok:
                return fail(f"cycle {ci}: {set(cyc[i])} and {set(cyc[(i + 1) % n])} not adjacent")
        if seen is not None:
            for v in cyc:
                r = _colex_rank(v) + (base if len(v) == k + 1 else 0)
                if seen[r]:
                    return fail(f"vertex {set(v)} appears in more than one cycle (again in cycle {ci})")
                seen[r] = 1
    if len(set(lengths)) > 1:
        return fail(f"cycle lengths differ: {sorted(set(lengths))}")
    if covered != order:
        return fail(f"covered {covered} vertices, graph has {order}")
    return report


def _label(v: VertexSet) -> str:
    return "{" + ",".join(map(str, v)) + "}"


def format_cycle(c: FactorCycle) -> str:
    return " ".join(_label(v) for v in c)


_PALETTE = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan", "gold", "gray"]


def factor_to_dot(fac: CycleFactor) -> str:
    """Graphviz description: all graph vertices, cycle edges colored per cycle."""
    lines = [f'graph "{fac.kind}_{fac.k}" {{', "  node [shape=ellipse];"]
    for ci, cyc in enumerate(fac.cycles):
        color = _PALETTE[ci % len(_PALETTE)]
        for v in cyc:
            lines.append(f'  "{_label(v)}";')
        for i in range(len(cyc)):
            a, b = cyc[i], cyc[(i + 1) % len(cyc)]
            lines.append(f'  "{_label(a)}" -- "{_label(b)}" [color={color}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
