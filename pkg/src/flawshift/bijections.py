"""Single-flip maps g, g', h, h', the minimum-change bijection f and the classic f'.

``g`` and ``g'`` turn one down-step into an up-step (L_{2k,k} -> L_{2k,k+1}),
``h`` and ``h'`` turn one up-step into a down-step (L_{2k,k+1} -> L_{2k,k}).
They pair up as inverses: h' undoes g and g' undoes h.  The bijection
f = h o g moves a path from e to e+1 flaws by flipping exactly two steps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, NoPredecessor, NoSuccessor
from .paths import (
    LatticePath,
    Step,
    count_down_at,
    count_up_at,
    nth_touching,
    require_balanced,
    require_raised,
)


@dataclass(frozen=True)
class FlipResult:
    path: LatticePath
    position: int


@dataclass(frozen=True)
class FStepResult:
    """Image of one f (or f^-1) step and the two positions involved.

    ``up_flip`` and ``down_flip`` always describe the forward step: f turns
    the up-step at ``up_flip`` into a down-step and the down-step at
    ``down_flip`` into an up-step.  For the inverse, those are the positions
    restored.
    """

    path: LatticePath
    up_flip: int
    down_flip: int


def apply_g(x: LatticePath) -> FlipResult:
    """Flip the (d_0(x)+1)-th down-step touching y=0."""
    require_balanced(x)
    pos = nth_touching(x, Step.DOWN, 0, count_down_at(x, 0) + 1)
    if pos is None:
        raise NoSuccessor(f"{x.text!r} has the maximal number of flaws")
    return FlipResult(x.flip(pos), pos)


def apply_g_prime(x: LatticePath) -> FlipResult:
    """Flip the d_0(x)-th down-step touching y=0."""
    require_balanced(x)
    pos = nth_touching(x, Step.DOWN, 0, count_down_at(x, 0))
    if pos is None:
        raise NoPredecessor(f"{x.text!r} has zero flaws")
    return FlipResult(x.flip(pos), pos)


def apply_h(x: LatticePath) -> FlipResult:
    """Flip the u_1(x)-th up-step touching y=1."""
    require_raised(x)
    pos = nth_touching(x, Step.UP, 1, count_up_at(x, 1))
    if pos is None:
        # unreachable for paths from (0,0) to (2k,2)
        raise DomainError(f"h undefined on {x.text!r}")
    return FlipResult(x.flip(pos), pos)


def apply_h_prime(x: LatticePath) -> FlipResult:
    """Flip the (u_1(x)+1)-th up-step touching y=1."""
    require_raised(x)
    pos = nth_touching(x, Step.UP, 1, count_up_at(x, 1) + 1)
    if pos is None:
        raise DomainError(f"h' undefined on {x.text!r}")
    return FlipResult(x.flip(pos), pos)


def apply_f(x: LatticePath) -> FStepResult:
    g = apply_g(x)
    h = apply_h(g.path)
    return FStepResult(h.path, up_flip=h.position, down_flip=g.position)


def apply_f_inverse(x: LatticePath) -> FStepResult:
    gp = apply_g_prime(x)
    hp = apply_h_prime(gp.path)
    return FStepResult(hp.path, up_flip=gp.position, down_flip=hp.position)


def apply_f_classic(x: LatticePath) -> LatticePath:
    """The classic swap bijection: u + U + v + D + w  ->  v + D + u + U + w.

    ``a`` is the first up-step reaching height 1 with every earlier height
    <= 0, ``b`` the first later down-step returning to height 0.
    """
    require_balanced(x)
    h = x.heights
    t = x.text
    a = None
    for i, ch in enumerate(t):
        if ch == "U" and h[i] == 0:
            a = i  # 0-based index of the up-step
            break
    if a is None:
        raise NoSuccessor(f"{t!r} has the maximal number of flaws")
    b = a + 1
    while h[b + 1] != 0:
        b += 1
    u, v, w = t[:a], t[a + 1 : b], t[b + 1 :]
    return LatticePath(v + "D" + u + "U" + w)
