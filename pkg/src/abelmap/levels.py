"""Level expressions of divisors and the nodes they move across.

Grouping the components of a divisor D by coefficient writes D as a sum of
level pieces m * D_m.  For a twister multidegree t the normalized preimage
divisor gives a canonical expression: levels start at 0, the base subcurve
Z_0 (level 0) is nonempty, and the positive levels 0 < m_1 < ... < m_ell
carry disjoint subcurves.  For t = 0 the expression degenerates to the whole
curve at level 0.

The crossing set of D collects the non-loop edges whose endpoints sit at
different levels; these are the nodes where the twisting line bundle
actually jumps.  D is a sum of tails (plus a multiple of X) exactly when
all its crossings are separating nodes, and the first Betti number of the
contraction onto the crossing set measures how many independent twisters
realize the same multidegree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from . import graph as gr
from .graph import CurveGraph, NodeSet
from .lattice import (
    Divisor,
    Multidegree,
    _check_vector,
    multidegree_of,
    normalize_divisor,
    twister_divisor,
)


class NotATwisterError(ValueError):
    """The multidegree is not in the twister lattice of the graph."""


@dataclass(frozen=True)
class LevelExpression:
    """Levels of a divisor: ((m, components at level m), ...) ascending.

    The subcurves are disjoint, nonempty, and cover the curve.  For
    canonical expressions the lowest level is 0.
    """

    levels: tuple  # tuple[tuple[int, frozenset[int]], ...]

    def __post_init__(self) -> None:
        ms = [m for m, _ in self.levels]
        if ms != sorted(set(ms)):
            raise ValueError("levels must be strictly ascending")
        if any(not zs for _, zs in self.levels):
            raise ValueError("empty level")

    @property
    def base(self) -> frozenset:
        """Subcurve at the lowest level (Z_0 when canonical)."""
        return self.levels[0][1]

    @property
    def positive_levels(self) -> tuple:
        return tuple((m, zs) for m, zs in self.levels if m > 0)

    @property
    def ell(self) -> int:
        """Number of levels above the base."""
        return len(self.levels) - 1

    @property
    def is_canonical(self) -> bool:
        return self.levels[0][0] == 0

    @property
    def is_degenerate(self) -> bool:
        """Single level 0 covering the whole curve (the t = 0 case)."""
        return self.is_canonical and len(self.levels) == 1

    def as_divisor(self, gamma: int) -> Divisor:
        out = [0] * gamma
        for m, zs in self.levels:
            for i in zs:
                out[i] = m
        return tuple(out)


def level_expression(g: CurveGraph, d: Iterable[int]) -> LevelExpression:
    """Group components by coefficient, lowest level first."""
    dv = _check_vector(g, d, "divisor")
    by_level: dict[int, set[int]] = {}
    for i, x in enumerate(dv):
        by_level.setdefault(x, set()).add(i)
    return LevelExpression(
        levels=tuple((m, frozenset(by_level[m])) for m in sorted(by_level))
    )


def multidegree_levels(g: CurveGraph, t: Iterable[int]) -> LevelExpression:
    """Canonical level expression of a twister multidegree.

    Built from the normalized preimage divisor, so the base level is 0 and
    Z_0 is nonempty.  t = 0 yields the degenerate expression (whole curve
    at level 0).  Raises NotATwisterError when t is outside the lattice.
    """
    tv = _check_vector(g, t, "multidegree")
    dv = twister_divisor(g, tv)
    if dv is None:
        raise NotATwisterError(f"{tv} is not a twister multidegree")
    le = level_expression(g, dv)
    assert le.is_canonical
    return le


def check_level_degree_bounds(g: CurveGraph, t: Iterable[int]) -> bool:
    """Lower bounds forced on t by its canonical expression; a self-test.

    For every nonempty Y inside the base Z_0 the total of t on Y is at
    least -m_1 (Y . Z_0) which is itself nonnegative, and for Y = Z_0 the
    total is at least m_1 k_{Z_0} > 0.  Must hold for every nonzero twister
    multidegree.  Raises on t = 0 or t outside the lattice.
    """
    tv = _check_vector(g, t, "multidegree")
    le = multidegree_levels(g, tv)
    if le.is_degenerate:
        raise ValueError("t = 0 has no positive level")
    m1 = le.positive_levels[0][0]
    z0 = sorted(le.base)
    for size in range(1, len(z0) + 1):
        for ys in combinations(z0, size):
            bound = -m1 * gr.pairing(g, ys, z0)
            if bound < 0:
                return False
            ty = sum(tv[i] for i in ys)
            if ty < bound:
                return False
            if size == len(z0) and ty <= 0:
                return False
    return True


def crossing_nodes(g: CurveGraph, d: Iterable[int]) -> NodeSet:
    """Non-loop edges whose endpoints carry different coefficients of D.

    Loops never appear: both branches sit on one component.  Subadditive
    under divisor addition, and invariant under adding multiples of X.
    """
    dv = _check_vector(g, d, "divisor")
    return frozenset(
        e for e, (a, b) in enumerate(g.edges) if a != b and dv[a] != dv[b]
    )


def crossing_nodes_of_multidegree(g: CurveGraph, t: Iterable[int]) -> NodeSet:
    """Crossing set of the canonical divisor of t; empty for t = 0."""
    tv = _check_vector(g, t, "multidegree")
    dv = twister_divisor(g, tv)
    if dv is None:
        raise NotATwisterError(f"{tv} is not a twister multidegree")
    return crossing_nodes(g, dv)


def is_sum_of_tails(g: CurveGraph, d: Iterable[int]) -> bool:
    """True when D is an integer combination of tails plus a multiple of X.

    Equivalent to: every crossing node of D is separating.
    """
    return crossing_nodes(g, d) <= g.bridges


def is_sum_of_tails_multidegree(g: CurveGraph, t: Iterable[int]) -> bool:
    """True when t is the multidegree of a sum of tails.

    These multidegrees form a subgroup of the twister lattice.  A t outside
    the lattice is simply not one (returns False, no error).
    """
    tv = _check_vector(g, t, "multidegree")
    dv = twister_divisor(g, tv)
    if dv is None:
        return False
    return crossing_nodes(g, dv) <= g.bridges


def twister_space_dim(g: CurveGraph, t: Iterable[int]) -> int:
    """Dimension of the family of twisters realizing the multidegree t.

    Equals the first Betti number of the contraction onto the crossing set
    of the canonical divisor; zero exactly when t is a sum-of-tails
    multidegree.  Raises NotATwisterError outside the lattice.
    """
    return gr.betti(g, crossing_nodes_of_multidegree(g, t))
