"""Shared builders and independent oracles for the test suite."""

from __future__ import annotations

from itertools import product

from abelmap import CurveGraph, normalize_divisor


def two_component(delta: int, loops: tuple = ()) -> CurveGraph:
    """Two components joined by delta parallel edges, optional loops."""
    edges = [(0, 1)] * delta + [(i, i) for i in loops]
    return CurveGraph(["C1", "C2"], edges)


def cycle(n: int) -> CurveGraph:
    labels = [f"C{i + 1}" for i in range(n)]
    return CurveGraph(labels, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> CurveGraph:
    labels = [f"C{i + 1}" for i in range(n)]
    return CurveGraph(labels, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> CurveGraph:
    labels = [f"C{i + 1}" for i in range(leaves + 1)]
    return CurveGraph(labels, [(0, i + 1) for i in range(leaves)])


def triangle_with_pendant() -> CurveGraph:
    # 3-cycle on C1..C3 plus C4 hanging off C1 by a bridge
    return CurveGraph(["C1", "C2", "C3", "C4"], [(0, 1), (1, 2), (0, 2), (0, 3)])


def bridge_tails(g: CurveGraph) -> list[frozenset]:
    """One tail per bridge: the side not containing component 0."""
    return [_side_of(g, e) for e in sorted(g.bridges)]


def _side_of(g: CurveGraph, e: int) -> frozenset:
    # component of the graph minus edge e that avoids vertex 0
    ea, eb = g.edges[e]
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for f, (a, b) in enumerate(g.edges):
            if f == e or a == b:
                continue
            if a == v and b not in seen:
                seen.add(b)
                stack.append(b)
            elif b == v and a not in seen:
                seen.add(a)
                stack.append(a)
    return frozenset(range(g.gamma)) - frozenset(seen)


def tail_sum_oracle_table(g: CurveGraph, coeff_bound: int) -> set:
    """Normalized divisors expressible as bounded sums of tails.

    Searches one tail per bridge (the side avoiding component 0; the other
    side differs from it by X, so nothing is lost) with coefficients up to
    2 * coeff_bound in absolute value.  That doubled bound is needed: the
    unique expression of a sum of tails over these tails has coefficients
    equal to differences of divisor values across a bridge, which reach
    twice the divisor's max coefficient.
    """
    tails_ = bridge_tails(g)
    bound = 2 * coeff_bound
    table = set()
    for ms in product(range(-bound, bound + 1), repeat=len(tails_)):
        s = [0] * g.gamma
        for m, q in zip(ms, tails_):
            for i in q:
                s[i] += m
        table.add(normalize_divisor(s))
    return table


def sum_of_tails_by_search(g: CurveGraph, d, table=None) -> bool:
    """Existential oracle: is D a sum of tails plus a multiple of X?"""
    if table is None:
        bound = max((abs(x) for x in d), default=0)
        table = tail_sum_oracle_table(g, bound)
    return normalize_divisor(d) in table
