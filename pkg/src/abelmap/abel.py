"""Existence of natural d-th Abel maps via essential connectivity.

The essential connectivity of a connected nodal curve is the smallest
cut size k_Z over proper subcurves Z whose cut is not made of separating
nodes only; it is infinite when no such subcurve exists (irreducible
curves, curves of compact type, two components meeting in one node).

The decision implemented here: a natural d-th Abel map exists if and only
if the essential connectivity exceeds d.  The package also carries an
independent brute-force route: over all partitional multidegrees of total
degree d (nonnegative entries), every equivalent pair must differ by a
sum-of-tails multidegree.  cross_check_naturality compares the two routes
and is the backbone of the enumeration harness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from . import graph as gr
from .graph import CurveGraph
from .lattice import (
    DegreeClass,
    Multidegree,
    _check_vector,
    enumerate_classes,
    equivalent,
    multidegree_class,
)
from .levels import is_sum_of_tails_multidegree

INFINITY = math.inf


class InvalidChooserError(ValueError):
    """A representative table does not fit the graph and degree."""


def essential_connectivity(g: CurveGraph, connected_only: bool = False):
    """inf of k_Z over proper subcurves whose cut has a non-separating node.

    Returns math.inf when every cut consists of bridges (the inf over the
    empty set).  The default scans all proper nonempty subcurves; with
    connected_only=True only connected subcurves are scanned, which gives
    the same value (a minimizing subcurve can always be taken connected).
    """
    best = INFINITY
    bridges = g.bridges
    for mask in range(1, (1 << g.gamma) - 1):
        zs = frozenset(i for i in range(g.gamma) if mask >> i & 1)
        if connected_only and not gr._induced_connected(g, zs):
            continue
        cut = gr.cut_edges(g, zs)
        if cut <= bridges:
            continue
        if len(cut) < best:
            best = len(cut)
    return best


def has_natural_abel_map(g: CurveGraph, d: int) -> bool:
    """True when the essential connectivity exceeds d.  Requires d >= 1."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    return essential_connectivity(g) > d


def partitional_multidegrees(gamma: int, d: int) -> list[Multidegree]:
    """Nonnegative integer vectors of length gamma with total d, lex order.

    There are binomial(d + gamma - 1, gamma - 1) of them.

    >>> partitional_multidegrees(2, 1)
    [(0, 1), (1, 0)]
    """
    if gamma < 1:
        raise ValueError("gamma must be >= 1")
    if d < 0:
        return []
    out: list[Multidegree] = []

    def rec(prefix: tuple, remaining: int, slots: int) -> None:
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for first in range(remaining + 1):
            rec(prefix + (first,), remaining - first, slots - 1)

    rec((), d, gamma)
    return out


def class_has_partitional_rep(g: CurveGraph, cls: DegreeClass) -> Optional[Multidegree]:
    """Lex-smallest partitional multidegree in the class, or None."""
    d = cls.total
    if d < 0:
        return None
    for p in partitional_multidegrees(g.gamma, d):
        if multidegree_class(g, p) == cls:
            return p
    return None


@dataclass(frozen=True)
class RepChooser:
    """One representative per degree class, in enumerate_classes order."""

    degree: int
    table: dict  # dict[DegreeClass, Multidegree]


def choose_representatives(g: CurveGraph, d: int) -> RepChooser:
    """Partitional representative when the class has one, canonical otherwise.

    The partitional choice is the lex-smallest partitional member, so the
    chooser is deterministic.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    first_partitional: dict[DegreeClass, Multidegree] = {}
    for p in partitional_multidegrees(g.gamma, d):
        first_partitional.setdefault(multidegree_class(g, p), p)
    table = {
        cls: first_partitional.get(cls, cls.canonical)
        for cls in enumerate_classes(g, d)
    }
    return RepChooser(degree=d, table=table)


def validate_chooser(g: CurveGraph, d: int, chooser: RepChooser) -> None:
    """Raise InvalidChooserError unless the chooser fits (g, d) exactly."""
    if chooser.degree != d:
        raise InvalidChooserError(f"chooser degree {chooser.degree} != {d}")
    expected = set(enumerate_classes(g, d))
    if set(chooser.table) != expected:
        raise InvalidChooserError("chooser classes do not match the graph's classes")
    for cls, rep in chooser.table.items():
        rv = _check_vector(g, rep, "representative")
        if sum(rv) != d:
            raise InvalidChooserError(f"representative {rv} has total {sum(rv)} != {d}")
        if multidegree_class(g, rv) != cls:
            raise InvalidChooserError(f"representative {rv} is not in its class")


def is_natural(g: CurveGraph, d: int, chooser: Optional[RepChooser] = None) -> bool:
    """Does this choice of representatives give a natural d-th Abel map?

    True when every partitional multidegree differs from its class's chosen
    representative by a sum-of-tails multidegree.  The default chooser is
    choose_representatives(g, d).
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    if chooser is None:
        chooser = choose_representatives(g, d)
    else:
        validate_chooser(g, d, chooser)
    for p in partitional_multidegrees(g.gamma, d):
        rep = chooser.table[multidegree_class(g, p)]
        t = tuple(x - y for x, y in zip(p, rep))
        if not is_sum_of_tails_multidegree(g, t):
            return False
    return True


@dataclass(frozen=True)
class NaturalStructure:
    """How many natural d-th Abel maps a curve carries, and why.

    When maps exist they correspond to the valid choosers, one independent
    sum-of-tails shift per partitional multidegree; the map is unique
    exactly when the curve has no separating node, since then the only
    sum-of-tails multidegree is 0.  The sum-of-tails subgroup has one free
    generator per separating node.
    """

    exists: bool
    partitional_count: int
    separating_node_count: int
    sum_of_tails_trivial: bool
    sum_of_tails_rank: int
    unique: Optional[bool]  # None when no natural map exists


def count_natural_structure(g: CurveGraph, d: int) -> NaturalStructure:
    if d < 1:
        raise ValueError("degree must be >= 1")
    exists = has_natural_abel_map(g, d)
    nb = len(g.bridges)
    return NaturalStructure(
        exists=exists,
        partitional_count=len(partitional_multidegrees(g.gamma, d)),
        separating_node_count=nb,
        sum_of_tails_trivial=nb == 0,
        sum_of_tails_rank=nb,
        unique=(nb == 0) if exists else None,
    )


def partitional_pairs_certified(g: CurveGraph, d: int) -> bool:
    """Brute-force side of the criterion.

    Every pair of equivalent partitional multidegrees must differ by a
    sum-of-tails multidegree.  Unordered pairs suffice: the crossing set of
    a multidegree and of its negative coincide (negating a divisor reflects
    its levels without changing the partition into level subcurves).
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    parts = partitional_multidegrees(g.gamma, d)
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if not equivalent(g, parts[i], parts[j]):
                continue
            t = tuple(x - y for x, y in zip(parts[i], parts[j]))
            if not is_sum_of_tails_multidegree(g, t):
                return False
    return True


def cross_check_naturality(g: CurveGraph, d: int) -> bool:
    """Compare the brute-force pair check with the connectivity criterion.

    Returns True when the two independent routes agree; the enumeration
    harness demands True on every instance.
    """
    return partitional_pairs_certified(g, d) == has_natural_abel_map(g, d)
