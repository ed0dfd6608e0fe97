"""Generators of the fundamental group satisfying the product relation.

The initial loops are ordered by reading the spanning tree (tree string) and
then rearranged by conjugation into ascending order; the monodromy at
infinity follows from the product relation and the genus from
Riemann-Hurwitz.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .contour import Arc, Loop, compose
from .layout import Configuration, SpanningTree
from .monodromy import Permutation

MarkedPoint = tuple[int, int]  # (label, side), side 0 = left, 1 = right


class MonodromyError(ArithmeticError):
    pass


@dataclass(frozen=True)
class TreeAnalysis:
    endpoints: tuple[int, ...]
    nodes: tuple[MarkedPoint, ...]
    vpoints: tuple[MarkedPoint, ...]


@dataclass
class _Branch:
    angle: float
    label: int
    labels: list[int]


class _Reader:
    """Walks the marked points of a spanning tree, collecting branch orders."""

    def __init__(self, config: Configuration, tree: SpanningTree):
        self.config = config
        self.tree = tree
        self.arrival = {k: tree.arrival_side(k) for k in range(config.n)}
        self.departing: dict[MarkedPoint, list[int]] = {}
        for (p, c), (dep, _) in zip(tree.edges, tree.selectors):
            self.departing.setdefault((p, dep), []).append(c)
        self.junctions: list[tuple[MarkedPoint, list[list[int]]]] = []

    def read(self, k: int, side: int, ref: complex) -> list[int]:
        cfg = self.config
        here = cfg.marked(k, side)
        branches = []
        for c in self.departing.get((k, side), []):
            arrive = cfg.marked(c, self.arrival[c])
            labels = self.read(c, self.arrival[c], here - arrive)
            branches.append(_Branch(_ccw(ref, arrive - here), c, labels))
        if side == self.arrival[k]:
            labels = []
            other = 1 - side
            if (k, other) in self.departing:
                labels = self.read(k, other, here - cfg.marked(k, other))
            branches.append(_Branch(_ccw(ref, cfg.points[k] - here), k, labels + [k]))
        branches.sort(key=lambda b: (b.angle, b.label))
        if len(branches) > 1:
            self.junctions.append(((k, side), [b.labels for b in branches]))
        return [lab for b in branches for lab in b.labels]


def _ccw(ref: complex, direction: complex) -> float:
    """Counterclockwise angle from `ref` to `direction`, in [0, 2 pi)."""
    a = math.atan2(direction.imag, direction.real) - math.atan2(ref.imag, ref.real)
    a %= 2 * math.pi
    if a >= 2 * math.pi - 1e-12:
        a = 0.0
    return a


def classify_tree(config: Configuration, tree: SpanningTree) -> TreeAnalysis:
    """End points, nodes (junctions other than v-points) and v-points."""
    has_children = {p for p, _ in tree.edges}
    endpoints = tuple(c for _, c in tree.edges if c not in has_children)
    if config.n == 1:
        endpoints = (tree.root,)
    reader = _Reader(config, tree)
    departing = reader.departing
    vpoints = tuple(
        (c, reader.arrival[c]) for _, c in tree.edges if (c, reader.arrival[c]) in departing
    )
    order = [(tree.root, 0)] + [mp for mp in departing if mp != (tree.root, 0)]
    nodes = []
    for mp in order:
        k, side = mp
        count = len(departing.get(mp, []))
        if side == reader.arrival[k]:
            count += 1
        if count > 1 and mp not in vpoints:
            nodes.append(mp)
    return TreeAnalysis(endpoints, tuple(nodes), vpoints)


def tree_string(config: Configuration, tree: SpanningTree, trace: bool = False):
    """Order sigma of the initial loops whose product encircles every point.

    Branches meeting at a marked point are ordered by the counterclockwise
    angle of their departure direction, measured from the leftward
    horizontal ray at the base point and from the reversed arrival line
    elsewhere.  A discriminant point's own loop leaves its arrival marked
    point towards its centre, after everything reached by bypassing it.

    With ``trace`` also return the junctions visited, innermost first, as
    ``[((label, side), [branch labels, ...]), ...]``.
    """
    reader = _Reader(config, tree)
    labels = reader.read(tree.root, 0, complex(-1.0, 0.0))
    if sorted(labels) != list(range(config.n)):
        raise MonodromyError("tree string is not a permutation of the labels")
    return (labels, reader.junctions) if trace else labels


@dataclass
class GeneratorSet:
    loops: list[Loop]
    permutations: list[Permutation]
    infinity: Permutation
    conjugations: list[tuple[int, int]] = field(default_factory=list)


def rearrange(loops: list[Loop], permutations: list[Permutation], string) -> GeneratorSet:
    """Bubble the largest label to the right end by conjugation, repeatedly.

    Each swap of m with its right neighbour k replaces loop m by
    gamma_k gamma_m gamma_k^-1 (gamma_k^-1 traced first) and phi_m by
    phi_k o phi_m o phi_k^-1.
    """
    n = len(loops)
    s = [int(v) for v in string]
    if sorted(s) != list(range(n)):
        raise MonodromyError("string is not a permutation of the loop labels")
    loops = list(loops)
    perms = list(permutations)
    log = []
    while s:
        m = max(s)
        i = s.index(m)
        while i < len(s) - 1:
            k = s[i + 1]
            loops[m] = compose(loops[k], loops[m], loops[k].inverse(), label=m)
            perms[m] = perms[m].conjugate(perms[k])
            log.append((m, k))
            s[i], s[i + 1] = k, m
            i += 1
        s.pop()
    return GeneratorSet(loops, perms, infinity_from_product(perms), log)


def infinity_from_product(perms) -> Permutation:
    """phi_inf from gamma_1 ... gamma_n gamma_inf = id with gamma_1 traced
    first, i.e. phi_inf o phi_n o ... o phi_1 = id."""
    total = Permutation.identity(len(perms[0]))
    for p in perms:
        total = p * total
    return total.inverse()


@dataclass(frozen=True)
class GenusReport:
    sheets: int
    branching: tuple[int, ...]  # one entry per ramified point of the covering
    genus: int

    @property
    def branch_points(self) -> int:
        return len(self.branching)


def genus(permutations, infinity: Permutation | None = None) -> GenusReport:
    """Riemann-Hurwitz: g = 1 - N + (1/2) sum of branching numbers."""
    perms = list(permutations) + ([infinity] if infinity is not None else [])
    n = len(perms[0])
    beta = tuple(len(c) - 1 for p in perms for c in p.cycles() if len(c) > 1)
    twice = 2 - 2 * n + sum(beta)
    if twice % 2 or twice < 0:
        raise MonodromyError(f"inconsistent monodromy: 2g = {twice}")
    return GenusReport(n, beta, twice // 2)


def infinity_loop(config: Configuration, margin: float = 2.0) -> Loop:
    """Clockwise circle through the base point enclosing every discriminant
    point.  Expensive to continue along; used as an independent check."""
    b0 = config.base
    rel = config.points - b0
    need = np.max((rel.real**2 + rel.imag**2) / (2 * rel.real))
    big = margin * float(need)
    arc = Arc(b0 + big, big, math.pi, -2 * math.pi)
    return Loop(-1, (arc,), b0)
