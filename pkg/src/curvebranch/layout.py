"""Placement of circles, marked points and base point around the discriminant
points, their angular ordering, and the minimal spanning tree."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cmp_to_key

import numpy as np

KAPPA = 1 / 2.1
KAPPA_PLOT = 1 / 2.9
WARN_RATIO = 1e-4
ANGLE_TOL = 1e-12


class LayoutError(ValueError):
    pass


@dataclass(frozen=True)
class Configuration:
    """Discriminant points relabelled by angle as seen from the base point.

    Labels are 0-based positions in `points`.  Marked point 0 of label k is
    b_k - R (left), marked point 1 is b_k + R (right).
    """

    points: np.ndarray
    rho: float
    kappa: float
    base_index: int
    warning: bool
    leading_zero: np.ndarray
    source_index: np.ndarray  # position of each point in the caller's input

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def radius(self) -> float:
        return self.kappa * self.rho

    @property
    def delta(self) -> float:
        return self.radius * math.sqrt(1.0 - self.kappa**2)

    @property
    def base(self) -> complex:
        return self.marked(self.base_index, 0)

    def marked(self, k: int, side: int) -> complex:
        r = self.radius
        return complex(self.points[k] + (r if side else -r))


def _pairwise(points: np.ndarray) -> np.ndarray:
    d = np.abs(points[:, None] - points[None, :])
    np.fill_diagonal(d, np.inf)
    return d


def configure(points, kappa: float = KAPPA, leading_zero=None) -> Configuration:
    pts = np.asarray(points, dtype=complex).ravel()
    if pts.size == 0:
        raise LayoutError("no discriminant points")
    if not 0 < kappa < 0.5:
        raise LayoutError("kappa must lie in (0, 1/2) for disjoint circles")
    flags = np.zeros(pts.size, dtype=bool) if leading_zero is None else np.asarray(leading_zero, dtype=bool)
    if pts.size == 1:
        rho = max(1.0, abs(pts[0]))
        warning = False
    else:
        d = _pairwise(pts)
        rho = float(d.min())
        if rho == 0.0:
            raise LayoutError("coincident discriminant points")
        warning = rho / float(np.max(np.where(np.isinf(d), 0.0, d))) < WARN_RATIO
    r = kappa * rho
    left = pts.real - r
    # leftmost marked point; among ties the upper one
    tol = 1e-12 * max(1.0, float(np.max(np.abs(pts))))
    cands = np.flatnonzero(left <= left.min() + tol)
    k0 = int(cands[np.argmax(pts.imag[cands])])
    b0 = pts[k0] - r
    v = pts - b0
    ang = np.angle(v)
    dist = np.abs(v)

    def compare(i, j):
        if abs(ang[i] - ang[j]) > ANGLE_TOL:
            return -1 if ang[i] < ang[j] else 1
        return int(dist[i] > dist[j]) - int(dist[i] < dist[j])

    order = sorted(range(pts.size), key=cmp_to_key(compare))
    order = np.array(order)
    return Configuration(
        points=pts[order],
        rho=rho,
        kappa=kappa,
        base_index=int(np.flatnonzero(order == k0)[0]),
        warning=bool(warning),
        leading_zero=flags[order],
        source_index=order,
    )


@dataclass(frozen=True)
class SpanningTree:
    """Tree edges (parent, child) in discovery order plus the marked-point
    selectors (departure side of parent, arrival side of child)."""

    root: int
    edges: tuple[tuple[int, int], ...]
    selectors: tuple[tuple[int, int], ...]

    def parent_map(self) -> dict[int, int]:
        return {c: p for p, c in self.edges}

    def children(self, k: int) -> list[int]:
        return [c for p, c in self.edges if p == k]

    def path_to(self, k: int) -> list[int]:
        """Vertices from the root to k, inclusive."""
        parent = self.parent_map()
        path = [k]
        while path[-1] != self.root:
            try:
                path.append(parent[path[-1]])
            except KeyError:
                raise LayoutError(f"label {k} is not connected to the root") from None
        return path[::-1]

    def edge_index(self, parent: int, child: int) -> int:
        return self.edges.index((parent, child))

    def arrival_side(self, k: int) -> int:
        """Side of the marked point where paths reach label k (0 at the root)."""
        if k == self.root:
            return 0
        for (p, c), (_, l) in zip(self.edges, self.selectors):
            if c == k:
                return l
        raise LayoutError(f"label {k} is not in the tree")

    def length(self, config: Configuration) -> float:
        pts = config.points
        return float(sum(abs(pts[a] - pts[b]) for a, b in self.edges))


def edge_endpoints(config: Configuration, edges) -> tuple[tuple[int, int], ...]:
    """Marked-point sides for each edge, chosen from d = Re(b_child - b_parent)."""
    r = config.radius
    out = []
    for p, c in edges:
        d = (config.points[c] - config.points[p]).real
        if d >= r:
            out.append((1, 0))
        elif d < -r:
            out.append((0, 1))
        else:
            out.append((0, 0))
    return tuple(out)


def minimal_spanning_tree(config: Configuration, tie_rtol: float = 1e-10) -> SpanningTree:
    """Prim growth from the base point's own discriminant point.

    Distances equal to within `tie_rtol` (relative to rho) count as ties and
    are resolved by the smaller label, first of the new vertex, then of the
    vertex it attaches to.
    """
    pts = config.points
    n = len(pts)
    root = config.base_index
    tol = tie_rtol * config.rho
    d = np.abs(pts[:, None] - pts[None, :])
    in_tree = np.zeros(n, dtype=bool)
    in_tree[root] = True
    # best attachment distance and parent for every vertex outside the tree
    best = d[root].copy()
    parent = np.full(n, root)
    edges = []
    for _ in range(n - 1):
        outside = np.flatnonzero(~in_tree)
        m = best[outside].min()
        child = int(outside[best[outside] <= m + tol][0])
        edges.append((int(parent[child]), child))
        in_tree[child] = True
        for k in np.flatnonzero(~in_tree):
            if d[child, k] < best[k] - tol or (abs(d[child, k] - best[k]) <= tol and child < parent[k]):
                best[k] = d[child, k]
                parent[k] = child
    edges = tuple(edges)
    return SpanningTree(root, edges, edge_endpoints(config, edges))


def tree_from_edges(config: Configuration, edges) -> SpanningTree:
    """Wrap an externally supplied edge list (parent, child) as a tree."""
    edges = tuple((int(a), int(b)) for a, b in edges)
    children = [c for _, c in edges]
    if len(edges) != config.n - 1 or len(set(children)) != len(children) or config.base_index in children:
        raise LayoutError("edges do not form a spanning tree rooted at the base point's label")
    tree = SpanningTree(config.base_index, edges, edge_endpoints(config, edges))
    for k in range(config.n):
        tree.path_to(k)
    return tree
