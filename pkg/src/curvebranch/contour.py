"""Line and arc segments, and the initial loops built along the spanning tree."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .layout import Configuration, SpanningTree
from .polymath import gauss_legendre


@dataclass(frozen=True)
class Line:
    start: complex
    end: complex

    def point(self, t):
        return self.start + (self.end - self.start) * np.asarray(t)

    def derivative(self, t):
        return np.full(np.shape(t), self.end - self.start, dtype=complex)

    def reversed(self) -> Line:
        return Line(self.end, self.start)

    @property
    def length(self) -> float:
        return abs(self.end - self.start)


@dataclass(frozen=True)
class Arc:
    """Circle piece ``center + radius * exp(i(theta0 + sweep * t))``, t in [0, 1]."""

    center: complex
    radius: float
    theta0: float
    sweep: float

    def point(self, t):
        return self.center + self.radius * np.exp(1j * (self.theta0 + self.sweep * np.asarray(t)))

    def derivative(self, t):
        return 1j * self.sweep * (self.point(t) - self.center)

    @property
    def start(self) -> complex:
        return complex(self.point(0.0))

    @property
    def end(self) -> complex:
        return complex(self.point(1.0))

    def reversed(self) -> Arc:
        return Arc(self.center, self.radius, self.theta0 + self.sweep, -self.sweep)

    @property
    def length(self) -> float:
        return abs(self.sweep) * self.radius


Segment = Line | Arc


def reverse(chain) -> tuple:
    """Traverse `chain` backwards."""
    return tuple(s.reversed() for s in reversed(chain))


@dataclass(frozen=True)
class Loop:
    """Closed chain at the base point.

    Initial loops are `outbound` + circle + reverse(outbound), the circle
    being two half circles; loops produced by conjugation only carry
    `segments`.
    """

    label: int
    segments: tuple
    base: complex
    outbound: tuple | None = None
    circle: tuple | None = None

    @property
    def start(self) -> complex:
        return self.segments[0].start

    @property
    def end(self) -> complex:
        return self.segments[-1].end

    def inverse(self) -> Loop:
        out = None if self.outbound is None else self.outbound
        circ = None if self.circle is None else reverse(self.circle)
        return Loop(self.label, reverse(self.segments), self.base, out, circ)

    def __len__(self):
        return len(self.segments)


def _side_angle(side: int) -> float:
    return math.pi if side == 0 else 0.0


def _bypass(config: Configuration, k: int, side_in: int) -> Arc:
    """Counterclockwise half circle around b_k between its marked points."""
    return Arc(complex(config.points[k]), config.radius, _side_angle(side_in), math.pi)


def outbound_chain(config: Configuration, tree: SpanningTree, k: int) -> tuple:
    """Segments from the base point to the arrival marked point of label k."""
    path = tree.path_to(k)
    segs = []
    side = 0  # the base point is marked point 0 of the root
    for a, b in zip(path, path[1:]):
        dep, arr = tree.selectors[tree.edge_index(a, b)]
        if dep != side:
            segs.append(_bypass(config, a, side))
        segs.append(Line(config.marked(a, dep), config.marked(b, arr)))
        side = arr
    return tuple(segs)


def full_circle(config: Configuration, k: int, side: int) -> tuple[Arc, Arc]:
    """Positive circle around b_k from marked point `side`, as two halves."""
    c = complex(config.points[k])
    a = _side_angle(side)
    return (Arc(c, config.radius, a, math.pi), Arc(c, config.radius, a + math.pi, math.pi))


def build_initial_loops(config: Configuration, tree: SpanningTree) -> list[Loop]:
    loops = []
    for k in range(config.n):
        out = outbound_chain(config, tree, k)
        circle = full_circle(config, k, tree.arrival_side(k))
        loops.append(Loop(k, out + circle + reverse(out), config.base, out, circle))
    return loops


def compose(*loops: Loop, label: int | None = None) -> Loop:
    """Product of loops; the rightmost factor is traced first."""
    segs = tuple(s for lp in reversed(loops) for s in lp.segments)
    lab = loops[-1].label if label is None else label
    return Loop(lab, segs, loops[0].base)


def sample(chain, per_segment: int = 200) -> np.ndarray:
    t = np.linspace(0.0, 1.0, per_segment)
    return np.concatenate([np.atleast_1d(s.point(t)) for s in chain])


def min_clearance(loop: Loop, config: Configuration, per_segment: int = 400) -> float:
    """Smallest distance from the loop to a discriminant point other than the
    centre of the arc being traversed."""
    pts = config.points
    best = math.inf
    t = np.linspace(0.0, 1.0, per_segment)
    for s in loop.segments:
        z = np.atleast_1d(s.point(t))
        d = np.abs(z[:, None] - pts[None, :])
        if isinstance(s, Arc):
            d[:, np.argmin(np.abs(pts - s.center))] = s.radius
        best = min(best, float(d.min()))
    return best


def winding_number(chain, z0: complex, order: int = 64) -> complex:
    """(1 / 2 pi i) times the contour integral of dz / (z - z0) along `chain`."""
    rule = gauss_legendre(order)
    t = 0.5 * (rule.nodes + 1.0)
    total = 0.0j
    for s in chain:
        total += 0.5 * np.dot(rule.weights, s.derivative(t) / (s.point(t) - z0))
    return total / (2j * math.pi)
