"""Analytic continuation of the fiber along loops and the resulting sheet
permutations."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .contour import Loop
from .curve import BivariatePolynomial, CurveError, fiber
from .polymath import gauss_legendre, roots

NG_DEFAULT = 64
MATCH_FRACTION = 0.4
MAX_BISECTIONS = 30


class SheetTrackingError(ArithmeticError):
    """Sheets could not be told apart during continuation."""


class Permutation:
    """Bijection of {0, ..., N-1}; ``p(i)`` is the sheet reached from sheet i.

    ``p * q`` is composition p o q, i.e. q is applied first.
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(n))

    @classmethod
    def from_one_based(cls, images) -> Permutation:
        return cls(i - 1 for i in images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __len__(self):
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation(self.images[j] for j in other.images)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.one_based()})"

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def conjugate(self, by: Permutation) -> Permutation:
        """by o self o by^-1"""
        return by * self * by.inverse()

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def one_based(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self.images)


def canonical_base_fiber(f: BivariatePolynomial, b0: complex) -> np.ndarray:
    """Fiber at b0 sorted by imaginary part, then real part."""
    y = fiber(f, b0).values
    return y[np.lexsort((y.real, y.imag))]


def _segment_params(ng: int) -> np.ndarray:
    rule = gauss_legendre(ng)
    return np.concatenate([[0.0], 0.5 * (rule.nodes + 1.0), [1.0]])


def collocate(loop: Loop | tuple, ng: int = NG_DEFAULT) -> np.ndarray:
    """Gauss-Legendre nodes of every segment, bracketed by the segment ends."""
    segs = loop.segments if isinstance(loop, Loop) else loop
    t = _segment_params(ng)
    return np.concatenate([np.atleast_1d(s.point(t)) for s in segs])


def _separation(y: np.ndarray) -> float:
    if len(y) < 2:
        return np.inf
    d = np.abs(y[:, None] - y[None, :])
    np.fill_diagonal(d, np.inf)
    return float(d.min())


def match(prev: np.ndarray, new: np.ndarray) -> np.ndarray | None:
    """Reorder `new` so slot k holds the value nearest to prev[k].

    Returns None when a slot's nearest value is farther than
    MATCH_FRACTION times the separation of `prev`, or two slots claim the
    same value.
    """
    limit = MATCH_FRACTION * _separation(prev)
    d = np.abs(new[None, :] - prev[:, None])
    pick = np.argmin(d, axis=1)
    if len(set(pick.tolist())) != len(pick):
        return None
    if np.any(d[np.arange(len(prev)), pick] > limit):
        return None
    return new[pick]


def _solve(f: BivariatePolynomial, x: complex, start: np.ndarray) -> np.ndarray:
    return roots(f.at_x(x), start=start)


def track_segment(f: BivariatePolynomial, seg, y0: np.ndarray, ts: np.ndarray) -> np.ndarray:
    """Continue the ordered fiber y0 (at parameter ts[0]) through ts.

    Returns an array of shape (len(ts), N).  A step whose matching is
    ambiguous is bisected, up to MAX_BISECTIONS times.
    """
    out = np.empty((len(ts), len(y0)), dtype=complex)
    out[0] = y0
    prev = y0
    for i in range(1, len(ts)):
        prev = _advance(f, seg, prev, ts[i - 1], ts[i], 0)
        out[i] = prev
    return out


def _advance(f, seg, prev, t0, t1, depth):
    x = complex(seg.point(t1))
    new = _solve(f, x, prev)
    got = match(prev, new)
    if got is not None:
        return got
    if depth >= MAX_BISECTIONS:
        raise SheetTrackingError(f"sheets numerically indistinguishable near x = {x:.6g}")
    tm = 0.5 * (t0 + t1)
    mid = _advance(f, seg, prev, t0, tm, depth + 1)
    return _advance(f, seg, mid, tm, t1, depth + 1)


def continue_along(f: BivariatePolynomial, segments, y0: np.ndarray, ng: int = NG_DEFAULT) -> np.ndarray:
    """Ordered fiber at the end of `segments`, starting from y0 at their start."""
    t = _segment_params(ng)
    y = np.asarray(y0, dtype=complex)
    for s in segments:
        y = track_segment(f, s, y, t)[-1]
    return y


def read_permutation(y_end: np.ndarray, y_start: np.ndarray) -> tuple[Permutation, float]:
    """sigma with y_end[i] == y_start[sigma(i)], and the largest mismatch."""
    d = np.abs(y_end[:, None] - y_start[None, :])
    pick = np.argmin(d, axis=1)
    if len(set(pick.tolist())) != len(pick):
        raise SheetTrackingError("continued fiber does not return to the base fiber bijectively")
    return Permutation(pick), float(d[np.arange(len(pick)), pick].max())


def continue_fiber(f: BivariatePolynomial, loop: Loop, ybase: np.ndarray, ng: int = NG_DEFAULT):
    """Monodromy permutation of `loop` and the final matching residual."""
    y_end = continue_along(f, loop.segments, ybase, ng)
    return read_permutation(y_end, np.asarray(ybase))


@dataclass(frozen=True)
class MonodromyTable:
    base: complex
    ybase: np.ndarray
    permutations: tuple[Permutation, ...]
    residuals: tuple[float, ...]

    def columns(self) -> list[tuple[int, ...]]:
        return [p.one_based() for p in self.permutations]


def monodromy_table(
    f: BivariatePolynomial,
    loops: list[Loop],
    ybase: np.ndarray | None = None,
    ng: int = NG_DEFAULT,
    shared: bool = True,
) -> MonodromyTable:
    """Permutations of the initial loops.

    With ``shared`` the outbound chains are continued once per prefix and
    only the circle is followed separately; the return leg undoes the
    outbound continuation, so the permutation read on the circle is the
    loop's permutation.
    """
    if not loops:
        raise ValueError("no loops")
    base = loops[0].base
    if ybase is None:
        ybase = canonical_base_fiber(f, base)
    ybase = np.asarray(ybase, dtype=complex)
    if not shared or any(lp.outbound is None for lp in loops):
        results = [continue_fiber(f, lp, ybase, ng) for lp in loops]
    else:
        t = _segment_params(ng)
        cache: dict[tuple, np.ndarray] = {(): ybase}
        results = []
        for lp in loops:
            prefix: tuple = ()
            y = ybase
            for s in lp.outbound:
                prefix = prefix + (s,)
                if prefix not in cache:
                    cache[prefix] = track_segment(f, s, y, t)[-1]
                y = cache[prefix]
            y_after = continue_along(f, lp.circle, y, ng)
            results.append(read_permutation(y_after, y))
    return MonodromyTable(
        base=base,
        ybase=ybase,
        permutations=tuple(p for p, _ in results),
        residuals=tuple(r for _, r in results),
    )


__all__ = [
    "CurveError",
    "MonodromyTable",
    "Permutation",
    "SheetTrackingError",
    "canonical_base_fiber",
    "collocate",
    "continue_fiber",
    "continue_along",
    "monodromy_table",
    "track_segment",
]
