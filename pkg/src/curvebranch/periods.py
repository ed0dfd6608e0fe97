"""Integrals of differentials p(x, y) dx / f_y(x, y) along chains, one value
per sheet, using the same sheet tracking as the monodromy computation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .contour import Loop
from .curve import BivariatePolynomial, CurveError, y_derivative
from .monodromy import NG_DEFAULT, canonical_base_fiber, track_segment, _segment_params
from .polymath import gauss_legendre


@dataclass(frozen=True)
class DifferentialSpec:
    """The differential numerator(x, y) / f_y(x, y) dx."""

    numerator: BivariatePolynomial

    def __post_init__(self):
        if not isinstance(self.numerator, BivariatePolynomial):
            object.__setattr__(self, "numerator", BivariatePolynomial(self.numerator))

    @classmethod
    def monomial(cls, i: int, j: int) -> DifferentialSpec:
        """x^i y^j / f_y dx"""
        a = np.zeros((i + 1, j + 1), dtype=complex)
        a[i, j] = 1.0
        return cls(BivariatePolynomial(a))


def integrate_chain(
    f: BivariatePolynomial,
    spec: DifferentialSpec,
    chain,
    ybase: np.ndarray | None = None,
    ng: int = NG_DEFAULT,
) -> np.ndarray:
    """Entry i is the integral along `chain` on the sheet starting at ybase[i].

    Each segment is continued through its Gauss-Legendre nodes, so the same
    samples serve for tracking and for the quadrature.
    """
    segs = chain.segments if isinstance(chain, Loop) else tuple(chain)
    if not segs:
        raise ValueError("empty chain")
    if ybase is None:
        ybase = canonical_base_fiber(f, segs[0].start)
    y = np.asarray(ybase, dtype=complex)
    fy = y_derivative(f)
    rule = gauss_legendre(ng)
    t = _segment_params(ng)
    inner = t[1:-1]
    total = np.zeros(len(y), dtype=complex)
    for s in segs:
        track = track_segment(f, s, y, t)
        x = np.atleast_1d(s.point(inner))[:, None]
        ys = track[1:-1]
        den = fy(x, ys)
        if np.any(den == 0):
            raise CurveError("f_y vanishes on the chain")
        vals = spec.numerator(x, ys) / den * np.atleast_1d(s.derivative(inner))[:, None]
        total += 0.5 * (rule.weights @ vals)
        y = track[-1]
    return total
