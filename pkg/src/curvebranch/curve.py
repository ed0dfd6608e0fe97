"""Plane algebraic curves f(x, y) = sum a_ij x^i y^j.

The discriminant points are the zeros of Res_y(f, f_y) together with the
zeros of the leading coefficient a_N(x).  The resultant is computed exactly:
every double is a dyadic rational, so after a common power-of-two scaling
the coefficients are Gaussian integers and the Sylvester determinant can be
evaluated with fraction-free elimination and interpolated without rounding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import frexp

import numpy as np

from .polymath import UnivariatePolynomial, cluster, roots


class CurveError(ValueError):
    pass


@dataclass(frozen=True)
class BivariatePolynomial:
    """Coefficient matrix ``a[i, j]`` of x**i * y**j."""

    coeffs: np.ndarray

    def __post_init__(self):
        a = np.atleast_2d(np.asarray(self.coeffs, dtype=complex))
        if a.ndim != 2:
            raise CurveError("coefficient matrix must be two-dimensional")
        if not np.all(np.isfinite(a)):
            raise CurveError("coefficients must be finite")
        rows = np.flatnonzero(np.any(a != 0, axis=1))
        cols = np.flatnonzero(np.any(a != 0, axis=0))
        if rows.size == 0:
            raise CurveError("the zero polynomial does not define a curve")
        a = a[: rows[-1] + 1, : cols[-1] + 1].copy()
        a.setflags(write=False)
        object.__setattr__(self, "coeffs", a)

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], complex]) -> BivariatePolynomial:
        """Build from ``{(i, j): a_ij}``."""
        m = max(i for i, _ in terms) + 1
        n = max(j for _, j in terms) + 1
        a = np.zeros((m, n), dtype=complex)
        for (i, j), c in terms.items():
            a[i, j] += c
        return cls(a)

    @property
    def x_degree(self) -> int:
        return self.coeffs.shape[0] - 1

    @property
    def y_degree(self) -> int:
        return self.coeffs.shape[1] - 1

    def __call__(self, x, y):
        x = np.asarray(x, dtype=complex)
        y = np.asarray(y, dtype=complex)
        out = np.zeros(np.broadcast(x, y).shape, dtype=complex)
        for j in range(self.y_degree, -1, -1):
            out = out * y + self.y_coefficient(j)(x)
        return out[()] if out.ndim == 0 else out

    def __mul__(self, c: complex) -> BivariatePolynomial:
        return BivariatePolynomial(self.coeffs * c)

    __rmul__ = __mul__

    def y_coefficient(self, j: int) -> UnivariatePolynomial:
        """a_j(x) as a polynomial in x."""
        return UnivariatePolynomial(self.coeffs[:, j])

    def leading(self) -> UnivariatePolynomial:
        return self.y_coefficient(self.y_degree)

    def at_x(self, x0: complex) -> np.ndarray:
        """Ascending coefficients in y of f(x0, y)."""
        powers = complex(x0) ** np.arange(self.x_degree + 1)
        return powers @ self.coeffs

    def scale(self) -> float:
        return float(np.max(np.abs(self.coeffs)))


def y_derivative(f: BivariatePolynomial) -> BivariatePolynomial:
    if f.y_degree < 1:
        raise CurveError("f does not depend on y")
    j = np.arange(1, f.y_degree + 1)
    return BivariatePolynomial(f.coeffs[:, 1:] * j)


@dataclass(frozen=True)
class Fiber:
    x0: complex
    values: np.ndarray


def fiber(f: BivariatePolynomial, x0: complex, start=None, rtol: float = 1e-12) -> Fiber:
    """The N roots y of f(x0, y) = 0, in solver order."""
    c = f.at_x(x0)
    if abs(c[-1]) <= rtol * np.max(np.abs(c)):
        raise CurveError(f"leading coefficient a_N vanishes at x = {x0}: a sheet escapes to infinity")
    return Fiber(complex(x0), roots(c, start=start))


# --- exact resultant -------------------------------------------------------
# Gaussian integers are (re, im) pairs of Python ints.


def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _gdiv_exact(a, b):
    n = b[0] * b[0] + b[1] * b[1]
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    q = (re // n, im // n)
    assert q[0] * n == re and q[1] * n == im, "inexact Bareiss division"
    return q


def _bareiss_det(m: list[list[tuple[int, int]]]) -> tuple[int, int]:
    """Determinant of a Gaussian-integer matrix by fraction-free elimination."""
    m = [row[:] for row in m]
    n = len(m)
    sign = 1
    prev = (1, 0)
    for k in range(n - 1):
        if m[k][k] == (0, 0):
            for r in range(k + 1, n):
                if m[r][k] != (0, 0):
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return (0, 0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _gsub(_gmul(m[i][j], m[k][k]), _gmul(m[i][k], m[k][j]))
                m[i][j] = _gdiv_exact(num, prev)
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return (sign * d[0], sign * d[1])


def _to_gaussian(a: np.ndarray) -> tuple[list[list[tuple[int, int]]], int]:
    """Scale a complex array by 2**s so every entry is a Gaussian integer.

    Returns the integer entries and s.
    """
    exps = [frexp(float(v))[1] - 53 for v in np.concatenate([a.real.ravel(), a.imag.ravel()]) if v != 0]
    s = max(0, -min(exps)) if exps else 0
    out = []
    for row in a:
        out.append([
            (int(Fraction(float(v.real)) * 2**s), int(Fraction(float(v.imag)) * 2**s)) for v in row
        ])
    return out, s


def _sylvester_at(fc, gc, x: int):
    """Sylvester matrix (rows of descending y-coefficients) at integer x."""
    def column_values(cols):
        vals = []
        for col in cols:
            acc = (0, 0)
            for c in reversed(col):
                acc = (acc[0] * x + c[0], acc[1] * x + c[1])
            vals.append(acc)
        return vals[::-1]

    fv = column_values(fc)
    gv = column_values(gc)
    n, m = len(fv) - 1, len(gv) - 1
    size = n + m
    rows = []
    for r in range(m):
        rows.append([(0, 0)] * r + fv + [(0, 0)] * (size - n - 1 - r))
    for r in range(n):
        rows.append([(0, 0)] * r + gv + [(0, 0)] * (size - m - 1 - r))
    return rows


def _interpolate_exact(xs: list[int], ys: list[int]) -> list[Fraction]:
    """Monomial coefficients (ascending) of the interpolant through integer data."""
    n = len(xs)
    dd = [Fraction(v) for v in ys]
    for k in range(1, n):
        for i in range(n - 1, k - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k])
    coeffs = [Fraction(0)] * n
    coeffs[0] = dd[n - 1]
    # Horner on the Newton form: p = dd[n-1]; p = p*(x - xs[k]) + dd[k]
    for k in range(n - 2, -1, -1):
        new = [Fraction(0)] * n
        for i in range(n - 1):
            new[i + 1] += coeffs[i]
            new[i] -= coeffs[i] * xs[k]
        new[0] += dd[k]
        coeffs = new
    return coeffs


def sylvester_resultant_y(f: BivariatePolynomial, g: BivariatePolynomial) -> UnivariatePolynomial:
    """Res_y(f, g) as a polynomial in x, via the Sylvester determinant.

    The determinant is evaluated exactly at integer abscissae 0..D, with D
    the degree bound, and interpolated exactly.
    """
    if f.y_degree < 1 or g.y_degree < 1:
        raise CurveError("both polynomials need y-degree >= 1")
    n, m = f.y_degree, g.y_degree
    bound = f.x_degree * m + g.x_degree * n
    joint = np.zeros((max(f.x_degree, g.x_degree) + 1, n + m + 2), dtype=complex)
    joint[: f.x_degree + 1, : n + 1] = f.coeffs
    joint[: g.x_degree + 1, n + 1 : n + m + 2] = g.coeffs
    ints, s = _to_gaussian(joint)
    # columns of y-coefficients, each a list of x-coefficients
    fc = [[ints[i][j] for i in range(len(ints))] for j in range(n + 1)]
    gc = [[ints[i][n + 1 + j] for i in range(len(ints))] for j in range(m + 1)]
    xs = list(range(bound + 1))
    vals = [_bareiss_det(_sylvester_at(fc, gc, x)) for x in xs]
    re = _interpolate_exact(xs, [v[0] for v in vals])
    im = _interpolate_exact(xs, [v[1] for v in vals])
    unscale = Fraction(1, 2 ** (s * (n + m)))
    coeffs = np.array([complex(float(a * unscale), float(b * unscale)) for a, b in zip(re, im)])
    if not np.any(coeffs != 0):
        raise CurveError("resultant vanishes identically: curve not square-free in y")
    return UnivariatePolynomial(coeffs)


@dataclass(frozen=True)
class DiscriminantSet:
    """Distinct discriminant points; `at_infinity_sheet` flags zeros of a_N."""

    points: np.ndarray
    leading_zero: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=bool))
    multiplicity: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=int))

    def __len__(self):
        return len(self.points)


def discriminant_points(f: BivariatePolynomial, cluster_tol: float = 1e-8) -> DiscriminantSet:
    """Deduplicated zeros of Res_y(f, f_y) and of the leading coefficient a_N(x)."""
    res = sylvester_resultant_y(f, y_derivative(f))
    found = list(roots(res)) if res.degree >= 1 else []
    lead = f.leading()
    lead_roots = list(roots(lead)) if lead.degree >= 1 else []
    everything = np.array(found + lead_roots, dtype=complex)
    if everything.size == 0:
        return DiscriminantSet(np.zeros(0, dtype=complex), np.zeros(0, dtype=bool), np.zeros(0, dtype=int))
    groups = cluster(everything, rtol=cluster_tol)
    points = np.array([c for c, _ in groups])
    mult = np.array([k for _, k in groups])
    if lead_roots:
        tol = cluster_tol * max(1.0, float(np.max(np.abs(points))))
        flags = np.array([np.min(np.abs(np.array(lead_roots) - p)) <= tol for p in points])
    else:
        flags = np.zeros(len(points), dtype=bool)
    return DiscriminantSet(points, flags, mult)
