"""Univariate complex polynomials, Aberth-Ehrlich root finding and
Gauss-Legendre quadrature."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

EPS = np.finfo(float).eps
MAX_ITER = 1000


class RootFindingError(ArithmeticError):
    """Simultaneous iteration failed to converge."""

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


@dataclass(frozen=True)
class UnivariatePolynomial:
    """Polynomial with complex coefficients in ascending order of degree."""

    coefficients: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coefficients, dtype=complex))
        nz = np.flatnonzero(c)
        c = c[: nz[-1] + 1] if nz.size else c[:1] * 0
        object.__setattr__(self, "coefficients", c)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, z):
        return evaluate(self, z)

    def __mul__(self, other: UnivariatePolynomial) -> UnivariatePolynomial:
        return UnivariatePolynomial(np.convolve(self.coefficients, other.coefficients))

    def scale(self) -> float:
        return float(np.max(np.abs(self.coefficients)))


def evaluate(p, z):
    """Horner evaluation; `p` may be a polynomial or an ascending coefficient array."""
    c = p.coefficients if isinstance(p, UnivariatePolynomial) else np.asarray(p)
    z = np.asarray(z, dtype=complex)
    acc = np.full(z.shape, c[-1], dtype=complex)
    for a in c[-2::-1]:
        acc = acc * z + a
    return acc[()] if acc.ndim == 0 else acc


def root_bound(c: np.ndarray) -> float:
    """Fujiwara bound on the moduli of the roots of ascending coefficients `c`."""
    n = len(c) - 1
    ratios = np.abs(c[:-1] / c[-1])
    k = n - np.arange(n)
    ratios[0] /= 2.0
    return float(2.0 * np.max(ratios ** (1.0 / k)))


def _aberth(c: np.ndarray, z: np.ndarray, maxiter: int = MAX_ITER):
    """Aberth-Ehrlich iteration on ascending coefficients `c` from start `z`.

    Returns the final iterates and a flag telling whether every root met the
    step or rounding-floor criterion.
    """
    n = len(c) - 1
    z = z.astype(complex, copy=True)
    dc = c[1:] * np.arange(1, n + 1)
    absc = np.abs(c)
    active = np.ones(n, dtype=bool)
    for _ in range(maxiter):
        za = z[active]
        p = np.full(za.shape, c[-1], dtype=complex)
        dp = np.full(za.shape, dc[-1], dtype=complex)
        err = np.full(za.shape, absc[-1])
        aza = np.abs(za)
        for k in range(n - 1, -1, -1):
            p = p * za + c[k]
            err = err * aza + absc[k]
            if k > 0:
                dp = dp * za + dc[k - 1]
        diff = za[:, None] - z[None, :]
        idx = np.flatnonzero(active)
        diff[np.arange(len(idx)), idx] = 1.0
        repulsion = (1.0 / diff).sum(axis=1) - 1.0
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            w = ratio / (1.0 - ratio * repulsion)
        at_floor = np.abs(p) <= 4 * n * EPS * err
        w = np.where(at_floor | ~np.isfinite(w), 0.0, w)
        z[active] = za - w
        small = np.abs(w) < 1e-14 * (1.0 + np.abs(za))
        active[idx[small]] = False
        if not active.any():
            return z, True
    return z, False


def roots(p, tol: float = 1e-10, start=None) -> np.ndarray:
    """All roots of `p` with multiplicity.

    `start` optionally seeds the iteration (e.g. the fiber at a nearby
    point); otherwise seeds are spread on a circle of radius `root_bound`.
    Exact zero low-order coefficients are reported as exact zero roots.
    """
    poly = p if isinstance(p, UnivariatePolynomial) else UnivariatePolynomial(p)
    c = poly.coefficients
    if poly.degree < 1:
        raise ValueError("roots() needs a polynomial of degree >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    nzero = int(np.flatnonzero(c)[0])
    c = c[nzero:]
    n = len(c) - 1
    if n == 0:
        return np.zeros(nzero, dtype=complex)
    if n == 1:
        found = np.array([-c[0] / c[1]])
    else:
        if start is not None and len(start) == poly.degree and nzero == 0:
            z0 = np.asarray(start, dtype=complex)
        else:
            r = root_bound(c)
            z0 = r * np.exp(1j * (2 * np.pi * np.arange(n) / n + 0.4))
        found, converged = _aberth(c, z0)
        resid = _residuals(c, found)
        if not converged and np.any(resid > tol):
            raise RootFindingError(
                f"Aberth iteration did not converge in {MAX_ITER} steps "
                f"(max scaled residual {resid.max():.3e})",
                float(resid.max()),
            )
    return np.concatenate([np.zeros(nzero, dtype=complex), found])


def _residuals(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    n = len(c) - 1
    scale = np.max(np.abs(c)) * np.maximum(1.0, np.abs(z)) ** n
    return np.abs(evaluate(c, z)) / scale


def residual(p: UnivariatePolynomial, z) -> np.ndarray:
    """|p(z)| divided by max|coeff| * max(1, |z|)**degree."""
    return _residuals(p.coefficients, np.asarray(z, dtype=complex))


def cluster(points, rtol: float = 1e-8):
    """Group points closer than `rtol` times the largest modulus (at least 1).

    Returns a list of (centroid, multiplicity) in first-seen order.
    """
    pts = np.asarray(points, dtype=complex)
    if pts.size == 0:
        return []
    tol = rtol * max(1.0, float(np.max(np.abs(pts))))
    groups: list[list[complex]] = []
    for z in pts:
        for g in groups:
            if abs(z - np.mean(g)) <= tol:
                g.append(z)
                break
        else:
            groups.append([z])
    return [(complex(np.mean(g)), len(g)) for g in groups]


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray

    @property
    def order(self) -> int:
        return len(self.nodes)

    def integrate(self, f, a: float = -1.0, b: float = 1.0):
        half = 0.5 * (b - a)
        x = 0.5 * (a + b) + half * self.nodes
        return half * np.dot(self.weights, f(x))


_GL_CACHE: dict[int, QuadratureRule] = {}


def gauss_legendre(n: int) -> QuadratureRule:
    """Gauss-Legendre rule of order `n` on [-1, 1] via Newton on the
    three-term recurrence."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n in _GL_CACHE:
        return _GL_CACHE[n]
    m = (n + 1) // 2
    i = np.arange(1, m + 1)
    x = np.cos(np.pi * (i - 0.25) / (n + 0.5))
    for _ in range(100):
        p0, p1 = np.ones_like(x), x.copy()
        for k in range(2, n + 1):
            p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
        dp = n * (x * p1 - p0) / (x * x - 1.0)
        dx = p1 / dp
        x = x - dx
        if np.max(np.abs(dx)) < 1e-16:
            break
    p0, p1 = np.ones_like(x), x.copy()
    for k in range(2, n + 1):
        p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
    dp = n * (x * p1 - p0) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    # x holds the nonnegative half in decreasing order
    nodes = np.concatenate([-x, x[::-1][n % 2:]])
    weights = np.concatenate([w, w[::-1][n % 2:]])
    if n % 2:
        nodes[m - 1] = 0.0
    rule = QuadratureRule(nodes, weights)
    _GL_CACHE[n] = rule
    return rule
