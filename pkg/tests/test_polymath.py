import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvebranch import polymath
from curvebranch.polymath import RootFindingError, UnivariatePolynomial, evaluate, gauss_legendre, roots


def match_multisets(a, b):
    """Largest distance after greedily pairing a with b."""
    b = list(b)
    worst = 0.0
    for z in a:
        k = int(np.argmin([abs(z - w) for w in b]))
        worst = max(worst, abs(z - b.pop(k)))
    return worst


def companion_roots(c):
    c = np.asarray(c, dtype=complex)
    n = len(c) - 1
    m = np.zeros((n, n), dtype=complex)
    m[1:, :-1] = np.eye(n - 1)
    m[:, -1] = -c[:-1] / c[-1]
    return np.linalg.eigvals(m)


def test_roots_of_unity():
    z = roots([-1, 0, 0, 1])
    expected = np.exp(2j * np.pi * np.arange(3) / 3)
    assert match_multisets(z, expected) < 1e-14


def test_double_root():
    z = roots([1, -2, 1])
    assert len(z) == 2
    # a double root is only determined to about sqrt(eps)
    assert np.all(np.abs(z - 1) < 1e-7)


def test_exact_zero_roots():
    z = roots([0, 0, 2, 1])
    assert sorted(np.abs(z))[:2] == [0.0, 0.0]
    assert np.min(np.abs(z + 2)) < 1e-15


@pytest.mark.parametrize("seed", range(5))
def test_random_degree_12_against_companion(seed):
    rng = np.random.default_rng(seed)
    c = rng.normal(size=13) + 1j * rng.normal(size=13)
    assert match_multisets(roots(c), companion_roots(c)) < 1e-9


@settings(max_examples=50, deadline=None)
@given(st.lists(st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False), min_size=2, max_size=9))
def test_residual_bound(coeffs):
    c = np.array(coeffs + [1.0])
    z = roots(c, tol=1e-10)
    assert len(z) == len(c) - 1
    scale = np.max(np.abs(c)) * np.maximum(1.0, np.abs(z)) ** (len(c) - 1)
    assert np.all(np.abs(evaluate(c, z)) <= 1e-10 * scale)


def test_warm_start_keeps_order():
    c = np.array([-1, 0, 0, 1], dtype=complex)
    start = np.exp(2j * np.pi * np.array([2, 0, 1]) / 3) * 1.01
    z = roots(c, start=start)
    assert np.all(np.abs(z - start / 1.01) < 1e-14)


def test_non_convergence_raises(monkeypatch):
    monkeypatch.setattr(polymath, "_aberth", lambda c, z: (z, False))
    with pytest.raises(RootFindingError) as info:
        roots([1, 0, 1])
    assert info.value.residual > 0


def test_evaluate():
    assert evaluate([1, 0, 1], 1j) == 0
    assert evaluate([1], 3.7 + 2j) == 1
    p = UnivariatePolynomial([1, 2, 3, 0, 0])
    assert p.degree == 2
    assert p(2.0) == 17


def test_product_degree():
    p = UnivariatePolynomial([1, 1]) * UnivariatePolynomial([-1, 1])
    assert np.allclose(p.coefficients, [-1, 0, 1])


def test_gauss_legendre_small_orders():
    r1 = gauss_legendre(1)
    assert r1.nodes.tolist() == [0.0] and r1.weights.tolist() == [2.0]
    r2 = gauss_legendre(2)
    assert np.allclose(r2.nodes, [-1 / np.sqrt(3), 1 / np.sqrt(3)], atol=1e-15, rtol=0)
    assert np.allclose(r2.weights, [1, 1], atol=1e-15, rtol=0)
    assert abs(gauss_legendre(3).integrate(lambda x: x**4) - 0.4) <= 1e-14


@pytest.mark.parametrize("n", [5, 16, 33, 64, 128])
def test_gauss_legendre_against_mpmath(n):
    rule = gauss_legendre(n)
    with mpmath.workdps(40):
        # Newton refinement of each node in high precision
        for x in rule.nodes[: n // 2 + 1]:
            xr = mpmath.findroot(lambda t: mpmath.legendre(n, t), mpmath.mpf(float(x)))
            assert abs(float(xr) - x) < 1e-14
            w = 2 / ((1 - xr**2) * mpmath.diff(lambda t: mpmath.legendre(n, t), xr) ** 2)
            k = int(np.argmin(np.abs(rule.nodes - x)))
            assert abs(float(w) - rule.weights[k]) < 1e-14
    assert np.all(np.diff(rule.nodes) > 0)
    assert np.all(rule.weights > 0)
    assert abs(rule.weights.sum() - 2) < 1e-13


@pytest.mark.parametrize("n", [1, 4, 10, 32])
def test_gauss_legendre_exact_to_degree_2n_minus_1(n):
    rule = gauss_legendre(n)
    for d in range(2 * n):
        exact = 2 / (d + 1) if d % 2 == 0 else 0.0
        assert abs(rule.integrate(lambda x: x**d) - exact) < 1e-12
