import numpy as np
import pytest
import sympy

from curvebranch.curve import (
    BivariatePolynomial,
    CurveError,
    discriminant_points,
    fiber,
    sylvester_resultant_y,
    y_derivative,
)

x, y = sympy.symbols("x y")


def to_sympy(f):
    return sum(
        sympy.nsimplify(complex(c).real) * x**i * y**j + sympy.I * sympy.nsimplify(complex(c).imag) * x**i * y**j
        for (i, j), c in np.ndenumerate(f.coeffs)
        if c != 0
    )


def test_coefficient_matrix_trimmed():
    f = BivariatePolynomial(np.array([[0, 1, 0], [2, 0, 0], [0, 0, 0]]))
    assert f.coeffs.shape == (2, 2)
    assert f.x_degree == 1 and f.y_degree == 1
    with pytest.raises(CurveError):
        BivariatePolynomial(np.zeros((2, 2)))


def test_evaluation(worked):
    assert worked(1.0, 2.0) == 8 - 4 - 1
    assert np.allclose(worked.at_x(2.0), [-512, -16, 0, 1])


def test_y_derivative_against_finite_difference(worked, rng):
    fy = y_derivative(worked)
    for _ in range(10):
        x0, y0 = rng.normal(size=2) + 1j * rng.normal(size=2)
        h = 1e-6
        fd = (worked(x0, y0 + h) - worked(x0, y0 - h)) / (2 * h)
        assert abs(fd - fy(x0, y0)) < 1e-6 * max(1.0, abs(fd))


def test_fiber_solves_curve(worked):
    fb = fiber(worked, 0.3 + 0.2j)
    assert len(fb.values) == 3
    assert np.max(np.abs(worked(0.3 + 0.2j, fb.values))) < 1e-13


def test_fiber_rejects_vanishing_leading_coefficient():
    f = BivariatePolynomial.from_terms({(1, 2): 1, (0, 0): 1})
    with pytest.raises(CurveError):
        fiber(f, 0.0)


def test_resultant_simple():
    f = BivariatePolynomial.from_terms({(0, 2): 1, (1, 0): -1})
    r = sylvester_resultant_y(f, y_derivative(f))
    assert np.array_equal(r.coefficients, [0, -4])


@pytest.mark.parametrize(
    "terms",
    [
        {(0, 3): 1, (3, 1): -2, (9, 0): -1},
        {(0, 2): 1, (3, 0): -1, (1, 0): 1},
        {(0, 9): 1, (2, 6): 2, (4, 3): 2, (6, 0): 1, (0, 2): 1},
        {(1, 3): 0.5 + 1j, (0, 2): -0.25, (2, 1): 3, (0, 0): 1j},
    ],
)
def test_resultant_against_sympy(terms):
    f = BivariatePolynomial.from_terms(terms)
    ours = sylvester_resultant_y(f, y_derivative(f)).coefficients
    F = to_sympy(f)
    ref = sympy.Poly(sympy.resultant(F, sympy.diff(F, y), y), x).all_coeffs()[::-1]
    ref = np.array([complex(c) for c in ref])
    assert len(ours) == len(ref)
    assert np.allclose(ours, ref, rtol=1e-15, atol=0)


def test_worked_discriminant(worked):
    d = discriminant_points(worked)
    assert len(d) == 10
    k0 = int(np.argmin(np.abs(d.points)))
    assert abs(d.points[k0]) < 1e-12
    assert d.multiplicity[k0] == 9
    others = np.delete(d.points, k0)
    assert np.allclose(np.abs(others), (32 / 27) ** (1 / 9), atol=1e-12, rtol=0)
    assert not d.leading_zero.any()


def test_leading_coefficient_zeros_flagged():
    # x y^2 - x: a_N = x vanishes at 0 although the resultant does not
    f = BivariatePolynomial.from_terms({(1, 2): 1, (1, 0): -1, (0, 0): 0.5})
    d = discriminant_points(f)
    k0 = int(np.argmin(np.abs(d.points)))
    assert abs(d.points[k0]) < 1e-14 and d.leading_zero[k0]
    assert d.leading_zero.sum() == 1


def test_not_square_free():
    f = BivariatePolynomial.from_terms({(0, 2): 1, (0, 1): -2, (0, 0): 1})  # (y - 1)^2
    with pytest.raises(CurveError):
        discriminant_points(f)
