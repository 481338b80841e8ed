import random
from fractions import Fraction as F

import pytest

from polycauchy.algebra import (
    Polynomial,
    falling_factorial,
    poly_derivative,
    poly_eval,
    poly_shift,
    rising_factorial,
)

X = Polynomial.x()
P = Polynomial((F(1, 3), -1, 1))  # x^2 - x + 1/3


def rand_poly(rng, deg=5):
    return Polynomial(
        F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(rng.randint(0, deg + 1))
    )


def rand_frac(rng):
    return F(rng.randint(-9, 9), rng.randint(1, 9))


def test_eval_constant_term():
    assert poly_eval(P, F(0)) == F(1, 3)


def test_eval_zero_polynomial():
    assert poly_eval(Polynomial(), F(7)) == 0


def test_eval_at_one():
    assert poly_eval(P, F(1)) == F(1, 3)


def test_shift_linear():
    assert poly_shift(X, 1) == Polynomial((1, 1))


def test_shift_square():
    assert poly_shift(X * X, -1) == Polynomial((1, -2, 1))


def test_shift_mixed():
    # (x-1)^2 - (x-1) + 1/3 expanded by hand
    assert poly_shift(P, -1) == Polynomial((F(7, 3), -3, 1))


def test_derivative():
    assert poly_derivative(X ** 3) == 3 * X * X
    assert poly_derivative(Polynomial((5,))) == Polynomial()
    assert poly_derivative(P) == Polynomial((-1, 2))


def test_rising_factorial_small():
    assert rising_factorial(0) == Polynomial((1,))
    assert rising_factorial(2) == Polynomial((0, 1, 1))
    assert rising_factorial(3) == Polynomial((0, 2, 3, 1))


def test_falling_factorial_small():
    assert falling_factorial(0) == Polynomial((1,))
    assert falling_factorial(2) == Polynomial((0, -1, 1))
    assert falling_factorial(3) == Polynomial((0, 2, -3, 1))


def test_eval_is_multiplicative():
    rng = random.Random(7)
    for _ in range(50):
        p, q = rand_poly(rng), rand_poly(rng)
        c = rand_frac(rng)
        assert poly_eval(p * q, c) == poly_eval(p, c) * poly_eval(q, c)


def test_shift_is_additive():
    rng = random.Random(8)
    for _ in range(50):
        p = rand_poly(rng)
        a, b = rand_frac(rng), rand_frac(rng)
        assert poly_shift(poly_shift(p, a), b) == poly_shift(p, a + b)


def test_ring_laws_randomized():
    rng = random.Random(9)
    for _ in range(50):
        p, q, s = rand_poly(rng), rand_poly(rng), rand_poly(rng)
        assert (p * q) * s == p * (q * s)
        assert p * (q + s) == p * q + p * s
        assert p * q == q * p


def test_rising_reflects_to_falling():
    for n in range(13):
        assert rising_factorial(n).compose_affine(-1, 0) == F((-1) ** n) * falling_factorial(n)


def test_normalization_and_equality():
    assert Polynomial((1, 2, 0, 0)) == Polynomial((1, 2))
    assert Polynomial((0,)) == Polynomial()
    assert Polynomial((F(2, 4),)) == Polynomial((F(1, 2),))
    assert Polynomial((3,)) == 3


def test_division_by_zero_scalar_raises():
    with pytest.raises(ZeroDivisionError):
        P / 0


def test_str_rendering():
    assert str(P) == "1/3 - 1x + 1x^2"
    assert str(Polynomial((-1, 1))) == "-1 + 1x"
    assert str(Polynomial()) == "0"
    assert str(Polynomial((0, -2))) == "-2x"


def test_quotient_by_x():
    assert (X * P).quotient_by_x() == P
    with pytest.raises(ValueError):
        P.quotient_by_x()
