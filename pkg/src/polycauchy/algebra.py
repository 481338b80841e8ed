"""Exact univariate polynomials over arbitrary-precision rationals.

Coefficients are ``fractions.Fraction`` throughout, so every operation is
exact and equality is structural.  The polynomial in the variable x is the
carrier for all the named polynomial families built elsewhere in the
package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected an integer or Fraction, got {type(v).__name__}")


class Polynomial:
    """Dense polynomial in x with Fraction coefficients.

    Trailing zeros are stripped on construction, so two polynomials are
    equal iff their coefficient tuples are equal.  The zero polynomial has
    an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, power: int, c: Scalar = 1) -> "Polynomial":
        if power < 0:
            raise ValueError("monomial power must be nonnegative")
        return cls((0,) * power + (c,))

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    # -- ring operations --------------------------------------------------

    @staticmethod
    def _coerce(v):
        if isinstance(v, Polynomial):
            return v
        if isinstance(v, (int, Fraction)):
            return Polynomial((v,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            self.coefficient(i) + other.coefficient(i) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        inv = Fraction(1) / _frac(other)
        return Polynomial(c * inv for c in self.coeffs)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return not self.is_zero

    # -- calculus and substitution ---------------------------------------

    def evaluate(self, c: Scalar) -> Fraction:
        c = _frac(c)
        acc = Fraction(0)
        for coeff in reversed(self.coeffs):
            acc = acc * c + coeff
        return acc

    def shift(self, c: Scalar) -> "Polynomial":
        """p(x + c) by exact binomial expansion (Horner in x + c)."""
        c = _frac(c)
        acc = Polynomial()
        xc = Polynomial((c, 1))
        for coeff in reversed(self.coeffs):
            acc = acc * xc + coeff
        return acc

    def compose_affine(self, a: Scalar, b: Scalar) -> "Polynomial":
        """p(a*x + b)."""
        acc = Polynomial()
        lin = Polynomial((b, a))
        for coeff in reversed(self.coeffs):
            acc = acc * lin + coeff
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def quotient_by_x(self) -> "Polynomial":
        if self.coeffs and self.coeffs[0] != 0:
            raise ValueError("polynomial has a nonzero constant term, not divisible by x")
        return Polynomial(self.coeffs[1:])

    # -- rendering --------------------------------------------------------

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                body = str(c)
            elif i == 1:
                body = f"{abs(c)}x"
            else:
                body = f"{abs(c)}x^{i}"
            if not parts:
                if i > 0 and c < 0:
                    body = "-" + body
                parts.append(body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


# -- module-level operations ---------------------------------------------


def poly_eval(p: Polynomial, c: Scalar) -> Fraction:
    return p.evaluate(c)


def poly_shift(p: Polynomial, c: Scalar) -> Polynomial:
    return p.shift(c)


def poly_derivative(p: Polynomial) -> Polynomial:
    return p.derivative()


def rising_factorial(n: int) -> Polynomial:
    """x(x+1)...(x+n-1); the empty product for n = 0."""
    if n < 0:
        raise ValueError("rising_factorial needs n >= 0")
    result = Polynomial((1,))
    for i in range(n):
        result = result * Polynomial((i, 1))
    return result


def falling_factorial(n: int) -> Polynomial:
    """x(x-1)...(x-n+1); the empty product for n = 0."""
    if n < 0:
        raise ValueError("falling_factorial needs n >= 0")
    result = Polynomial((1,))
    for i in range(n):
        result = result * Polynomial((-i, 1))
    return result
