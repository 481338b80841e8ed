"""Truncated formal power series with exact coefficients.

A Series holds coefficients c_0..c_N of t^0..t^N; N is the truncation
order and is fixed per value.  Coefficients live in a commutative ring:
either Fraction, or Polynomial (for series carrying the variable x).
Mixed arithmetic between the two coefficient kinds goes through the
Polynomial coercion rules, so a rational series can be multiplied into a
polynomial-coefficient series without ceremony.

All operations are exact through index N.  Nothing ever extends or
shrinks the truncation order silently; div is the one operation that
returns a shorter series (it cancels the shared power of t first).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable

from .algebra import Polynomial


class SeriesError(ValueError):
    """Raised when a series operation's preconditions are violated."""


def _elem(v):
    if isinstance(v, (Fraction, Polynomial)):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"unsupported series coefficient type {type(v).__name__}")


def _is_zero(c) -> bool:
    if isinstance(c, Polynomial):
        return c.is_zero
    return c == 0


def _unit_inverse(c):
    """Multiplicative inverse of a ring unit (nonzero rational, possibly
    wrapped in a constant polynomial)."""
    if isinstance(c, Polynomial):
        if c.degree > 0:
            raise SeriesError("leading coefficient is a non-constant polynomial, not a unit")
        if c.is_zero:
            raise SeriesError("leading coefficient is zero, not a unit")
        return Fraction(1) / c.coeffs[0]
    if c == 0:
        raise SeriesError("leading coefficient is zero, not a unit")
    return Fraction(1) / c


class Series:
    """Immutable truncated power series in t."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        object.__setattr__(self, "coeffs", tuple(_elem(c) for c in coeffs))
        if not self.coeffs:
            raise SeriesError("a series needs at least the constant coefficient")

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([Fraction(0)] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([Fraction(1)] + [Fraction(0)] * order)

    @classmethod
    def t(cls, order: int) -> "Series":
        if order < 1:
            raise SeriesError("t needs order >= 1")
        return cls([Fraction(0), Fraction(1)] + [Fraction(0)] * (order - 1))

    # -- queries ----------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def valuation(self) -> int:
        """Smallest index with a nonzero coefficient; order+1 for the zero
        series (sentinel)."""
        for i, c in enumerate(self.coeffs):
            if not _is_zero(c):
                return i
        return self.order + 1

    def is_delta(self) -> bool:
        return self.valuation() == 1

    def is_unit(self) -> bool:
        return not _is_zero(self.coeffs[0])

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise SeriesError(f"cannot extend truncation order {self.order} to {order}")
        return Series(self.coeffs[: order + 1])

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        if self.order != other.order:
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Series({list(self.coeffs)!r})"

    # -- linear operations ------------------------------------------------

    def _check_order(self, other: "Series"):
        if self.order != other.order:
            raise SeriesError(
                f"truncation order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other):
        if isinstance(other, Series):
            self._check_order(other)
            return Series(a + b for a, b in zip(self.coeffs, other.coeffs))
        if isinstance(other, (int, Fraction, Polynomial)):
            cs = list(self.coeffs)
            cs[0] = cs[0] + other
            return Series(cs)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Series(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, Series):
            self._check_order(other)
            return Series(a - b for a, b in zip(self.coeffs, other.coeffs))
        if isinstance(other, (int, Fraction, Polynomial)):
            return self + (-_elem(other))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Series":
        c = _elem(c)
        return Series(a * c for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        if isinstance(other, (int, Fraction, Polynomial)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            return self.scale(other)
        return NotImplemented

    def derivative(self) -> "Series":
        """Formal d/dt; the result order drops by one."""
        if self.order == 0:
            raise SeriesError("cannot differentiate an order-0 series")
        return Series(i * self.coeffs[i] for i in range(1, len(self.coeffs)))


# -- core operations ------------------------------------------------------


def mul(a: Series, b: Series) -> Series:
    a._check_order(b)
    n = a.order
    out = []
    for i in range(n + 1):
        acc = Fraction(0)
        for j in range(i + 1):
            ca = a.coeffs[j]
            if _is_zero(ca):
                continue
            acc = acc + ca * b.coeffs[i - j]
        out.append(acc)
    return Series(out)


def reciprocal(b: Series) -> Series:
    """1/b for a unit series, by the triangular recurrence."""
    inv0 = _unit_inverse(b.coeffs[0])
    out = [_elem(inv0)]
    for i in range(1, b.order + 1):
        acc = Fraction(0)
        for j in range(1, i + 1):
            cb = b.coeffs[j]
            if _is_zero(cb):
                continue
            acc = acc + cb * out[i - j]
        out.append(-acc * inv0)
    return Series(out)


def div(a: Series, b: Series) -> Series:
    """a/b after cancelling the shared power of t.

    Requires ord(b) <= ord(a) and a unit coefficient at b's valuation.
    The result has truncation order N - ord(b).
    """
    a._check_order(b)
    v = b.valuation()
    if v > b.order:
        raise SeriesError("division by the zero series")
    va = a.valuation()
    if va > a.order:
        return Series.zero(a.order - v)
    if v > va:
        raise SeriesError(f"ord(b)={v} exceeds ord(a)={va}")
    new_order = a.order - v
    ash = a.coeffs[v:]
    bsh = b.coeffs[v:]
    inv0 = _unit_inverse(bsh[0])
    out = []
    for i in range(new_order + 1):
        acc = ash[i]
        for j in range(i):
            cb = bsh[i - j]
            if _is_zero(cb):
                continue
            acc = acc - out[j] * cb
        out.append(acc * inv0)
    return Series(out)


def int_pow(a: Series, r: int) -> Series:
    """a**r by repeated squaring; negative r inverts a unit series first."""
    if r < 0:
        return int_pow(reciprocal(a), -r)
    result = Series.one(a.order)
    base = a
    while r:
        if r & 1:
            result = mul(result, base)
        base = mul(base, base)
        r >>= 1
    return result


def compose(outer: Series, inner: Series) -> Series:
    """outer(inner(t)); exact because inner has no constant term."""
    outer._check_order(inner)
    if not _is_zero(inner.coeffs[0]):
        raise SeriesError("inner series must have zero constant term")
    acc = Series.zero(outer.order)
    for c in reversed(outer.coeffs):
        acc = mul(acc, inner) + c
    return acc


def comp_inverse(f: Series) -> Series:
    """The compositional inverse fbar with f(fbar(t)) = t through order N.

    Solved coefficient by coefficient: adding g_m t^m perturbs f(g) at
    index m by f_1 * g_m, so each new coefficient is a one-step solve.
    """
    n = f.order
    if f.valuation() != 1:
        raise SeriesError("compositional inverse needs a delta series (ord = 1)")
    inv1 = _unit_inverse(f.coeffs[1])
    g = [Fraction(0)] * (n + 1)
    g[1] = _elem(inv1)
    for m in range(2, n + 1):
        h = compose(f, Series(g))
        g[m] = -h.coeffs[m] * inv1
    return Series(g)


def log_series(f: Series) -> Series:
    """log f via (log f)' = f'/f, integrated term by term; needs c_0 = 1."""
    if f.coeffs[0] != 1:
        raise SeriesError("log needs constant coefficient 1")
    if f.order == 0:
        return Series.zero(0)
    h = div(f.derivative(), f.truncate(f.order - 1))
    out = [Fraction(0)]
    for i, c in enumerate(h.coeffs):
        out.append(c * Fraction(1, i + 1))
    return Series(out)


def exp_series(f: Series) -> Series:
    """exp f via (exp f)' = f' exp f; needs c_0 = 0."""
    if not _is_zero(f.coeffs[0]):
        raise SeriesError("exp needs zero constant coefficient")
    n = f.order
    out = [_elem(Fraction(1))]
    for m in range(1, n + 1):
        acc = Fraction(0)
        for j in range(1, m + 1):
            cf = f.coeffs[j]
            if _is_zero(cf):
                continue
            acc = acc + j * cf * out[m - j]
        out.append(acc * Fraction(1, m))
    return Series(out)


def coefficient(f: Series, n: int):
    if n > f.order:
        raise SeriesError(
            f"coefficient {n} exceeds truncation order {f.order}; recompute at a higher order"
        )
    return f.coeffs[n]


def factorial_coefficient(f: Series, n: int):
    """n! * [t^n] f — the umbral pairing <f | x^n>."""
    return factorial(n) * coefficient(f, n)


# -- stock series ---------------------------------------------------------


def log_one_plus_t(order: int) -> Series:
    """t - t^2/2 + t^3/3 - ... (Mercator series)."""
    return Series(
        [Fraction(0)] + [Fraction((-1) ** (i + 1), i) for i in range(1, order + 1)]
    )


def exp_t(order: int) -> Series:
    return Series(Fraction(1, factorial(i)) for i in range(order + 1))
