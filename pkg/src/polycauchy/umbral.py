"""Umbral-calculus layer: linear functionals, operator action of a series
on polynomials, Sheffer sequences by several routes, connection constants
and the transfer formula.

A series f acts on a polynomial p as sum_k c_k p^(k)(x) where c_k is the
plain t^k coefficient of f; pairing a series with a polynomial gives
<f | p> = sum_i p_i i! c_i.  Everything below is a direct consequence of
those two rules plus series algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .algebra import Polynomial
from .series import (
    Series,
    SeriesError,
    comp_inverse,
    compose,
    div,
    exp_series,
    exp_t,
    int_pow,
    mul,
    reciprocal,
)
from .families import cauchy_ratio, lif_neg_t

_X = Polynomial.x()

# One guard coefficient beyond the operator degree keeps the f'-inverse
# and g'/g quotients exact through the needed order.
GUARD = 2


@dataclass(frozen=True)
class ShefferPair:
    """An (invertible g, delta f) pair defining a Sheffer sequence."""

    g: Series
    f: Series

    def __post_init__(self):
        if self.g.order != self.f.order:
            raise SeriesError("g and f must share a truncation order")
        if not self.g.is_unit():
            raise SeriesError("g must be invertible (nonzero constant coefficient)")
        if self.f.valuation() != 1:
            raise SeriesError("f must be a delta series (order 1)")

    @property
    def order(self) -> int:
        return self.g.order


def identity_pair(order: int) -> ShefferPair:
    """(1, t): the monomials x^n."""
    return ShefferPair(Series.one(order), Series.t(order))


def bernoulli_pair(order: int) -> ShefferPair:
    """((e^t-1)/t, t): the classical Bernoulli polynomials."""
    g = div(exp_t(order + 1) - 1, Series.t(order + 1))
    return ShefferPair(g, Series.t(order))


def exp_minus_t(order: int) -> Series:
    return Series(
        Fraction((-1) ** i, factorial(i)) for i in range(order + 1)
    )


def backward_delta(order: int) -> Series:
    """e^{-t} - 1, the delta series of the mixed-type family."""
    return exp_minus_t(order) - 1


@lru_cache(maxsize=None)
def mixed_pair(r: int, k: int, order: int) -> ShefferPair:
    """The pair ((t e^t/(e^t-1))^r / Lif_k(-t), e^{-t}-1) whose Sheffer
    sequence is A_n^{(r,k)}(x)."""
    t_exp = mul(Series.t(order + 1), exp_t(order + 1))
    u = div(t_exp, exp_t(order + 1) - 1)  # t e^t / (e^t - 1), order drops to `order`
    g = mul(int_pow(u, r), reciprocal(lif_neg_t(k, order)))
    return ShefferPair(g, backward_delta(order))


# -- functional and operator action ---------------------------------------


def functional(f: Series, p: Polynomial) -> Fraction:
    """<f(t) | p(x)> = sum_i p_i i! [t^i]f."""
    if p.degree > f.order:
        raise SeriesError(
            f"functional needs series order >= deg p ({p.degree}), have {f.order}"
        )
    acc = Fraction(0)
    for i, c in enumerate(p.coeffs):
        if c:
            acc += c * factorial(i) * f.coeffs[i]
    return acc


def apply_series(op: Series, p: Polynomial) -> Polynomial:
    """Operator action: (sum c_k t^k) p = sum c_k p^(k)(x)."""
    result = Polynomial()
    deriv = p
    for k in range(min(op.order, p.degree) + 1 if p.degree >= 0 else 1):
        c = op.coeffs[k]
        if c:
            result = result + c * deriv
        deriv = deriv.derivative()
    return result


# -- Sheffer construction routes ------------------------------------------


@lru_cache(maxsize=None)
def _inverse_data(pair: ShefferPair):
    """(fbar, 1/g(fbar)) shared by the gf and conjugate routes."""
    fbar = comp_inverse(pair.f)
    ginv = reciprocal(compose(pair.g, fbar))
    return fbar, ginv


def sheffer_by_gf(pair: ShefferPair, n: int) -> Polynomial:
    """S_n = n! [t^n] of (1/g(fbar)) e^{x fbar(t)}."""
    if n > pair.order:
        raise SeriesError(f"pair order {pair.order} too small for degree {n}")
    fbar, ginv = _inverse_data(pair)
    gen = mul(ginv, exp_series(fbar.scale(_X)))
    c = factorial(n) * gen.coeffs[n]
    return c if isinstance(c, Polynomial) else Polynomial((c,))


def sheffer_by_conjugate(pair: ShefferPair, n: int) -> Polynomial:
    """S_n = sum_j (1/j!) <g(fbar)^{-1} fbar^j | x^n> x^j, an independent
    route to the same polynomial."""
    if n > pair.order:
        raise SeriesError(f"pair order {pair.order} too small for degree {n}")
    fbar, ginv = _inverse_data(pair)
    acc = Polynomial()
    pw = ginv
    for j in range(n + 1):
        coeff = Fraction(factorial(n), factorial(j)) * pw.coeffs[n]
        if coeff:
            acc = acc + Polynomial.monomial(j, coeff)
        pw = mul(pw, fbar)
    return acc


def sheffer_sequence(pair: ShefferPair, n: int) -> list[Polynomial]:
    """S_0 .. S_n by the generating-function route."""
    return [sheffer_by_gf(pair, i) for i in range(n + 1)]


def sheffer_next(pair: ShefferPair, s_n: Polynomial, n: int) -> Polynomial:
    """S_{n+1} = (x - g'(t)/g(t)) (1/f'(t)) S_n."""
    if n + 1 > pair.order:
        raise SeriesError(f"pair order {pair.order} too small for degree {n + 1}")
    m = pair.order - 1
    g, f = pair.g, pair.f
    log_deriv = div(g.derivative(), g.truncate(m))
    f_prime_inv = reciprocal(f.derivative())
    u = apply_series(f_prime_inv, s_n)
    return _X * u - apply_series(log_deriv, u)


def sheffer_derivative(pair: ShefferPair, n: int, lower: list[Polynomial]) -> Polynomial:
    """d/dx S_n = sum_{l<n} binom(n,l) <fbar | x^{n-l}> S_l, with lower
    holding S_0 .. S_{n-1}."""
    if len(lower) < n:
        raise ValueError("lower must hold S_0 .. S_{n-1}")
    fbar, _ = _inverse_data(pair)
    acc = Polynomial()
    for l in range(n):
        w = comb(n, l) * factorial(n - l) * fbar.coeffs[n - l]
        if w:
            acc = acc + w * lower[l]
    return acc


# -- connection constants and transfer ------------------------------------


def connection_constants(src: ShefferPair, dst: ShefferPair, n: int) -> list[list[Fraction]]:
    """Lower-triangular matrix C with src_i(x) = sum_m C[i][m] dst_m(x),
    rows i = 0..n.

    C[i][m] = (1/m!) i! [t^i] of (h(fbar)/g(fbar)) l(fbar)^m for the
    source pair (g, f) and destination pair (h, l).
    """
    if n > src.order or n > dst.order:
        raise SeriesError("pair order too small for the requested matrix")
    fbar, ginv = _inverse_data(src)
    base = mul(compose(dst.g.truncate(src.order), fbar), ginv)
    lcomp = compose(dst.f.truncate(src.order), fbar)
    rows = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    pw = base
    for m in range(n + 1):
        for i in range(m, n + 1):
            rows[i][m] = Fraction(factorial(i), factorial(m)) * pw.coeffs[i]
        pw = mul(pw, lcomp)
    return rows


def transfer(f: Series, g: Series, n: int) -> Polynomial:
    """Carry the associated sequence of (1, f) to (1, g):
    q_n = x (f/g)^n x^{-1} p_n."""
    if f.valuation() != 1 or g.valuation() != 1:
        raise SeriesError("transfer needs two delta series")
    if n == 0:
        return Polynomial((1,))
    if f == Series.t(f.order):
        p_n = Polynomial.monomial(n)
    else:
        p_n = sheffer_by_gf(ShefferPair(Series.one(f.order), f), n)
    ratio = int_pow(div(f, g), n)
    inner = p_n.quotient_by_x()
    return _X * apply_series(ratio, inner)
