"""Truncated formal power series over exact rationals.

Everything is a plain list of Fraction coefficients cut at a fixed order;
multiplication truncates, reciprocal needs an invertible constant term. The
two generating-function builders at the bottom turn series data into n!-scaled
coefficient lists for identity checking.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import PoleError, PreconditionError
from .exact_numbers import Rational
from .qnum import rational_power


class TruncatedSeries:
    """Power series modulo t^(order+1)."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence[Rational], order: int | None = None):
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise PreconditionError("order must be >= 0", parameter="order")
        c = [Fraction(x) for x in coeffs[: order + 1]]
        c.extend([Fraction(0)] * (order + 1 - len(c)))
        self.coeffs = c
        self.order = order

    @classmethod
    def constant(cls, value: Rational, order: int) -> "TruncatedSeries":
        return cls([Fraction(value)], order)

    @classmethod
    def scalar_exp(cls, c: Rational, order: int) -> "TruncatedSeries":
        """exp(c t) truncated."""
        c = Fraction(c)
        return cls([c**n / factorial(n) for n in range(order + 1)], order)

    def coefficient(self, n: int) -> Rational:
        if not 0 <= n <= self.order:
            raise PreconditionError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def _common_order(self, other: "TruncatedSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        k = self._common_order(other)
        return TruncatedSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(k + 1)], k
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        k = self._common_order(other)
        return TruncatedSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(k + 1)], k
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        k = self._common_order(other)
        out = [Fraction(0)] * (k + 1)
        for i, a in enumerate(self.coeffs[: k + 1]):
            if a == 0:
                continue
            for j in range(k + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(out, k)

    def scale(self, c: Rational) -> "TruncatedSeries":
        c = Fraction(c)
        return TruncatedSeries([c * a for a in self.coeffs], self.order)

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be nonzero."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise PoleError("series has no inverse: constant term is 0")
        inv0 = 1 / a0
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                acc += self.coeffs[k] * out[n - k]
            out.append(-inv0 * acc)
        return TruncatedSeries(out, self.order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.coeffs!r})"


def classical_gf_coefficients(
    w: Rational, v: Rational, a: Sequence[int], n_max: int
) -> list[Rational]:
    """n!-scaled coefficients of (1-v)^r e^(wt) / prod_j (e^(a_j t) - v).

    This is the classical (q -> 1) generating function; v = 1 is the pole of
    every factor and is rejected.
    """
    v = Fraction(v)
    if v == 1:
        raise PreconditionError("v = 1 is a pole of the generating function", parameter="u")
    r = len(a)
    if r < 1:
        raise PreconditionError("need at least one a_j", parameter="a")
    den = TruncatedSeries.constant(1, n_max)
    for aj in a:
        factor = TruncatedSeries.scalar_exp(aj, n_max) - TruncatedSeries.constant(v, n_max)
        den = den * factor
    gf = den.reciprocal().scale((1 - v) ** r) * TruncatedSeries.scalar_exp(w, n_max)
    return [factorial(n) * gf.coefficient(n) for n in range(n_max + 1)]


def q_gf_coefficients(
    params,
    x: int | None,
    n_max: int,
    j_max: int | None = None,
) -> list[Rational]:
    """n!-scaled coefficients of the q-deformed generating function.

    G(t) = e^(t/(1-q)) (1-u)^r sum_j [prod_l 1/(1 - q^(j a_l) u)]
           (-1/(1-q))^j q^(jx) t^j / j!

    x = None drops the q^(jx) factor (the numbers variant; same as x = 0).
    The j-sum truncates at j_max (default n_max, never below it); terms with
    j > n_max cannot reach t^n_max but their pole-freeness is still checked,
    since admissibility of the parameters is a property of the whole sum.
    """
    from .euler_barnes import BarnesParams  # cycle-free at call time

    if not isinstance(params, BarnesParams):
        raise PreconditionError("params must be a BarnesParams", parameter="params")
    if j_max is None:
        j_max = n_max
    if j_max < n_max:
        raise PreconditionError("j_max must be >= n_max", parameter="j_max")
    q = params.q.value
    if q == 1:
        raise PreconditionError("q = 1; use the classical route", parameter="q")
    u = params.u
    r = params.r
    c = 1 / (1 - q)
    jcoeffs = [Fraction(0)] * (n_max + 1)
    for j in range(j_max + 1):
        prod = Fraction(1)
        for l, al in enumerate(params.a):
            factor = 1 - rational_power(q, j * al) * u
            if factor == 0:
                raise PoleError(
                    f"pole 1 - q^(j a_l) u = 0 at j={j}, l={l}",
                    parameter="u",
                )
            prod /= factor
        if j > n_max:
            continue
        term = prod * (-c) ** j / factorial(j)
        if x is not None:
            term *= rational_power(q, j * x)
        jcoeffs[j] = term
    gf = TruncatedSeries.scalar_exp(c, n_max) * TruncatedSeries(jcoeffs, n_max)
    gf = gf.scale((1 - u) ** r)
    return [factorial(n) * gf.coefficient(n) for n in range(n_max + 1)]
