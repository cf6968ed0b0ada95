"""Dirichlet characters, twisted H-numbers, and the p-adic L-function.

Characters come in two value modes. `rational` restricts to order <= 2
(values in {-1, 0, 1}) and keeps every computation in exact rationals;
`teichmuller` stores unit residues mod p^M whose (p-1)-st power is 1, which
is what the omega-twists used in interpolation need. Twisting chi by
omega^k bumps the modulus to lcm(d, p).

The two L-value routes are deliberately independent: `l_riemann` sums the
defining integral over the p-adic units at level N, while `l_at_negative`
evaluates the closed form with its Euler-like correction factor at u^p, q^p.
The interpolation and Kummer suites compare them.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

from .errors import InternalError, PoleError, PreconditionError
from .exact_numbers import (
    PadicContext,
    PadicNumber,
    Rational,
    agreement_valuation,
    padic_pow,
    teichmuller,
    to_padic,
    valuation,
)
from .euler_barnes import BarnesParams, h_closed
from .padic_integration import DEFAULT_BUDGET, AdmissibleU, _check_budget
from .qnum import FractionalArg, QBase, qbracket, qbracket_z

_RATIONAL_VALUES = (Fraction(-1), Fraction(0), Fraction(1))


class DirichletCharacter:
    """A character mod d, stored as its full value table.

    values[x] is chi(x) for 0 <= x < d; zero exactly off the units. Rational
    mode fixes the value set to {-1, 0, 1} (so the order divides 2);
    teichmuller mode stores integer residues mod p^M that are (p-1)-st roots
    of unity, tied to a PadicContext.
    """

    __slots__ = ("modulus", "mode", "values", "context")

    def __init__(self, modulus, values, context: PadicContext | None = None):
        if modulus < 1:
            raise PreconditionError("modulus must be >= 1", parameter="d")
        values = tuple(values)
        if len(values) != modulus:
            raise PreconditionError(
                f"need exactly {modulus} values, got {len(values)}", parameter="values"
            )
        self.modulus = modulus
        self.context = context
        if context is None:
            self.mode = "rational"
            values = tuple(Fraction(v) for v in values)
            if any(v not in _RATIONAL_VALUES for v in values):
                raise PreconditionError(
                    "rational-mode values must lie in {-1, 0, 1}", parameter="values"
                )
        else:
            self.mode = "teichmuller"
            p, M = context.p, context.precision
            vals = []
            for v in values:
                v = int(v) % p**M
                if v != 0 and pow(v, p - 1, p**M) != 1:
                    raise PreconditionError(
                        "teichmuller-mode values must be (p-1)-st roots of unity",
                        parameter="values",
                    )
                vals.append(v)
            values = tuple(vals)
        self.values = values
        self._validate()

    def _validate(self) -> None:
        d = self.modulus
        for x in range(d):
            on_units = gcd(x, d) == 1
            if on_units == (self.values[x] == 0):
                raise PreconditionError(
                    f"chi({x}) must be {'nonzero' if on_units else 'zero'}",
                    parameter="values",
                )
        if self.values[1 % d] != (
            Fraction(1) if self.mode == "rational" else 1
        ):
            raise PreconditionError("chi(1) must be 1", parameter="values")
        units = [x for x in range(d) if gcd(x, d) == 1]
        if self.mode == "rational":
            for a in units:
                for b in units:
                    if self.values[a * b % d] != self.values[a] * self.values[b]:
                        raise PreconditionError(
                            "character table is not multiplicative", parameter="values"
                        )
        else:
            mod = self.context.p**self.context.precision
            for a in units:
                for b in units:
                    if self.values[a * b % d] != self.values[a] * self.values[b] % mod:
                        raise PreconditionError(
                            "character table is not multiplicative", parameter="values"
                        )

    # -- constructors -------------------------------------------------------

    @classmethod
    def trivial(cls, modulus: int) -> "DirichletCharacter":
        return cls(
            modulus,
            [Fraction(1) if gcd(x, modulus) == 1 else Fraction(0) for x in range(modulus)],
        )

    @classmethod
    def quadratic(cls, modulus: int) -> "DirichletCharacter":
        """The quadratic character mod 3 or mod 4."""
        if modulus == 3:
            return cls(3, [Fraction(0), Fraction(1), Fraction(-1)])
        if modulus == 4:
            return cls(4, [Fraction(0), Fraction(1), Fraction(0), Fraction(-1)])
        raise PreconditionError(
            "built-in quadratic characters exist for d in {3, 4}", parameter="d"
        )

    @classmethod
    def from_generator(
        cls,
        modulus: int,
        generator: int,
        image,
        context: PadicContext | None = None,
    ) -> "DirichletCharacter":
        """Build a character of a cyclic unit group by chi(generator) = image."""
        units = [x for x in range(modulus) if gcd(x, modulus) == 1]
        one = Fraction(1) if context is None else 1
        zero = Fraction(0) if context is None else 0
        if context is None:
            image = Fraction(image)
        else:
            image = int(image) % context.p**context.precision
        table = {1 % modulus: one}
        g, acc = generator % modulus, one
        x = 1 % modulus
        for _ in range(len(units)):
            x = x * g % modulus
            if context is None:
                acc = acc * image
            else:
                acc = acc * image % context.p**context.precision
            table[x] = acc
        if len(table) != len(units):
            raise PreconditionError(
                f"{generator} does not generate the units mod {modulus}",
                parameter="generator",
            )
        return cls(
            modulus,
            [table.get(x, zero) for x in range(modulus)],
            context,
        )

    @classmethod
    def teichmuller_character(cls, context: PadicContext) -> "DirichletCharacter":
        """omega itself as a character mod p."""
        p = context.p
        vals = [0] + [teichmuller(x, context).unit for x in range(1, p)]
        return cls(p, vals, context)

    # -- evaluation -----------------------------------------------------------

    def __call__(self, x: int):
        return self.values[x % self.modulus]

    def padic_value(self, x: int, context: PadicContext) -> PadicNumber:
        v = self.values[x % self.modulus]
        if self.mode == "rational":
            return to_padic(v, context)
        if context != self.context:
            raise PreconditionError("character belongs to a different p-adic context")
        if v == 0:
            return PadicNumber.zero(context)
        return PadicNumber(context, 0, v, context.precision)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.mode == other.mode
            and self.values == other.values
            and self.context == other.context
        )

    def __repr__(self) -> str:
        return f"DirichletCharacter(mod {self.modulus}, {self.mode})"


def char_eval(chi: DirichletCharacter, x: int):
    """Table lookup at x mod d; zero off the units."""
    return chi(x)


def twist_teichmuller(
    chi: DirichletCharacter, k: int, context: PadicContext
) -> DirichletCharacter:
    """chi * omega^k as a teichmuller-mode character mod lcm(d, p)."""
    p, M = context.p, context.precision
    mod = p**M
    if chi.mode == "teichmuller" and chi.context != context:
        raise PreconditionError("character belongs to a different p-adic context")
    d = chi.modulus
    L = d * p // gcd(d, p)
    vals = []
    for x in range(L):
        if gcd(x, L) != 1:
            vals.append(0)
            continue
        base = chi(x)
        if chi.mode == "rational":
            base = int(base) % mod
        w = pow(teichmuller(x, context).unit, k % (p - 1), mod)
        vals.append(base * w % mod)
    return DirichletCharacter(L, vals, context)


# ---------------------------------------------------------------------------
# twisted H-numbers


def h_chi(
    k: int,
    r: int,
    a: tuple[int, ...],
    u: Rational,
    q: Rational,
    chi: DirichletCharacter,
):
    """Twisted numbers H_{k,chi}^(r)(u, q | a) via the modulus-d expansion:

    (1-u)^r [d:q]^k / (1-u^d)^r *
        sum over i in {0..d-1}^r of chi(i_1)..chi(i_r) u^(|i|)
            H_k((a.i)/d, u^d, q^d | a)

    For d = 1 this collapses to the untwisted H_k. Rational-mode characters
    stay in exact rationals; teichmuller mode returns a PadicNumber.
    """
    a = tuple(int(x) for x in a)
    if r != len(a):
        raise PreconditionError("r must equal len(a)", parameter="r")
    u = Fraction(u)
    q = Fraction(q)
    d = chi.modulus
    ud = u**d
    if ud == 1:
        raise PoleError("u^d = 1", parameter="u")
    if q == 1:
        raise PreconditionError("q = 1; use the classical route", parameter="q")
    base = QBase(q, d)
    params = BarnesParams(a, ud, base)
    prefactor = (1 - u) ** r * qbracket(d, q) ** k / (1 - ud) ** r

    if chi.mode == "rational":
        total = Fraction(0)
        for iv in itertools.product(range(d), repeat=r):
            cv = Fraction(1)
            for ij in iv:
                cv *= chi(ij)
            if cv == 0:
                continue
            warg = FractionalArg(sum(aj * ij for aj, ij in zip(a, iv)), d)
            total += cv * u ** sum(iv) * h_closed(k, warg, params)
        return prefactor * total

    ctx = chi.context
    total = PadicNumber.zero(ctx)
    for iv in itertools.product(range(d), repeat=r):
        cv = to_padic(1, ctx)
        skip = False
        for ij in iv:
            v = chi.padic_value(ij, ctx)
            if v.is_zero:
                skip = True
                break
            cv = cv * v
        if skip:
            continue
        warg = FractionalArg(sum(aj * ij for aj, ij in zip(a, iv)), d)
        piece = to_padic(u ** sum(iv) * h_closed(k, warg, params), ctx)
        total = total + cv * piece
    return to_padic(prefactor, ctx) * total


# ---------------------------------------------------------------------------
# unit projection <x : q> = [x : q] / omega(x)


class UnitProjection:
    """A principal unit: the value is ≡ 1 (mod p) by construction."""

    __slots__ = ("value",)

    def __init__(self, value: PadicNumber):
        p = value.context.p
        if value.is_zero or value.valuation != 0 or value.unit % p != 1:
            raise PreconditionError(
                "unit projection must be ≡ 1 (mod p); check gcd(x, p) and q ≡ 1 (mod p)",
                parameter="x",
            )
        self.value = value

    def __repr__(self) -> str:
        return f"UnitProjection({self.value!r})"


def angle_bracket(x: int, q: Rational, context: PadicContext) -> UnitProjection:
    """<x : q> = [x : q] / omega(x) for a unit x and q ≡ 1 (mod p).

    [x : q] is computed exactly mod p^M by working mod p^(M+e) with
    e = nu_p(q - 1): lifting-the-exponent gives nu_p(1 - q^x) = e for unit
    x, so one division by p^e costs exactly the headroom e.
    """
    p, M = context.p, context.precision
    if gcd(x, p) != 1:
        raise PreconditionError("x must be a p-adic unit", parameter="x")
    q = Fraction(q)
    if q == 1:
        bracket = to_padic(x, context)
    else:
        e = int(valuation(q - 1, p))
        if e < 1:
            raise PreconditionError("q ≡ 1 (mod p) required", parameter="q")
        big = p ** (M + e)
        qU = q.numerator * pow(q.denominator, -1, big) % big
        num = (1 - pow(qU, x, big)) % big
        den = (1 - qU) % big
        num_unit = num // p**e
        den_unit = den // p**e
        if num_unit % p == 0 or den_unit % p == 0:
            raise InternalError("lifting-the-exponent valuation bookkeeping broke")
        bracket = PadicNumber(
            context, 0, num_unit * pow(den_unit, -1, p**M), M
        )
    return UnitProjection(bracket / teichmuller(x, context))


# ---------------------------------------------------------------------------
# the p-adic L-function, by two routes


def _tame_part(d: int, p: int) -> int:
    while d % p == 0:
        d //= p
    return d


def l_riemann(
    s: int | PadicNumber,
    chi: DirichletCharacter,
    u: AdmissibleU,
    q: Rational,
    a1: int,
    context: PadicContext,
    N: int,
    budget: int = DEFAULT_BUDGET,
) -> PadicNumber:
    """Level-N Riemann sum of the defining integral over the units:

    (1 / [D p^N : u]) sum over x < D p^N with p coprime to x of
        chi(x) <a1 x : q>^(-s) u^x

    D is the prime-to-p part of the character modulus; the p-part must be
    resolved by the level, i.e. the character modulus divides D p^N.
    """
    p, M = context.p, context.precision
    if u.p != p:
        raise PreconditionError("u and the context disagree on p", parameter="p")
    if gcd(a1, p) != 1:
        raise PreconditionError("a1 must be a p-adic unit", parameter="a")
    if N < 1:
        raise PreconditionError("N must be >= 1", parameter="level-N")
    D = _tame_part(chi.modulus, p)
    m = D * p**N
    if m % chi.modulus != 0:
        raise PreconditionError(
            "the level does not resolve the character's p-part", parameter="level-N"
        )
    _check_budget(m, budget)
    if isinstance(s, PadicNumber):
        neg_s: int | PadicNumber = -s
    else:
        neg_s = -int(s)
    up = to_padic(u.u, context)
    upow = to_padic(1, context)
    acc = PadicNumber.zero(context)
    for x in range(m):
        if x:
            upow = upow * up
        if gcd(x, p) != 1:
            continue
        cv = chi.padic_value(x, context)
        if cv.is_zero:
            continue
        ab = angle_bracket(a1 * x, q, context)
        acc = acc + padic_pow(ab.value, neg_s) * cv * upow
    if acc.is_zero:
        raise InternalError("unit-restricted sum vanished identically")
    return acc / to_padic(qbracket_z(m, u.u), context)


def _l_negative_exact(
    k: int, chi: DirichletCharacter, u: Rational, q: Rational, a1: int, p: int
) -> Rational:
    """Exact rational L(-k) for a rational-mode character."""
    main = h_chi(k, 1, (a1,), u, q, chi)
    cp = chi(p)
    if cp == 0:
        return main
    up, qp = u**p, q**p
    correction = (
        cp * qbracket(p, q) ** k * (1 - u) / (1 - up) * h_chi(k, 1, (a1,), up, qp, chi)
    )
    return main - correction


def l_at_negative(
    k: int,
    chi: DirichletCharacter,
    u: AdmissibleU,
    q: Rational,
    a1: int,
    context: PadicContext,
) -> PadicNumber:
    """Closed form at s = -k:

    L(-k, chi) = H_{k,chi}(u, q | a1)
                 - chi(p) [p:q]^k ((1-u)/(1-u^p)) H_{k,chi}(u^p, q^p | a1)

    Interpolates the level sums of <a1 x:q>^k chi omega^k against mu_u when
    omega(a1) = 1 (in particular for a1 ≡ 1 mod p).
    """
    p = context.p
    if u.p != p:
        raise PreconditionError("u and the context disagree on p", parameter="p")
    if gcd(a1, p) != 1:
        raise PreconditionError("a1 must be a p-adic unit", parameter="a")
    if k < 0:
        raise PreconditionError("k must be >= 0", parameter="k")
    q = Fraction(q)
    if chi.mode == "rational":
        return to_padic(_l_negative_exact(k, chi, u.u, q, a1, p), context)
    main = h_chi(k, 1, (a1,), u.u, q, chi)
    cp = chi.padic_value(p, context)
    if cp.is_zero:
        return main
    scale = to_padic(qbracket(p, q) ** k * (1 - u.u) / (1 - u.u**p), context)
    second = h_chi(k, 1, (a1,), u.u**p, q**p, chi)
    return main - cp * scale * second


def kummer_check(
    k: int,
    k2: int,
    n: int,
    chi: DirichletCharacter,
    u: AdmissibleU,
    q: Rational,
    a1: int,
    context: PadicContext,
) -> bool:
    """L(-k) ≡ L(-k2) mod p^n whenever k ≡ k2 mod (p-1) p^n.

    Rational-mode characters are checked with exact rational valuations,
    so the k = k2 corner (difference exactly zero) reports True instead of
    exhausting p-adic precision.
    """
    p = context.p
    if n < 1:
        raise PreconditionError("n must be >= 1", parameter="n")
    if (k2 - k) % ((p - 1) * p**n) != 0:
        raise PreconditionError(
            f"hypothesis needs k ≡ k2 mod (p-1) p^{n}", parameter="k"
        )
    if context.precision < n + 1:
        raise PreconditionError(
            "context precision too small to witness the congruence",
            parameter="precision",
        )
    q = Fraction(q)
    if chi.mode == "rational":
        diff = _l_negative_exact(k, chi, u.u, q, a1, p) - _l_negative_exact(
            k2, chi, u.u, q, a1, p
        )
        return valuation(diff, p) >= n
    va = l_at_negative(k, chi, u, q, a1, context)
    vb = l_at_negative(k2, chi, u, q, a1, context)
    return agreement_valuation(va, vb) >= n
