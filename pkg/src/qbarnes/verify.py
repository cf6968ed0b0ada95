"""Machine verification suites for every identity the library computes.

Each suite runs a pinned, seeded parameter grid and reports per-check
residuals (exact rationals, expected 0) or p-adic error valuations
(expected to grow with the level). Nothing here is approximate: residuals
come from exact arithmetic and valuations are computed after the fact.

Suite names double as the CLI `verify` vocabulary.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable

from .characters_lfunctions import (
    DirichletCharacter,
    _l_negative_exact,
    angle_bracket,
    l_at_negative,
    l_riemann,
    twist_teichmuller,
)
from .errors import PoleError, PreconditionError
from .exact_numbers import (
    INFINITY,
    PadicContext,
    agreement_valuation,
    format_rational,
    padic_pow,
    to_padic,
    valuation,
)
from .euler_barnes import (
    BarnesParams,
    distribution_check,
    h_addition,
    h_carlitz,
    h_closed,
    limit_q_to_1,
)
from .padic_integration import (
    DEFAULT_BUDGET,
    AdmissibleU,
    MeasureCell,
    measure_additivity_check,
    measure_bound_check,
    multi_riemann_integral,
    prop5_check,
)
from .qnum import QBase, qbracket, qbracket_z
from .series import classical_gf_coefficients, q_gf_coefficients


@dataclass
class CheckResult:
    name: str
    params: dict
    passed: bool
    residual: str | None = None
    error_valuation: object | None = None

    def to_dict(self) -> dict:
        out: dict = {"name": self.name, "params": self.params}
        if self.residual is not None:
            out["residual"] = self.residual
        if self.error_valuation is not None:
            out["error_valuation"] = self.error_valuation
        out["pass"] = self.passed
        return out


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [c.to_dict() for c in self.checks],
            "pass": self.passed,
        }


def _fmt_val(v) -> object:
    return "inf" if v == INFINITY else int(v)


def _weakly_increasing(vals) -> bool:
    return all(b >= a for a, b in zip(vals, vals[1:]))


def _strictly_increasing(vals) -> bool:
    # an infinite valuation means the level is already exact; staying there
    # counts as increasing
    return all(b > a or b == INFINITY for a, b in zip(vals, vals[1:]))


class ParameterSampler:
    """Seeded small-height rational sampling with pole-aware retries."""

    MAX_TRIES = 500

    def __init__(self, seed: int):
        self.rng = random.Random(seed)
        self.resamples = 0

    def fraction(self, num_lo=-6, num_hi=6, den_hi=4, exclude=(0, 1)) -> Fraction:
        while True:
            x = Fraction(self.rng.randint(num_lo, num_hi), self.rng.randint(1, den_hi))
            if x not in exclude:
                return x
            self.resamples += 1

    def nonzero_int(self, lo: int, hi: int) -> int:
        while True:
            v = self.rng.randint(lo, hi)
            if v:
                return v

    def sample_until(self, build: Callable):
        """Run build() until it stops hitting poles, counting retries."""
        for _ in range(self.MAX_TRIES):
            try:
                return build()
            except PoleError:
                self.resamples += 1
        raise PreconditionError("could not sample pole-free parameters")


# ---------------------------------------------------------------------------


def suite_theorem1_gf(seed: int = 0, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    """Generating-function coefficients against the closed form, exactly."""
    report = SuiteReport("theorem1-gf")
    sampler = ParameterSampler(seed)
    n_max = 12
    x_values = (0, 1, 3)
    for i in range(30):
        r = 1 + i % 3

        def build():
            a = tuple(sampler.nonzero_int(-3, 3) for _ in range(r))
            q = sampler.fraction(exclude=(0, 1))
            u = sampler.fraction(exclude=(0, 1))
            params = BarnesParams(a, u, QBase(q))
            gf_numbers = q_gf_coefficients(params, None, n_max)
            gf_at_x = {x: q_gf_coefficients(params, x, n_max) for x in x_values}
            closed = {
                x: [h_closed(n, x, params) for n in range(n_max + 1)] for x in x_values
            }
            return params, gf_numbers, gf_at_x, closed

        before = sampler.resamples
        params, gf_numbers, gf_at_x, closed = sampler.sample_until(build)
        residual = Fraction(0)
        ok = gf_numbers == closed[0] and gf_at_x[0] == closed[0]
        if not ok:
            residual = next(
                g - c for g, c in zip(gf_numbers, closed[0]) if g != c
            )
        for x in x_values:
            if gf_at_x[x] != closed[x]:
                ok = False
                residual = next(
                    g - c for g, c in zip(gf_at_x[x], closed[x]) if g != c
                )
        report.checks.append(
            CheckResult(
                name=f"theorem1-gf/{i:02d}",
                params={
                    "r": r,
                    "a": list(params.a),
                    "q": format_rational(params.q.value),
                    "u": format_rational(params.u),
                    "n_max": n_max,
                    "x": list(x_values),
                    "resamples": sampler.resamples - before,
                },
                passed=ok,
                residual=format_rational(residual),
            )
        )
    return report


def suite_addition(seed: int = 0, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    """Binomial addition formula in w against the closed form."""
    report = SuiteReport("addition")
    sampler = ParameterSampler(seed)
    for i in range(20):
        r = 1 + i % 3

        def build():
            a = tuple(sampler.nonzero_int(-3, 3) for _ in range(r))
            q = sampler.fraction(exclude=(0, 1))
            u = sampler.fraction(exclude=(0, 1))
            params = BarnesParams(a, u, QBase(q))
            h_closed(8, 0, params)  # probe the worst pole up front
            return params

        before = sampler.resamples
        params = sampler.sample_until(build)
        residual = Fraction(0)
        ok = True
        for n in range(9):
            for w in range(6):
                diff = h_addition(n, w, params) - h_closed(n, w, params)
                if diff != 0:
                    ok = False
                    residual = diff
                    break
            if not ok:
                break
        report.checks.append(
            CheckResult(
                name=f"addition/{i:02d}",
                params={
                    "r": r,
                    "a": list(params.a),
                    "q": format_rational(params.q.value),
                    "u": format_rational(params.u),
                    "n_max": 8,
                    "w_max": 5,
                    "resamples": sampler.resamples - before,
                },
                passed=ok,
                residual=format_rational(residual),
            )
        )
    return report


def suite_distribution(seed: int = 0, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    """Order-f distribution relation, exact residuals over the pinned grid."""
    report = SuiteReport("distribution")
    sampler = ParameterSampler(seed)
    for i in range(20):
        r = 1 + i % 2

        def build():
            a = tuple(sampler.nonzero_int(-2, 2) for _ in range(r))
            # q = -1 collapses the order-2 refined base to 1, u = ±1 sits on
            # the u^f = 1 pole
            q = sampler.fraction(exclude=(0, 1, -1))
            u = sampler.fraction(exclude=(0, 1, -1))
            params = BarnesParams(a, u, QBase(q))
            for f in (2, 3):
                distribution_check(2, 0, f, params)  # pole probe
            return params

        before = sampler.resamples
        params = sampler.sample_until(build)
        residual = Fraction(0)
        ok = True
        for f in (2, 3):
            for w in (0, 1, 2):
                for n in range(9):
                    diff = distribution_check(n, w, f, params)
                    if diff != 0:
                        ok = False
                        residual = diff
        report.checks.append(
            CheckResult(
                name=f"distribution/{i:02d}",
                params={
                    "r": r,
                    "a": list(params.a),
                    "q": format_rational(params.q.value),
                    "u": format_rational(params.u),
                    "f": [2, 3],
                    "w": [0, 1, 2],
                    "n_max": 8,
                    "resamples": sampler.resamples - before,
                },
                passed=ok,
                residual=format_rational(residual),
            )
        )
    return report


def suite_carlitz_bridge(seed: int = 0, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    """Closed form at r=1, w=0 against the umbral recurrence with u inverted."""
    report = SuiteReport("carlitz-bridge")
    sampler = ParameterSampler(seed)
    for i in range(10):

        def build():
            q = sampler.fraction(exclude=(0, 1))
            u = sampler.fraction(exclude=(0, 1))
            params = BarnesParams((1,), u, QBase(q))
            recur = [h_carlitz(k, 1 / u, q) for k in range(11)]
            closed = [h_closed(k, 0, params) for k in range(11)]
            return params, recur, closed

        before = sampler.resamples
        params, recur, closed = sampler.sample_until(build)
        residual = Fraction(0)
        ok = recur == closed
        if not ok:
            residual = next(a - b for a, b in zip(recur, closed) if a != b)
        report.checks.append(
            CheckResult(
                name=f"carlitz-bridge/{i:02d}",
                params={
                    "q": format_rational(params.q.value),
                    "u": format_rational(params.u),
                    "k_max": 10,
                    "resamples": sampler.resamples - before,
                },
                passed=ok,
                residual=format_rational(residual),
            )
        )
    return report


def suite_qlimit(seed: int = 0, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    """q -> 1 limit of the reduced rational form against the classical
    Frobenius-Euler generating function (parameter v = 1/u)."""
    report = SuiteReport("qlimit")
    sampler = ParameterSampler(seed)
    n_max = 10
    for i in range(10):
        r = 1 + i % 2
        w = i % 3

        def build():
            a = tuple(sampler.nonzero_int(-2, 2) for _ in range(r))
            u = sampler.fraction(exclude=(0, 1))
            return a, u

        before = sampler.resamples
        a, u = sampler.sample_until(build)
        classical = classical_gf_coefficients(w, 1 / u, a, n_max)
        residual = Fraction(0)
        ok = True
        for n in range(n_max + 1):
            lim = limit_q_to_1(n, w, r, a, u)
            if lim != classical[n]:
                ok = False
                residual = lim - classical[n]
                break
        report.checks.append(
            CheckResult(
                name=f"qlimit/{i:02d}",
                params={
                    "r": r,
                    "a": list(a),
                    "u": format_rational(u),
                    "w": w,
                    "n_max": n_max,
                    "resamples": sampler.resamples - before,
                },
                passed=ok,
                residual=format_rational(residual),
            )
        )
    return report


# ---------------------------------------------------------------------------
# p-adic suites


def _sample_padic_qu(sampler: ParameterSampler, p: int, v: int) -> tuple[Fraction, Fraction]:
    """Integer q ≡ 1 mod p and u of exact valuation v (keeps big sums fast)."""
    q = Fraction(1 + p * sampler.rng.choice((1, 2, 3)))
    c = sampler.rng.choice([x for x in (1, 2, 3, 4) if x % p])
    u = Fraction(p) ** v * c
    return q, u


def suite_riemann_limit(seed: int = 0, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    """Multi-axis Riemann sums of [w + a.x : q]^n against the closed form.

    For nu_p(u) >= 1 the observed error valuation must be weakly increasing
    over the levels and reach N - 1 at the last one. The extra nu_p(u) < 0
    sample only guarantees the tail bound (>= N - 1 at every level): an
    accidental extra cancellation at a coarse level is legitimate there.
    """
    report = SuiteReport("riemann-limit")
    sampler = ParameterSampler(seed)
    levels = (1, 2, 3, 4)
    for p, r in ((3, 1), (5, 1), (7, 1), (3, 2)):
        vals_of_u = (1, 2, -1) if (p, r) == (3, 1) else (1, 2)
        for v in vals_of_u:
            q, u = _sample_padic_qu(sampler, p, v)
            uu = AdmissibleU(u, p)
            a = tuple(sampler.nonzero_int(-2, 2) for _ in range(r))
            params = BarnesParams(a, u, QBase(q))
            for n in range(4):
                for w in (0, 1):
                    target = h_closed(n, w, params)
                    vals = []
                    for N in levels:
                        approx = multi_riemann_integral(n, w, params, uu, N, budget)
                        vals.append(valuation(approx - target, p))
                    if v >= 1:
                        ok = _weakly_increasing(vals) and vals[-1] >= levels[-1] - 1
                    else:
                        ok = all(x >= N - 1 for x, N in zip(vals, levels))
                    report.checks.append(
                        CheckResult(
                            name=f"riemann-limit/p{p}-r{r}-v{v}-n{n}-w{w}",
                            params={
                                "p": p,
                                "r": r,
                                "a": list(a),
                                "q": format_rational(q),
                                "u": format_rational(u),
                                "n": n,
                                "w": w,
                                "levels": list(levels),
                                "valuations": [_fmt_val(x) for x in vals],
                            },
                            passed=ok,
                            error_valuation=_fmt_val(vals[-1]),
                        )
                    )
    return report


def suite_measure_additivity(seed: int = 0, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    """Moment-measure cell additivity, exact residuals."""
    report = SuiteReport("measure-additivity")
    sampler = ParameterSampler(seed)
    for p in (3, 5):
        for v in (1, 2):
            q, u = _sample_padic_qu(sampler, p, v)
            uu = AdmissibleU(u, p)
            a1 = sampler.rng.choice((1, 2))
            for k in range(5):
                for f in (1, 2):
                    for N in (0, 1, 2):
                        mod = f * p**N
                        xs = {0, sampler.rng.randrange(mod)}
                        for x in sorted(xs):
                            diff = measure_additivity_check(x, f, N, k, uu, q, a1)
                            report.checks.append(
                                CheckResult(
                                    name=f"measure-additivity/p{p}-v{v}-k{k}-f{f}-N{N}-x{x}",
                                    params={
                                        "p": p,
                                        "q": format_rational(q),
                                        "u": format_rational(u),
                                        "a1": a1,
                                        "k": k,
                                        "f": f,
                                        "N": N,
                                        "x": x,
                                    },
                                    passed=diff == 0,
                                    residual=format_rational(diff),
                                )
                            )
    return report


def suite_measure_bound(seed: int = 0, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    """Integrality nu_p(E_k(cell)) >= 0 for nu_p(u) >= 1, q ≡ 1 mod p."""
    report = SuiteReport("measure-bound")
    sampler = ParameterSampler(seed)
    for p in (3, 5):
        for v in (1, 2):
            q, u = _sample_padic_qu(sampler, p, v)
            uu = AdmissibleU(u, p)
            a1 = sampler.rng.choice((1, 2))
            for k in range(5):
                for f in (1, 2):
                    for N in (0, 1, 2):
                        mod = f * p**N
                        xs = {0, sampler.rng.randrange(mod), mod - 1}
                        for x in sorted(xs):
                            cell = MeasureCell(x, f, N)
                            ok = measure_bound_check(cell, k, uu, q, a1)
                            report.checks.append(
                                CheckResult(
                                    name=f"measure-bound/p{p}-v{v}-k{k}-f{f}-N{N}-x{x}",
                                    params={
                                        "p": p,
                                        "q": format_rational(q),
                                        "u": format_rational(u),
                                        "a1": a1,
                                        "k": k,
                                        "f": f,
                                        "N": N,
                                        "x": x,
                                    },
                                    passed=ok,
                                    error_valuation=0 if ok else -1,
                                )
                            )
    return report


def suite_prop5(seed: int = 0, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    """Principal-term cell sums against the closed k-th moment.

    k = 0 must be exact at every level; k >= 1 must strictly gain precision
    with the level and stay above N - 1.
    """
    report = SuiteReport("prop5")
    sampler = ParameterSampler(seed)
    levels = (1, 2, 3, 4)
    for p in (3, 5):
        q, u = _sample_padic_qu(sampler, p, 1)
        uu = AdmissibleU(u, p)
        a1 = sampler.rng.choice((1, 2))
        for k in (0, 1, 2):
            vals = [prop5_check(k, uu, q, a1, N, budget) for N in levels]
            if k == 0:
                ok = all(x == INFINITY for x in vals)
            else:
                ok = _strictly_increasing(vals) and all(
                    x >= N - 1 for x, N in zip(vals, levels)
                )
            report.checks.append(
                CheckResult(
                    name=f"prop5/p{p}-k{k}",
                    params={
                        "p": p,
                        "q": format_rational(q),
                        "u": format_rational(u),
                        "a1": a1,
                        "k": k,
                        "levels": list(levels),
                        "valuations": [_fmt_val(x) for x in vals],
                    },
                    passed=ok,
                    error_valuation=_fmt_val(vals[-1]),
                )
            )
    return report


def _restricted_moment_sum(
    k: int,
    chi: DirichletCharacter,
    u: AdmissibleU,
    q: Fraction,
    a1: int,
    N: int,
    budget: int,
) -> Fraction:
    """Exact level-N sum of chi(x) [a1 x:q]^k u^x over units, mu_u-normalized."""
    p = u.p
    d = chi.modulus
    D = d
    while D % p == 0:
        D //= p
    m = D * p**N
    if m > budget:
        raise PreconditionError("level exceeds the budget", parameter="budget")
    total = Fraction(0)
    upow = Fraction(1)
    for x in range(m):
        if x:
            upow *= u.u
        if gcd(x, p) != 1:
            continue
        cv = chi(x)
        if cv == 0:
            continue
        total += cv * qbracket(a1 * x, q) ** k * upow
    return total / qbracket_z(m, u.u)


def suite_eq8_bridge(seed: int = 0, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    """Unit-restricted moment sums against the two-Euler-factor closed form."""
    report = SuiteReport("eq8-bridge")
    sampler = ParameterSampler(seed)
    for p in (3, 5):
        levels = (1, 2, 3, 4) if p == 3 else (1, 2, 3)
        chars = {
            "trivial": DirichletCharacter.trivial(1),
            "quadratic3": DirichletCharacter.quadratic(3),
            "quadratic4": DirichletCharacter.quadratic(4),
        }
        q, u = _sample_padic_qu(sampler, p, 1)
        uu = AdmissibleU(u, p)
        for label, chi in chars.items():
            a1 = 1 if label != "quadratic4" else 2
            for k in range(5):
                target = _l_negative_exact(k, chi, u, q, a1, p)
                vals = []
                for N in levels:
                    s = _restricted_moment_sum(k, chi, uu, q, a1, N, budget)
                    vals.append(valuation(s - target, p))
                ok = _weakly_increasing(vals) and vals[-1] >= levels[-1]
                report.checks.append(
                    CheckResult(
                        name=f"eq8-bridge/p{p}-{label}-k{k}",
                        params={
                            "p": p,
                            "character": label,
                            "q": format_rational(q),
                            "u": format_rational(u),
                            "a1": a1,
                            "k": k,
                            "levels": list(levels),
                            "valuations": [_fmt_val(x) for x in vals],
                        },
                        passed=ok,
                        error_valuation=_fmt_val(vals[-1]),
                    )
                )
    return report


def suite_interpolation(seed: int = 0, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    """l_riemann at s = -k with the omega^k twist against l_at_negative."""
    report = SuiteReport("interpolation")
    sampler = ParameterSampler(seed)
    M = 8
    for p in (3, 5):
        ctx = PadicContext(p, M)
        levels = (2, 3, 4) if p == 3 else (2, 3)
        q, u = _sample_padic_qu(sampler, p, 1)
        uu = AdmissibleU(u, p)
        chars = {
            "trivial": DirichletCharacter.trivial(1),
            "quadratic4": DirichletCharacter.quadratic(4),
        }
        for label, chi in chars.items():
            for a1 in (1, 1 + p):
                for k in range(5):
                    twist = twist_teichmuller(chi, k, ctx)
                    closed = l_at_negative(k, chi, uu, q, a1, ctx)
                    for N in levels:
                        level_sum = l_riemann(-k, twist, uu, q, a1, ctx, N, budget)
                        ag = agreement_valuation(level_sum, closed)
                        ok = ag >= min(N, M - 2)
                        report.checks.append(
                            CheckResult(
                                name=f"interpolation/p{p}-{label}-a{a1}-k{k}-N{N}",
                                params={
                                    "p": p,
                                    "M": M,
                                    "character": label,
                                    "q": format_rational(q),
                                    "u": format_rational(u),
                                    "a1": a1,
                                    "k": k,
                                    "N": N,
                                },
                                passed=ok,
                                error_valuation=_fmt_val(ag),
                            )
                        )
    return report


def suite_kummer(seed: int = 0, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    """Kummer congruences nu_p(L(-k) - L(-k')) >= n for k ≡ k' mod (p-1)p^n."""
    report = SuiteReport("kummer")
    cases = [
        # p, n, pairs, character label
        (3, 1, ((1, 7), (2, 8), (4, 10)), "trivial"),
        (3, 2, ((1, 19), (2, 20), (3, 21)), "quadratic4"),
        (5, 1, ((1, 21), (2, 22), (3, 23)), "trivial"),
        (5, 2, ((1, 101), (2, 102), (3, 103)), "trivial"),
    ]
    for p, n, pairs, label in cases:
        chi = (
            DirichletCharacter.trivial(1)
            if label == "trivial"
            else DirichletCharacter.quadratic(4)
        )
        q = Fraction(1 + p)
        u = Fraction(p)
        a1 = 1
        for k, k2 in pairs:
            la = _l_negative_exact(k, chi, u, q, a1, p)
            lb = _l_negative_exact(k2, chi, u, q, a1, p)
            val = valuation(la - lb, p)
            report.checks.append(
                CheckResult(
                    name=f"kummer/p{p}-n{n}-{label}-k{k}-k{k2}",
                    params={
                        "p": p,
                        "n": n,
                        "character": label,
                        "q": format_rational(q),
                        "u": format_rational(u),
                        "a1": a1,
                        "k": k,
                        "k2": k2,
                    },
                    passed=val >= n,
                    error_valuation=_fmt_val(val),
                )
            )
    return report


def suite_unit_power(seed: int = 0, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    """<a1 x : q>^(p^n) ≡ 1 mod p^n for every unit x below p^2."""
    report = SuiteReport("unit-power")
    sampler = ParameterSampler(seed)
    M = 6
    for p in (3, 5, 7):
        ctx = PadicContext(p, M)
        one = to_padic(1, ctx)
        qs = (Fraction(1 + p), Fraction(1 + 2 * p))
        a1s = (1, p + 2)
        for q in qs:
            for a1 in a1s:
                for n in range(1, 6):
                    worst = INFINITY
                    ok = True
                    for x in range(1, p * p):
                        if x % p == 0:
                            continue
                        ab = angle_bracket(a1 * x, q, ctx)
                        powed = padic_pow(ab.value, p**n)
                        ag = agreement_valuation(powed, one)
                        worst = min(worst, ag)
                        if ag < n:
                            ok = False
                    report.checks.append(
                        CheckResult(
                            name=f"unit-power/p{p}-q{q.numerator}-a{a1}-n{n}",
                            params={
                                "p": p,
                                "M": M,
                                "q": format_rational(q),
                                "a1": a1,
                                "n": n,
                                "x_range": [1, p * p - 1],
                            },
                            passed=ok,
                            error_valuation=_fmt_val(worst),
                        )
                    )
    return report


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "theorem1-gf": suite_theorem1_gf,
    "addition": suite_addition,
    "distribution": suite_distribution,
    "riemann-limit": suite_riemann_limit,
    "carlitz-bridge": suite_carlitz_bridge,
    "qlimit": suite_qlimit,
    "measure-additivity": suite_measure_additivity,
    "measure-bound": suite_measure_bound,
    "prop5": suite_prop5,
    "eq8-bridge": suite_eq8_bridge,
    "interpolation": suite_interpolation,
    "kummer": suite_kummer,
    "unit-power": suite_unit_power,
}


def run_suite(name: str, seed: int = 0, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    if name == "all":
        combined = SuiteReport("all")
        for sub in SUITES.values():
            rep = sub(seed=seed, budget=budget)
            combined.checks.extend(rep.checks)
        return combined
    if name not in SUITES:
        raise PreconditionError(
            f"unknown suite {name!r}; choose from {', '.join([*SUITES, 'all'])}",
            parameter="suite",
        )
    return SUITES[name](seed=seed, budget=budget)
