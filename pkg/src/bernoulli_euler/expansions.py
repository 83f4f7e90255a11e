"""Partial sums and exact remainder series for 2/(e^t+1), sech t, coth t and
the Binet function t/(e^t-1) - 1 + t/2.

Partial sums are evaluated exactly (the argument is a binary float, hence a
dyadic rational) and rounded once. Remainders are infinite series of the form

    sum_k (+-1)^k g(u_k),   g(u) = 1 / (u^p (a^2 + u^2)),   u_k = u_0 + k h,

summed term by term up to a cut-off K with u_K >= 8a. Past the cut-off,
g(u) = sum_j (-1)^j a^{2j} u^{-(p+2+2j)} converges with ratio <= 1/64, so the
tail is an alternating combination of Hurwitz zeta values whose truncation
error is bounded by the first omitted term. The reported tail bound covers
that truncation plus a running rounding allowance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import exact_core as ec
from ._mp import (
    DEFAULT_PRECISION,
    GUARD_BITS,
    MAX_PRECISION,
    cancellation_guard,
    check_precision,
    context,
    fraction_to_real,
    positive_arg,
    round_real,
    to_fraction,
    ulp,
)
from .errors import BudgetError, DomainError, PrecisionError, QuadratureError

MAX_TERMS = 1 << 20

FUNCTIONS = ("eta", "sech", "coth", "binet")


@dataclass(frozen=True)
class EvalResult:
    """A truncated infinite series: ``|exact - value| <= tail_bound``."""

    value: object
    tail_bound: object
    terms_used: int
    precision_bits: int


@dataclass(frozen=True)
class Enclosure:
    """Closed interval [lo, hi] certified to contain some exact value."""

    lo: object
    hi: object

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty enclosure: lo={self.lo} > hi={self.hi}")

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2

    def contains(self, x, strict: bool = False) -> bool:
        if strict:
            return self.lo < x < self.hi
        return self.lo <= x <= self.hi


def _index(n, name: str, minimum: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"{name} must be an integer, got {n!r}")
    if n < minimum:
        raise DomainError(f"{name} must be >= {minimum}, got {n}")
    return n


def _arg(t, bits: int):
    """The argument as a Real at ``bits``; all routes then share this exact value."""
    return positive_arg(context(bits), t)


# ---------------------------------------------------------------------------
# exact coefficients of the partial sums: lists of (power of t, coefficient)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def eta_coefficients(m: int) -> tuple[tuple[int, Fraction], ...]:
    """1 + sum_{j=1}^m (1 - 2^{2j}) B_{2j} t^{2j-1} / (j (2j-1)!)."""
    terms = [(0, Fraction(1))]
    for j in range(1, m + 1):
        terms.append((2 * j - 1, (1 - 4**j) * ec.bernoulli(2 * j) / (j * factorial(2 * j - 1))))
    return tuple(terms)


@lru_cache(maxsize=None)
def sech_coefficients(N: int) -> tuple[tuple[int, Fraction], ...]:
    """sum_{j=0}^{N-1} E_{2j} t^{2j} / (2j)!."""
    return tuple((2 * j, Fraction(ec.euler_number(2 * j), factorial(2 * j))) for j in range(N))


@lru_cache(maxsize=None)
def coth_coefficients(N: int) -> tuple[tuple[int, Fraction], ...]:
    """sum_{j=0}^{N} 2^{2j} B_{2j} t^{2j-1} / (2j)!, including the 1/t term."""
    return tuple((2 * j - 1, 4**j * ec.bernoulli(2 * j) / factorial(2 * j)) for j in range(N + 1))


@lru_cache(maxsize=None)
def binet_coefficients(n: int) -> tuple[tuple[int, Fraction], ...]:
    """sum_{j=1}^{n} B_{2j} t^{2j} / (2j)!."""
    return tuple((2 * j, ec.bernoulli(2 * j) / factorial(2 * j)) for j in range(1, n + 1))


def _exact_sum(coeffs, tq: Fraction) -> Fraction:
    return sum((c * tq**p for p, c in coeffs), Fraction(0))


def _partial_exact(fn: str, tq: Fraction, index: int) -> Fraction:
    if fn == "eta":
        return _exact_sum(eta_coefficients(index), tq)
    if fn == "sech":
        return _exact_sum(sech_coefficients(index), tq)
    if fn == "coth":
        return _exact_sum(coth_coefficients(index), tq)
    if fn == "binet":
        return _exact_sum(binet_coefficients(index), tq)
    raise DomainError(f"unknown function {fn!r}; expected one of {', '.join(FUNCTIONS)}")


def _partial(fn: str, t, index: int, bits: int):
    bits = check_precision(bits)
    tq = to_fraction(_arg(t, bits))
    return fraction_to_real(_partial_exact(fn, tq, index), bits)


def eta_partial(t, m: int, precision_bits: int = DEFAULT_PRECISION):
    """1 + sum_{j=1}^{m} (1 - 2^{2j}) B_{2j} t^{2j-1} / (j (2j-1)!), correctly rounded."""
    return _partial("eta", t, _index(m, "m", 0), precision_bits)


def sech_partial(t, N: int, precision_bits: int = DEFAULT_PRECISION):
    """sum_{j=0}^{N-1} E_{2j} t^{2j} / (2j)!, correctly rounded."""
    return _partial("sech", t, _index(N, "N", 1), precision_bits)


def coth_partial(t, N: int, precision_bits: int = DEFAULT_PRECISION):
    """sum_{j=0}^{N} 2^{2j} B_{2j} t^{2j-1} / (2j)!, correctly rounded."""
    return _partial("coth", t, _index(N, "N", 0), precision_bits)


def binet_partial(t, n: int, precision_bits: int = DEFAULT_PRECISION):
    """sum_{j=1}^{n} B_{2j} t^{2j} / (2j)!, correctly rounded."""
    return _partial("binet", t, _index(n, "n", 0), precision_bits)


# ---------------------------------------------------------------------------
# reference values from exponentials
# ---------------------------------------------------------------------------


def _direct(ctx, fn: str, t):
    if fn == "eta":
        e = ctx.exp(-t)
        return 2 * e / (1 + e)
    if fn == "sech":
        e = ctx.exp(-t)
        return 2 * e / (1 + e * e)
    if fn == "coth":
        e2 = ctx.exp(-2 * t)
        return (1 + e2) / -ctx.expm1(-2 * t)
    if fn == "binet":
        return t / ctx.expm1(t) - 1 + t / 2
    if fn == "eta_prime":
        # minus the derivative of 2/(e^t+1): 2 e^t / (e^t+1)^2
        e = ctx.exp(-t)
        return 2 * e / (1 + e) ** 2
    raise DomainError(f"unknown function {fn!r}; expected one of {', '.join(FUNCTIONS)}")


def direct_eval(fn: str, t, precision_bits: int = DEFAULT_PRECISION):
    """2/(e^t+1) (``eta``), sech t, coth t or t/(e^t-1) - 1 + t/2 (``binet``)
    from exponentials, evaluated with guard bits and rounded to ``precision_bits``."""
    bits = check_precision(precision_bits)
    tv = _arg(t, bits)
    extra = cancellation_guard(float(tv), 2) if fn == "binet" else GUARD_BITS
    ctx = context(bits + extra)
    return round_real(_direct(ctx, fn, ctx.mpf(tv)), bits)


# ---------------------------------------------------------------------------
# series machinery
# ---------------------------------------------------------------------------


def _start_index(ctx, a, p: int, u0: Fraction, h: Fraction, alternating: bool) -> int:
    """Smallest K with u_K >= 8a (expansion ratio (a/u_K)^2 <= 1/64) and with
    u_K / h past the point where :func:`_hurwitz` needs no direct head sum."""
    hurwitz_start = ctx.prec / 4 + (p + 2) / 2 + 32
    if alternating:
        hurwitz_start *= 2
    need = max((8 * float(a) - float(u0)) / float(h), hurwitz_start - float(u0 / h))
    return max(4, math.ceil(need))


@lru_cache(maxsize=None)
def _bernoulli_over_factorial(i: int) -> Fraction:
    return ec.bernoulli(2 * i) / factorial(2 * i)


def _hurwitz(ctx, s: int, q):
    """zeta(s, q) = sum_{k>=0} (q+k)^{-s} for integer s >= 2, q > 0.

    Direct sum up to a shift point N, then Euler-Maclaurin with the Bernoulli
    numbers of :mod:`exact_core`. For real s the remainder after the last
    included correction is bounded by the first omitted one; twice that is
    returned as the error bound.
    """
    M = max(0, math.ceil(ctx.prec / 4 + s / 2 - float(q)))
    head = ctx.mpf(0)
    for k in range(M):
        head += (q + k) ** -s
    N = q + M
    Ns = N**-s
    tail = N * Ns / (s - 1) + Ns / 2
    rising = ctx.mpf(s)
    power = Ns / N
    N2 = N * N
    eps = ctx.ldexp(tail, -ctx.prec - 2)
    prev = None
    i = 1
    while True:
        b = _bernoulli_over_factorial(i)
        term = ctx.mpf(b.numerator) / b.denominator * rising * power
        if abs(term) <= eps:
            return head + tail, 2 * abs(term)
        if prev is not None and abs(term) > abs(prev):
            raise PrecisionError("Euler-Maclaurin corrections stopped decreasing")
        tail += term
        prev = term
        rising *= (s + 2 * i - 1) * (s + 2 * i)
        power /= N2
        i += 1


def _zeta_tail(ctx, a2, p: int, uK, H, alternating: bool):
    """sum_{k>=0} (+-1)^k g(u_K + k h) from g(u) = sum_j (-1)^j a^{2j} u^{-(p+2+2j)}.

    Each inner sum is a Hurwitz zeta value (or a difference of two for the
    alternating case). The outer series alternates with ratio <= 1/64, so the
    first omitted term bounds the truncation. Returns (value, bound, terms).
    """
    q = uK / H
    total = ctx.mpf(0)
    err = ctx.mpf(0)
    aj = ctx.mpf(1)
    first = None
    j = 0
    while True:
        s = p + 2 + 2 * j
        scale = aj / H**s
        if alternating:
            z1, e1 = _hurwitz(ctx, s, q / 2)
            z2, e2 = _hurwitz(ctx, s, (q + 1) / 2)
            z, ez = (z1 - z2) / ctx.mpf(2) ** s, (e1 + e2) / ctx.mpf(2) ** s
        else:
            z, ez = _hurwitz(ctx, s, q)
        term = scale * z
        if first is None:
            first = term
        elif term <= ctx.ldexp(first, -ctx.prec - 4):
            return total, term + err, j
        total = total + term if j % 2 == 0 else total - term
        err += scale * ez
        aj *= a2
        j += 1


def _remainder_sum(ctx, a, p: int, u0: Fraction, h: Fraction, alternating: bool):
    """sum_{k>=0} (+-1)^k g(u0 + k h), g(u) = 1/(u^p (a^2 + u^2)); returns (value, bound, K)."""
    a2 = a * a
    U0, H = ctx.mpf(u0.numerator) / u0.denominator, ctx.mpf(h.numerator) / h.denominator
    K = _start_index(ctx, a, p, u0, h, alternating)
    if K > MAX_TERMS:
        raise BudgetError(f"series needs more than {MAX_TERMS} terms before its tail expansion converges")
    s = ctx.mpf(0)
    s_abs = ctx.mpf(0)
    for k in range(K):
        u = U0 + k * H
        term = 1 / (u**p * (a2 + u * u))
        s = s - term if alternating and k % 2 else s + term
        s_abs += term
    tail, tail_bound, J = _zeta_tail(ctx, a2, p, U0 + K * H, H, alternating)
    if alternating and K % 2:
        tail = -tail
    rounding = ctx.ldexp((K + 4 * J + 16) * (s_abs + abs(tail)), 2 - ctx.prec)
    return s + tail, tail_bound + rounding, K


def _series(kind: str, t, index: int, tol, precision_bits: int) -> EvalResult:
    bits = check_precision(precision_bits)
    if not tol > 0:
        raise DomainError(f"tol must be > 0, got {tol!r}")
    tv = _arg(t, bits)
    while True:
        w = bits + GUARD_BITS
        ctx = context(w)
        x = ctx.mpf(tv)
        tol_w = ctx.mpf(tol)
        pi = ctx.pi
        if kind == "s":
            a, p, u0, h, alt = x / pi, 2 * index, Fraction(1), Fraction(2), False
            scale, sign = 4 / pi ** (2 * index + 2), 1
        elif kind == "sigma":
            a, p, u0, h, alt = x / pi, 2 * index, Fraction(1), Fraction(1), False
            scale, sign = 2 * x ** (2 * index + 1) / pi ** (2 * index + 2), (-1) ** index
        elif kind == "nu":
            a, p, u0, h, alt = x / (2 * pi), 2 * index, Fraction(1), Fraction(1), False
            scale, sign = 2 / (2 * pi) ** (2 * index + 2), 1
        elif kind == "sech":
            a, p, u0, h, alt = x / pi, 2 * index - 1, Fraction(1, 2), Fraction(1), True
            scale, sign = 2 * x ** (2 * index) / pi ** (2 * index + 1), (-1) ** index
        else:  # pragma: no cover - internal
            raise AssertionError(kind)
        inner, inner_bound, K = _remainder_sum(ctx, a, p, u0, h, alt)
        value = sign * scale * inner
        bound = scale * inner_bound + ctx.ldexp(abs(value), 4 - w)
        out = round_real(value, bits)
        bound += abs(ctx.mpf(out) - value)
        if bound <= tol_w:
            return EvalResult(out, round_real(bound, bits, "c"), K, bits)
        if bits * 2 > MAX_PRECISION:
            raise PrecisionError(
                f"tolerance {tol!r} is below what {bits} bits can represent for this value; "
                "raise precision_bits or loosen tol"
            )
        bits *= 2


def s_series(t, m: int, tol=1e-12, precision_bits: int = DEFAULT_PRECISION) -> EvalResult:
    """s_m(t) = (4 / pi^{2m}) sum_{k>=0} 1 / ((2k+1)^{2m} (t^2 + pi^2 (2k+1)^2)).

    2/(e^t+1) = eta_partial(t, m) + (-1)^{m+1} t^{2m+1} s_m(t).
    """
    return _series("s", t, _index(m, "m", 1), tol, precision_bits)


def eta_remainder(t, m: int, tol=1e-12, precision_bits: int = DEFAULT_PRECISION) -> EvalResult:
    """r_m(t) = (-1)^{m+1} t^{2m+1} s_m(t), with the tolerance applied to r_m itself."""
    bits = check_precision(precision_bits)
    _index(m, "m", 1)
    tv = _arg(t, bits)
    ctx = context(bits + GUARD_BITS)
    factor = ctx.mpf(tv) ** (2 * m + 1)
    s = s_series(tv, m, tol / factor, bits)
    value = (-1) ** (m + 1) * factor * s.value
    out = round_real(value, s.precision_bits)
    bound = factor * s.tail_bound + abs(ctx.mpf(out) - value) + ctx.ldexp(abs(value), 4 - ctx.prec)
    return EvalResult(out, round_real(bound, bits, "c"), s.terms_used, s.precision_bits)


def sech_remainder(t, N: int, tol=1e-12, precision_bits: int = DEFAULT_PRECISION) -> EvalResult:
    """R_N(t) = (-1)^N 2 t^{2N} / pi^{2N-1} sum_k (-1)^k / ((k+1/2)^{2N-1} (t^2 + pi^2 (k+1/2)^2)).

    sech t = sech_partial(t, N) + R_N(t).
    """
    return _series("sech", t, _index(N, "N", 1), tol, precision_bits)


def sigma_series(t, N: int, tol=1e-12, precision_bits: int = DEFAULT_PRECISION) -> EvalResult:
    """sigma_N(t) = (-1)^N t^{2N+1} / pi^{2N} sum_{k>=1} 2 / (k^{2N} (t^2 + pi^2 k^2)).

    coth t = coth_partial(t, N) + sigma_N(t).
    """
    return _series("sigma", t, _index(N, "N", 0), tol, precision_bits)


def nu_series(t, n: int, tol=1e-12, precision_bits: int = DEFAULT_PRECISION) -> EvalResult:
    """nu_n(t) = 2 / (2 pi)^{2n} sum_{k>=1} 1 / (k^{2n} (t^2 + 4 pi^2 k^2)).

    t/(e^t-1) - 1 + t/2 = binet_partial(t, n) + (-1)^n t^{2n+2} nu_n(t).
    """
    return _series("nu", t, _index(n, "n", 0), tol, precision_bits)


def binet_remainder(t, n: int, tol=1e-12, precision_bits: int = DEFAULT_PRECISION) -> EvalResult:
    """(-1)^n t^{2n+2} nu_n(t), the remainder after binet_partial(t, n); ``tol`` applies to it."""
    bits = check_precision(precision_bits)
    _index(n, "n", 0)
    tv = _arg(t, bits)
    ctx = context(bits + GUARD_BITS)
    factor = ctx.mpf(tv) ** (2 * n + 2)
    nu = nu_series(tv, n, tol / factor, bits)
    value = (-1) ** n * factor * nu.value
    out = round_real(value, nu.precision_bits)
    bound = factor * nu.tail_bound + abs(ctx.mpf(out) - value) + ctx.ldexp(abs(value), 4 - ctx.prec)
    return EvalResult(out, round_real(bound, bits, "c"), nu.terms_used, nu.precision_bits)


def nu_from_coth(t, n: int, tol=1e-12, precision_bits: int = DEFAULT_PRECISION) -> EvalResult:
    """nu_n(t) recovered from the coth remainder at t/2:
    nu_n(t) = (-1)^n (t/2) sigma_n(t/2) / t^{2n+2}."""
    bits = check_precision(precision_bits)
    _index(n, "n", 0)
    tv = _arg(t, bits)
    ctx = context(bits + GUARD_BITS)
    x = ctx.mpf(tv) / 2
    factor = x / ctx.mpf(tv) ** (2 * n + 2)
    sig = sigma_series(x, n, tol / (2 * factor), bits)
    value = (-1) ** n * factor * sig.value
    out = round_real(value, sig.precision_bits)
    bound = factor * sig.tail_bound + abs(ctx.mpf(out) - value) + ctx.ldexp(abs(value), 4 - ctx.prec)
    return EvalResult(out, round_real(bound, bits, "c"), sig.terms_used, sig.precision_bits)


# ---------------------------------------------------------------------------
# mean-value factors
# ---------------------------------------------------------------------------


def theta_cap(t, N: int, precision_bits: int = DEFAULT_PRECISION, rel_tol=1e-30):
    """Theta(t, N) = R_N(t) (2N)! / (E_{2N} t^{2N}), which lies in (0, 1).

    ``rel_tol`` is the accuracy of Theta itself.
    """
    bits = check_precision(precision_bits)
    _index(N, "N", 1)
    tv = _arg(t, bits)
    ctx = context(bits + GUARD_BITS)
    first = ctx.mpf(ec.euler_number(2 * N)) * ctx.mpf(tv) ** (2 * N) / factorial(2 * N)
    r = sech_remainder(tv, N, abs(first) * rel_tol, bits)
    return round_real(ctx.mpf(r.value) / first, bits)


def theta_low(t, N: int, precision_bits: int = DEFAULT_PRECISION, rel_tol=1e-30):
    """theta(t, N) = sigma_N(t) (2N+2)! / (2^{2N+2} B_{2N+2} t^{2N+1}), in (0, 1)."""
    bits = check_precision(precision_bits)
    _index(N, "N", 0)
    tv = _arg(t, bits)
    ctx = context(bits + GUARD_BITS)
    b = ec.bernoulli(2 * N + 2) * 4 ** (N + 1) / factorial(2 * N + 2)
    first = ctx.mpf(b.numerator) / b.denominator * ctx.mpf(tv) ** (2 * N + 1)
    sig = sigma_series(tv, N, abs(first) * rel_tol, bits)
    return round_real(ctx.mpf(sig.value) / first, bits)


# ---------------------------------------------------------------------------
# integral representations (cross-checks for the series)
# ---------------------------------------------------------------------------


def _exp_poly_integral(ctx, t, poly: ec.Poly, tol):
    """int_0^1 e^{x t} P(x) dx by Gauss-Legendre; returns (value, error estimate)."""
    coeffs = [ctx.mpf(c.numerator) / c.denominator for c in poly.coefficients]

    def f(x):
        acc = ctx.mpf(0)
        for c in reversed(coeffs):
            acc = acc * x + c
        return ctx.exp(x * t) * acc

    value, err = ctx.quad(f, [0, 1], method="gauss-legendre", error=True)
    return value, err


def eta_remainder_integral(t, m: int, tol=1e-20, precision_bits: int = DEFAULT_PRECISION):
    """r_m(t) = -(1/(e^t+1)) (t^{2m+1}/(2m)!) int_0^1 e^{xt} E_{2m}(x) dx, by quadrature."""
    bits = check_precision(precision_bits)
    _index(m, "m", 1)
    tv = _arg(t, bits)
    ctx = context(bits + GUARD_BITS)
    x = ctx.mpf(tv)
    integral, err = _exp_poly_integral(ctx, x, ec.euler_poly(2 * m), tol)
    factor = x ** (2 * m + 1) / ((ctx.exp(x) + 1) * factorial(2 * m))
    if factor * err > tol:
        raise QuadratureError(f"quadrature error estimate {float(factor * err):.3g} exceeds tol {tol!r}")
    return round_real(-factor * integral, bits)


def nu_integral(t, n: int, tol=1e-20, precision_bits: int = DEFAULT_PRECISION, form: str = "even"):
    """nu_n(t) by quadrature.

    ``form="even"``: (-1)^{n-1} / (t (e^t-1) (2n)!) int_0^1 e^{xt} B_{2n}(x) dx   (n >= 1)
    ``form="odd"``:  (-1)^n / ((2n+1)! (e^t-1)) int_0^1 e^{xt} B_{2n+1}(x) dx      (n >= 0)
    """
    bits = check_precision(precision_bits)
    if form not in ("even", "odd"):
        raise DomainError(f"form must be 'even' or 'odd', got {form!r}")
    _index(n, "n", 1 if form == "even" else 0)
    tv = _arg(t, bits)
    ctx = context(bits + cancellation_guard(float(tv), 2))
    x = ctx.mpf(tv)
    if form == "even":
        integral, err = _exp_poly_integral(ctx, x, ec.bernoulli_poly(2 * n), tol)
        factor = (-1) ** (n - 1) / (x * ctx.expm1(x) * factorial(2 * n))
    else:
        integral, err = _exp_poly_integral(ctx, x, ec.bernoulli_poly(2 * n + 1), tol)
        factor = (-1) ** n / (ctx.expm1(x) * factorial(2 * n + 1))
    if abs(factor) * err > tol:
        raise QuadratureError(f"quadrature error estimate {float(abs(factor) * err):.3g} exceeds tol {tol!r}")
    return round_real(factor * integral, bits)


# ---------------------------------------------------------------------------
# bracketing
# ---------------------------------------------------------------------------


def enclosure(fn: str, t, m: int, precision_bits: int = DEFAULT_PRECISION) -> Enclosure:
    """Certified interval for eta/sech/coth/binet from two consecutive partial sums.

    ``m`` is the lower partial-sum index: eta uses eta_partial(t, m) and
    (t, m+1); sech uses sech_partial(t, m+1) and (t, m+2), i.e. the sums
    through E_{2m} and E_{2m+2}; coth uses coth_partial(t, m) and (t, m+1);
    binet uses binet_partial(t, m) and (t, m+1). The remainders at the two
    indices have opposite signs, so the exact value lies between the sums.
    Endpoints are exact rationals rounded outward.
    """
    bits = check_precision(precision_bits)
    _index(m, "m", 0)
    tq = to_fraction(_arg(t, bits))
    if fn == "sech":
        a, b = _partial_exact(fn, tq, m + 1), _partial_exact(fn, tq, m + 2)
    elif fn in FUNCTIONS:
        a, b = _partial_exact(fn, tq, m), _partial_exact(fn, tq, m + 1)
    else:
        raise DomainError(f"unknown function {fn!r}; expected one of {', '.join(FUNCTIONS)}")
    lo, hi = min(a, b), max(a, b)
    return Enclosure(fraction_to_real(lo, bits, "f"), fraction_to_real(hi, bits, "c"))


def bridge_term(fn: str, t, m: int, precision_bits: int = DEFAULT_PRECISION) -> Fraction:
    """Exact magnitude of the term joining the two sums used by :func:`enclosure`."""
    tq = to_fraction(_arg(t, check_precision(precision_bits)))
    if fn == "sech":
        return abs(_partial_exact(fn, tq, m + 2) - _partial_exact(fn, tq, m + 1))
    return abs(_partial_exact(fn, tq, m + 1) - _partial_exact(fn, tq, m))


def remainder_sign_gap(fn: str, t, index: int, precision_bits: int = DEFAULT_PRECISION):
    """Signed remainder that the bracketing inequalities assert is positive.

    * eta:   (-1)^{m+1} (2/(e^t+1) - eta_partial(t, m)),       m >= 0
    * sech:  (-1)^{m+1} (sech t - sum_{j=0}^{m} E_{2j} t^{2j}/(2j)!),  m >= 0
    * coth:  (-1)^N (coth t - coth_partial(t, N)),              N >= 0
    * binet: (-1)^n (t/(e^t-1) - 1 + t/2 - binet_partial(t, n)), n >= 0
    """
    bits = check_precision(precision_bits)
    _index(index, "index", 0)
    tv = _arg(t, bits)
    tq = to_fraction(tv)
    extra = cancellation_guard(float(tv), 2 * index + 3)
    ctx = context(bits + extra)
    direct = _direct(ctx, fn, ctx.mpf(tv))
    if fn == "sech":
        partial, sign = _partial_exact(fn, tq, index + 1), (-1) ** (index + 1)
    elif fn == "eta":
        partial, sign = _partial_exact(fn, tq, index), (-1) ** (index + 1)
    elif fn in ("coth", "binet"):
        partial, sign = _partial_exact(fn, tq, index), (-1) ** index
    else:
        raise DomainError(f"unknown function {fn!r}; expected one of {', '.join(FUNCTIONS)}")
    p = ctx.mpf(partial.numerator) / partial.denominator
    return round_real(sign * (direct - p), bits)


def eta_derivative_gap(t, m: int, precision_bits: int = DEFAULT_PRECISION):
    """(-1)^m (2e^t/(e^t+1)^2 - sum_{j=1}^m (2^{2j}-1) B_{2j} t^{2j-2} / (j (2j-2)!)), positive."""
    bits = check_precision(precision_bits)
    _index(m, "m", 1)
    tv = _arg(t, bits)
    tq = to_fraction(tv)
    ctx = context(bits + cancellation_guard(float(tv), 2 * m + 2))
    poly = sum(
        ((4**j - 1) * ec.bernoulli(2 * j) / (j * factorial(2 * j - 2)) * tq ** (2 * j - 2) for j in range(1, m + 1)),
        Fraction(0),
    )
    d = _direct(ctx, "eta_prime", ctx.mpf(tv)) - ctx.mpf(poly.numerator) / poly.denominator
    return round_real((-1) ** m * d, bits)


# ---------------------------------------------------------------------------
# the mu / nu functions built on B_{2j+1}(1/3) and B_{2j+1}(1/4)
# ---------------------------------------------------------------------------

_CONJECTURE_POINT = {"mu_third": Fraction(1, 3), "nu_quarter": Fraction(1, 4)}


@lru_cache(maxsize=None)
def conjecture_coefficients(which: str, m: int) -> tuple[tuple[int, Fraction], ...]:
    """2 B_{2j+1}(c) / (2j+1)! for j = 0..m, as (power, coefficient) pairs."""
    c = _CONJECTURE_POINT[which]
    return tuple((2 * j, 2 * ec.bernoulli_poly(2 * j + 1)(c) / factorial(2 * j + 1)) for j in range(m + 1))


def conjecture_fn(which: str, t, m: int, precision_bits: int = DEFAULT_PRECISION):
    """mu_m(t) (``mu_third``, c = 1/3) or nu_m(t) (``nu_quarter``, c = 1/4):

        (e^{ct} - e^{(1-c)t}) / (e^t - 1) - sum_{j=0}^m 2 B_{2j+1}(c) t^{2j} / (2j+1)!

    The sign claim (-1)^m value > 0 is proved for c = 1/4 and only
    conjectured for c = 1/3.
    """
    if which not in _CONJECTURE_POINT:
        raise DomainError(f"which must be 'mu_third' or 'nu_quarter', got {which!r}")
    bits = check_precision(precision_bits)
    _index(m, "m", 0)
    tv = _arg(t, bits)
    tq = to_fraction(tv)
    ctx = context(bits + cancellation_guard(float(tv), 2 * m + 2, 2 * m))
    x = ctx.mpf(tv)
    c = _CONJECTURE_POINT[which]
    cx = x * c.numerator / c.denominator
    # (e^{cx} - e^{(1-c)x}) / (e^x - 1) = -e^{cx} expm1((1-2c) x) / expm1(x)
    ratio = -ctx.exp(cx) * ctx.expm1(x - 2 * cx) / ctx.expm1(x)
    poly = _exact_sum(conjecture_coefficients(which, m), tq)
    return round_real(ratio - ctx.mpf(poly.numerator) / poly.denominator, bits)


def nu_quarter_via_sech(t, m: int, precision_bits: int = DEFAULT_PRECISION):
    """nu_m(t) = -1/(2 cosh(t/4)) + sum_{j=0}^m E_{2j} (t/4)^{2j} / (2 (2j)!)."""
    bits = check_precision(precision_bits)
    _index(m, "m", 0)
    tv = _arg(t, bits)
    tq = to_fraction(tv) / 4
    ctx = context(bits + cancellation_guard(float(tv) / 4, 2 * m + 2, 2 * m))
    poly = _exact_sum(sech_coefficients(m + 1), tq) / 2
    return round_real(-ctx.sech(ctx.mpf(tv) / 4) / 2 + ctx.mpf(poly.numerator) / poly.denominator, bits)
