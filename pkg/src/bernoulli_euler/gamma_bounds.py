"""Log-gamma enclosures, quarter-shift gamma ratio and Wallis bounds,
finite-difference evidence of complete monotonicity, and a few constants
(ln(4/pi), ln(pi/3), the generalized Euler constant)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from . import exact_core as ec
from ._mp import (
    DEFAULT_PRECISION,
    GUARD_BITS,
    check_precision,
    context,
    fraction_to_real,
    positive_arg,
    round_real,
    to_fraction,
    to_real,
)
from .errors import BudgetError, DomainError, PrecisionError
from .expansions import Enclosure

MAX_TERMS = 1 << 20


@dataclass(frozen=True)
class GammaEnclosure:
    """lo <= ln Gamma(x) <= hi, from Stirling sums with ``terms_m`` and ``terms_m + 1`` terms."""

    lo: object
    hi: object
    terms_m: int

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi


def _real_arg(x, bits: int, name: str = "x") -> Fraction:
    return to_fraction(positive_arg(context(bits), x, name))


def _from_q(ctx, q: Fraction):
    return to_real(ctx, q)


def _allowance(ctx, *magnitudes):
    return ctx.ldexp(sum((abs(v) for v in magnitudes), ctx.mpf(4)), 6 - ctx.prec)


# ---------------------------------------------------------------------------
# ln Gamma
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def stirling_coefficient(j: int) -> Fraction:
    """B_{2j} / (2j (2j-1))."""
    return ec.bernoulli(2 * j) / (2 * j * (2 * j - 1))


def _stirling(ctx, q: Fraction, m: int, shift_to: int):
    """(S_m(q), bridging term, error allowance) where ln Gamma(q) lies between
    S_m and S_m + bridge, after shifting q up to at least ``shift_to``."""
    k = max(0, math.ceil(shift_to - q))
    y = q + k
    Y = _from_q(ctx, y)
    base = (Y - ctx.mpf(1) / 2) * ctx.ln(Y) - Y + ctx.ln(2 * ctx.pi) / 2
    series = ctx.mpf(0)
    inv = 1 / Y
    inv2 = inv * inv
    power = inv
    for j in range(1, m + 1):
        c = stirling_coefficient(j)
        series += ctx.mpf(c.numerator) / c.denominator * power
        power *= inv2
    c = stirling_coefficient(m + 1)
    bridge = ctx.mpf(c.numerator) / c.denominator * power
    logsum = ctx.mpf(0)
    if k:
        prod = Fraction(1)
        for j in range(k):
            prod *= q + j
        logsum = ctx.ln(_from_q(ctx, prod))
    value = base + series - logsum
    err = _allowance(ctx, base, series, logsum, Y * ctx.ln(Y)) * (m + k + 4)
    return value, bridge, err


def log_gamma_enclosure(x, m: int = 8, precision_bits: int = DEFAULT_PRECISION, shift_to: int = 10) -> GammaEnclosure:
    """Two-sided bound on ln Gamma(x) from consecutive Stirling partial sums.

    The remainder after m terms has sign (-1)^m (its signed form is
    completely monotonic), so the sums with m and m+1 terms bracket the value.
    Small x is first shifted by the recurrence to x + k >= ``shift_to``.
    """
    bits = check_precision(precision_bits)
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise DomainError(f"m must be an integer >= 1, got {m!r}")
    q = _real_arg(x, bits)
    ctx = context(bits + GUARD_BITS)
    value, bridge, err = _stirling(ctx, q, m, shift_to)
    a, b = value, value + bridge
    lo, hi = min(a, b) - err, max(a, b) + err
    return GammaEnclosure(round_real(lo, bits, "f"), round_real(hi, bits, "c"), m)


def _lgamma(ctx, q: Fraction):
    """ln Gamma(q) to (nearly) the full working precision: (value, error bound).

    Shifts q to about prec/4 and adds Stirling terms until the next one is
    negligible (or stops shrinking); the last term taken bounds the error
    through the same alternating-remainder argument as the enclosure.
    """
    k = max(0, math.ceil(max(10, ctx.prec // 4) - q))
    y = q + k
    Y = _from_q(ctx, y)
    base = (Y - ctx.mpf(1) / 2) * ctx.ln(Y) - Y + ctx.ln(2 * ctx.pi) / 2
    logsum = ctx.mpf(0)
    if k:
        prod = Fraction(1)
        for j in range(k):
            prod *= q + j
        logsum = ctx.ln(_from_q(ctx, prod))
    inv = 1 / Y
    inv2 = inv * inv
    power = inv
    series = ctx.mpf(0)
    eps = ctx.ldexp(abs(base - logsum) + 1, -ctx.prec)
    prev = None
    j = 1
    while True:
        c = stirling_coefficient(j)
        term = ctx.mpf(c.numerator) / c.denominator * power
        if prev is not None and abs(term) >= abs(prev):
            bridge = prev
            series -= prev
            break
        series += term
        if abs(term) < eps:
            bridge = term
            series -= term
            break
        prev = term
        power *= inv2
        j += 1
    value = base + series - logsum
    err = _allowance(ctx, base, series, logsum, Y * ctx.ln(Y)) * (j + k + 4)
    return value + bridge / 2, abs(bridge) / 2 + err


def lgamma_accurate(x, precision_bits: int = DEFAULT_PRECISION):
    """ln Gamma(x) with an error estimate, as (value, error) at ``precision_bits``."""
    bits = check_precision(precision_bits)
    ctx = context(bits + GUARD_BITS)
    v, e = _lgamma(ctx, _real_arg(x, bits))
    return round_real(v, bits), round_real(e + ctx.ldexp(abs(v), -bits), bits, "c")


# ---------------------------------------------------------------------------
# Gamma(x+3/4)/Gamma(x+1/4) and the Wallis ratio
# ---------------------------------------------------------------------------

_Q1, _Q3 = Fraction(1, 4), Fraction(3, 4)


def _log_ratio(ctx, q: Fraction, hi_shift: Fraction, lo_shift: Fraction):
    a, ea = _lgamma(ctx, q + hi_shift)
    b, eb = _lgamma(ctx, q + lo_shift)
    return a - b, ea + eb


def ratio_quarters_enclosure(x, precision_bits: int = DEFAULT_PRECISION) -> Enclosure:
    """Interval around Gamma(x+3/4)/Gamma(x+1/4) from accurate log-gamma values."""
    bits = check_precision(precision_bits)
    q = _real_arg(x, bits)
    ctx = context(bits + GUARD_BITS)
    d, e = _log_ratio(ctx, q, _Q3, _Q1)
    e += ctx.ldexp(abs(d) + 1, 4 - ctx.prec)
    return Enclosure(round_real(ctx.exp(d - e), bits, "f"), round_real(ctx.exp(d + e), bits, "c"))


def ratio_quarters_direct(x, precision_bits: int = DEFAULT_PRECISION):
    """Gamma(x+3/4)/Gamma(x+1/4) through log-gamma values."""
    bits = check_precision(precision_bits)
    q = _real_arg(x, bits)
    ctx = context(bits + GUARD_BITS)
    d, _ = _log_ratio(ctx, q, _Q3, _Q1)
    return round_real(ctx.exp(d), bits)


@lru_cache(maxsize=None)
def quarter_coefficient(j: int) -> Fraction:
    """E_{2j} / (j 4^{2j+1})."""
    return Fraction(ec.euler_number(2 * j), j * 4 ** (2 * j + 1))


def _quarter_sum(y: Fraction, terms: int) -> Fraction:
    return sum((quarter_coefficient(j) / y ** (2 * j) for j in range(1, terms + 1)), Fraction(0))


def _check_index(m, name: str = "m", minimum: int = 1) -> int:
    if isinstance(m, bool) or not isinstance(m, int) or m < minimum:
        raise DomainError(f"{name} must be an integer >= {minimum}, got {m!r}")
    return m


def ratio_bounds(x, m: int, precision_bits: int = DEFAULT_PRECISION) -> Enclosure:
    """sqrt(x) exp(-sum_{j<=2m} ...) < Gamma(x+3/4)/Gamma(x+1/4) < sqrt(x) exp(-sum_{j<=2m+1} ...),
    with the sums over E_{2j} / (j 4^{2j+1} x^{2j}); endpoints rounded outward."""
    bits = check_precision(precision_bits)
    _check_index(m)
    q = _real_arg(x, bits)
    ctx = context(bits + GUARD_BITS)
    root = ctx.sqrt(_from_q(ctx, q))
    lo = root * ctx.exp(-_from_q(ctx, _quarter_sum(q, 2 * m)))
    hi = root * ctx.exp(-_from_q(ctx, _quarter_sum(q, 2 * m + 1)))
    slack = ctx.ldexp(hi, 4 - ctx.prec)
    return Enclosure(round_real(lo - slack, bits, "f"), round_real(hi + slack, bits, "c"))


def wallis_exact(n: int) -> Fraction:
    """(2n-1)!! / (2n)!! as an exact rational."""
    _check_index(n, "n")
    return Fraction(factorial(2 * n), (2**n * factorial(n)) ** 2)


def wallis_bounds(n: int, m: int, precision_bits: int = DEFAULT_PRECISION) -> Enclosure:
    """exp(sum_{j<=2m+1} E_{2j}/(j 4^{2j+1} y^{2j})) / sqrt(pi y) below the Wallis
    ratio and the same with 2m terms above it, y = n + 1/4."""
    bits = check_precision(precision_bits)
    _check_index(n, "n")
    _check_index(m)
    y = n + _Q1
    ctx = context(bits + GUARD_BITS)
    pref = 1 / ctx.sqrt(ctx.pi * _from_q(ctx, y))
    lo = pref * ctx.exp(_from_q(ctx, _quarter_sum(y, 2 * m + 1)))
    hi = pref * ctx.exp(_from_q(ctx, _quarter_sum(y, 2 * m)))
    slack = ctx.ldexp(hi, 4 - ctx.prec)
    return Enclosure(round_real(lo - slack, bits, "f"), round_real(hi + slack, bits, "c"))


def chen_qi_bounds(n: int, precision_bits: int = DEFAULT_PRECISION) -> Enclosure:
    """1/sqrt(pi (n + 4/pi - 1)) <= (2n-1)!!/(2n)!! < 1/sqrt(pi (n + 1/4)).

    The lower constant is written as 1/sqrt(pi (n-1) + 4), which is exactly 1/2
    at n = 1, where the bound is attained.
    """
    bits = check_precision(precision_bits)
    _check_index(n, "n")
    ctx = context(bits + GUARD_BITS)
    lo = 1 / ctx.sqrt(ctx.pi * (n - 1) + 4)
    hi = 1 / ctx.sqrt(ctx.pi * (ctx.mpf(n) + ctx.mpf(1) / 4))
    return Enclosure(round_real(lo, bits, "f"), round_real(hi, bits, "c"))


def wallis_sequence(n_max: int, precision_bits: int = DEFAULT_PRECISION):
    """Yield (n, W_n, relative error bound) for n = 1..n_max, W_n = (2n-1)!!/(2n)!!,
    by the running product W_n = W_{n-1} (2n-1)/(2n)."""
    bits = check_precision(precision_bits)
    ctx = context(bits + GUARD_BITS)
    w = ctx.mpf(1)
    for n in range(1, n_max + 1):
        w = w * (2 * n - 1) / (2 * n)
        yield n, w, ctx.ldexp(ctx.mpf(2 * n), -ctx.prec)


# ---------------------------------------------------------------------------
# completely monotonic candidates
# ---------------------------------------------------------------------------

CM_FUNCTIONS = ("R", "F", "V", "U")
CONJECTURAL = frozenset({"U"})


def _cm_name(fn: str) -> str:
    name = fn[:-2] if isinstance(fn, str) and fn.endswith("_m") else fn
    if name not in CM_FUNCTIONS:
        raise DomainError(f"unknown function {fn!r}; expected one of R_m, F_m, V_m, U_m")
    return name


@lru_cache(maxsize=None)
def v_coefficients(m: int, form: str = "euler") -> tuple[Fraction, ...]:
    """Coefficients c_j of x^{-2j} (j = 1..m) inside the bracket of V_m.

    ``bernoulli``: -B_{2j+1}(1/4) / (j (2j+1));  ``euler``: E_{2j} / (j 4^{2j+1}).
    The two lists agree exactly.
    """
    if form == "bernoulli":
        return tuple(-ec.bernoulli_poly(2 * j + 1)(_Q1) / (j * (2 * j + 1)) for j in range(1, m + 1))
    if form == "euler":
        return tuple(quarter_coefficient(j) for j in range(1, m + 1))
    raise DomainError(f"form must be 'bernoulli' or 'euler', got {form!r}")


@lru_cache(maxsize=None)
def _cm_coefficients(name: str, m: int) -> tuple[tuple[int, Fraction], ...]:
    """(power of 1/x, coefficient) pairs subtracted inside the bracket."""
    if name == "R":
        return tuple((2 * j - 1, stirling_coefficient(j)) for j in range(1, m + 1))
    if name == "F":
        return tuple((2 * j - 1, (1 - Fraction(1, 4**j)) * ec.bernoulli(2 * j) / (j * (2 * j - 1))) for j in range(1, m + 1))
    if name == "V":
        return tuple((2 * j, -c) for j, c in enumerate(v_coefficients(m), start=1))
    third = Fraction(1, 3)
    return tuple((2 * j, ec.bernoulli_poly(2 * j + 1)(third) / (j * (2 * j + 1))) for j in range(1, m + 1))


def _cm_value(ctx, name: str, q: Fraction, m: int):
    """Value and error bound of R_m, F_m, V_m or U_m at the rational q."""
    X = _from_q(ctx, q)
    lx = ctx.ln(X)
    if name == "R":
        g, e = _lgamma(ctx, q)
        head = g - (X - ctx.mpf(1) / 2) * lx + X - ctx.ln(2 * ctx.pi) / 2
    elif name == "F":
        head, e = _log_ratio(ctx, q, Fraction(1), Fraction(1, 2))
        head -= lx / 2
    elif name == "V":
        head, e = _log_ratio(ctx, q, _Q3, _Q1)
        head -= lx / 2
    else:
        head, e = _log_ratio(ctx, q, Fraction(2, 3), Fraction(1, 3))
        head -= lx / 3
    poly = sum((c / q**p for p, c in _cm_coefficients(name, m)), Fraction(0))
    value = (-1) ** m * (head - _from_q(ctx, poly))
    err = e + _allowance(ctx, head, X * lx)
    return value, err


def cm_function_eval(fn: str, x, m: int, precision_bits: int = DEFAULT_PRECISION):
    """R_m, F_m, V_m or U_m at x, including the (-1)^m factor.

    R_m, F_m and V_m are proved completely monotonic; U_m only is if the
    1/3 sign conjecture holds, so its positivity is evidence, not fact.
    """
    name = _cm_name(fn)
    bits = check_precision(precision_bits)
    _check_index(m, "m", 0)
    q = _real_arg(x, bits)
    ctx = context(bits + GUARD_BITS)
    value, _ = _cm_value(ctx, name, q, m)
    return round_real(value, bits)


@dataclass(frozen=True)
class CheckPoint:
    x: Fraction
    order: int
    value: object
    floor: object
    status: str
    halving_ratio: object = None


@dataclass(frozen=True)
class Report:
    """Outcome of a sweep; each point keeps its inputs and both sides (value vs 0)."""

    check: str
    grid: tuple
    points: tuple
    parameters: dict = field(default_factory=dict)

    @property
    def failures(self) -> list[CheckPoint]:
        return [p for p in self.points if p.status == "fail"]

    @property
    def status(self) -> str:
        states = {p.status for p in self.points}
        if "fail" in states:
            return "fail"
        return "inconclusive" if "inconclusive" in states else "pass"

    @property
    def worst_margin(self):
        return min((p.value for p in self.points), default=None)

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def _forward_difference(values, errs, k: int):
    # (-1)^k Delta_h^k f(x) = sum_i (-1)^i C(k, i) f(x + i h)
    total = sum((-1) ** i * comb(k, i) * values[i] for i in range(k + 1))
    floor = sum(comb(k, i) * errs[i] for i in range(k + 1))
    return total, floor


def cm_finite_difference_check(
    fn: str,
    x,
    m: int,
    max_order: int = 4,
    h=Fraction(1, 64),
    precision_bits: int = DEFAULT_PRECISION,
) -> Report:
    """Signs of (-1)^k Delta_h^k f(x) for k = 0..max_order.

    A completely monotonic f makes all of these non-negative. Each point is
    ``pass`` when the difference exceeds its error floor (the propagated
    evaluation error, 2^k times the per-value error), ``fail`` when it is
    below minus the floor, and ``inconclusive`` otherwise. The ratio of the
    differences at h and h/2 (about 2^k when the step is in the asymptotic
    regime) is kept as a diagnostic. A clean sweep is consistent with
    complete monotonicity; it does not prove it.
    """
    name = _cm_name(fn)
    bits = check_precision(precision_bits)
    _check_index(m, "m", 0)
    if isinstance(max_order, bool) or not isinstance(max_order, int) or not 0 <= max_order <= 4:
        raise DomainError(f"max_order must be an integer in [0, 4], got {max_order!r}")
    xs = [_real_arg(v, bits) for v in (x if isinstance(x, (list, tuple)) else [x])]
    step = Fraction(h) if not isinstance(h, float) else to_fraction(h)
    if step <= 0:
        raise DomainError(f"h must be > 0, got {h!r}")
    ctx = context(bits + GUARD_BITS)
    points = []
    for q in xs:
        samples = {}
        for i in range(2 * max_order + 1):
            samples[i] = _cm_value(ctx, name, q + i * step / 2, m)
        full = [samples[2 * i] for i in range(max_order + 1)]
        half = [samples[i] for i in range(max_order + 1)]
        for k in range(max_order + 1):
            value, floor = _forward_difference([v for v, _ in full], [e for _, e in full], k)
            hv, _ = _forward_difference([v for v, _ in half], [e for _, e in half], k)
            if value > floor:
                status = "pass"
            elif value < -floor:
                status = "fail"
            else:
                status = "inconclusive"
            ratio = value / hv if hv else None
            points.append(
                CheckPoint(
                    q,
                    k,
                    round_real(value, bits),
                    round_real(floor, bits, "c"),
                    status,
                    round_real(ratio, 53) if ratio is not None else None,
                )
            )
    label = f"{name}_{m}" + (" (CONJECTURAL)" if name in CONJECTURAL else "")
    return Report(
        check=f"finite differences of {label}",
        grid=tuple(xs),
        points=tuple(points),
        parameters={"fn": name, "m": m, "max_order": max_order, "h": str(step), "precision_bits": bits},
    )


# ---------------------------------------------------------------------------
# integrals for ln(4/pi) and ln(pi/3)
# ---------------------------------------------------------------------------

QUAD_CONSTANTS = {"ln_4_over_pi": Fraction(1, 4), "ln_pi_over_3": Fraction(3, 4)}
QUAD_ALIASES = {"ln4pi": "ln_4_over_pi", "lnpi3": "ln_pi_over_3"}
_PATCH = Fraction(1, 1000)
_PATCH_DEGREE = 8


def quad_oracle(which: str, precision_bits: int = DEFAULT_PRECISION):
    """ln(4/pi) or ln(pi/3) straight from logarithms."""
    which = QUAD_ALIASES.get(which, which)
    ctx = context(check_precision(precision_bits) + GUARD_BITS)
    if which == "ln_4_over_pi":
        v = ctx.ln(4) - ctx.ln(ctx.pi)
    elif which == "ln_pi_over_3":
        v = ctx.ln(ctx.pi) - ctx.ln(3)
    else:
        raise DomainError(f"unknown constant {which!r}; expected ln_4_over_pi or ln_pi_over_3")
    return round_real(v, precision_bits)


@lru_cache(maxsize=None)
def integrand_series(c: Fraction, degree: int = _PATCH_DEGREE) -> tuple[Fraction, ...]:
    """Taylor coefficients (t^0..t^degree) of ((e^{t/4}-e^{3t/4})/(e^t-1) + 1/2) 2e^{-ct}/t.

    The bracket equals (1 - sech(t/4))/2, so 2/t times it is
    -sum_{j>=1} E_{2j} t^{2j-1} / (4^{2j} (2j)!).
    """
    h = [Fraction(0)] * (degree + 1)
    for j in range(1, degree // 2 + 2):
        p = 2 * j - 1
        if p <= degree:
            h[p] = -Fraction(ec.euler_number(2 * j), 4 ** (2 * j) * factorial(2 * j))
    e = [(-c) ** i / factorial(i) for i in range(degree + 1)]
    return tuple(sum(h[i] * e[n - i] for i in range(n + 1)) for n in range(degree + 1))


def quad_integrand(t, c, ctx):
    """((e^{t/4} - e^{3t/4})/(e^t - 1) + 1/2) 2 e^{-ct} / t, with the bracket as (1 - sech(t/4))/2."""
    bracket = (1 - ctx.sech(t / 4)) / 2
    return bracket * 2 * ctx.exp(-c * t) / t


def quad_log_const(which: str, tol=1e-12, precision_bits: int = DEFAULT_PRECISION):
    """int_0^oo ((e^{t/4}-e^{3t/4})/(e^t-1) + 1/2) 2e^{-ct}/t dt for c = 1/4 (ln(4/pi))
    or c = 3/4 (ln(pi/3)).

    (0, 1e-3] is integrated exactly from a degree-8 Taylor patch, with a
    Cauchy-estimate bound on the neglected terms (the integrand is analytic
    for |t| < 2 pi and bounded by 9 on |t| = pi). Gauss-Legendre covers
    [1e-3, 1], [1, 2], [2, 4], ... up to T = max(50, -4 ln(tol)/c), and the
    range beyond T is bounded by e^{-cT}/(cT). PrecisionError is raised when
    the summed error estimate exceeds ``tol``.
    """
    which = QUAD_ALIASES.get(which, which)
    if which not in QUAD_CONSTANTS:
        raise DomainError(f"unknown constant {which!r}; expected ln_4_over_pi or ln_pi_over_3")
    bits = check_precision(precision_bits)
    if not tol > 0:
        raise DomainError(f"tol must be > 0, got {tol!r}")
    c = QUAD_CONSTANTS[which]
    ctx = context(bits + GUARD_BITS)
    C = _from_q(ctx, c)

    coeffs = integrand_series(c)
    patch = sum((a * _PATCH ** (n + 1) / (n + 1) for n, a in enumerate(coeffs)), Fraction(0))
    d = ctx.mpf(_PATCH.numerator) / _PATCH.denominator
    patch_err = d * 9 * (d / ctx.pi) ** (_PATCH_DEGREE + 1) / (1 - d / ctx.pi)

    T = max(50, math.ceil(-math.log(float(tol)) * 4 / float(c)))
    nodes = [d, ctx.mpf(1)]
    while nodes[-1] < T:
        nodes.append(min(2 * nodes[-1], ctx.mpf(T)))
    body, body_err = ctx.quad(lambda t: quad_integrand(t, C, ctx), nodes, method="gauss-legendre", error=True)
    tail_err = ctx.exp(-C * T) / (C * T)

    value = _from_q(ctx, patch) + body
    total_err = patch_err + body_err + tail_err + ctx.ldexp(abs(value), 4 - bits)
    if total_err > tol:
        raise PrecisionError(
            f"quadrature error estimate {float(total_err):.3g} exceeds tol {tol!r}; "
            "the achievable floor is about 1e-33 (set by the series patch), or raise precision_bits"
        )
    return round_real(value, bits)


# ---------------------------------------------------------------------------
# generalized Euler constant
# ---------------------------------------------------------------------------


def gamma_gen_euler(z, tol=1e-12, precision_bits: int = DEFAULT_PRECISION):
    """gamma(z) = sum_{n>=1} z^{n-1} (1/n - ln((n+1)/n)) for |z| <= 1.

    Tail control: for z < 0 the terms alternate and shrink, so the first
    omitted term bounds the tail; for 0 <= z < 1 a geometric bound; for z = 1
    the tail over n > N lies in [1/(2(N+1)) - 1/(6N^2), 1/(2N)] and its
    midpoint is added.
    """
    bits = check_precision(precision_bits)
    if not tol > 0:
        raise DomainError(f"tol must be > 0, got {tol!r}")
    ctx = context(bits + GUARD_BITS)
    zq = to_fraction(to_real(context(bits), z))
    if abs(zq) > 1:
        raise DomainError(f"z must satisfy |z| <= 1, got {z!r}")
    if tol < 2.0 ** (8 - bits):
        raise PrecisionError(f"tol {tol!r} is below the {bits}-bit evaluation floor; raise precision_bits")
    Z = _from_q(ctx, zq)
    tol_w = ctx.mpf(tol) / 2

    def term(n):
        return 1 / ctx.mpf(n) - ctx.log1p(1 / ctx.mpf(n))

    if zq == 0:
        return round_real(term(1), bits)
    total = ctx.mpf(0)
    power = ctx.mpf(1)
    az = abs(Z)
    n = 0
    while True:
        n += 1
        if n > MAX_TERMS:
            raise BudgetError(f"gamma({z}) needs more than {MAX_TERMS} terms for tol {tol!r}")
        total += power * term(n)
        power *= Z
        N = n
        if zq == 1:
            lo = ctx.mpf(1) / (2 * (N + 1)) - ctx.mpf(1) / (6 * N * N)
            hi = ctx.mpf(1) / (2 * N)
            if (hi - lo) / 2 <= tol_w:
                return round_real(total + (lo + hi) / 2, bits)
        elif zq < 0:
            if abs(power) * term(N + 1) <= tol_w:
                return round_real(total, bits)
        else:
            if abs(power) / (2 * (N + 1) ** 2 * (1 - az)) <= tol_w:
                return round_real(total, bits)


# ---------------------------------------------------------------------------
# sign of the integrand in the ln G expansion
# ---------------------------------------------------------------------------


def barnes_integrand_sign(t, N: int, precision_bits: int = DEFAULT_PRECISION):
    """(-1)^N ((t/2) coth(t/2) - sum_{k=0}^N B_{2k} t^{2k} / (2k)!), which is positive."""
    bits = check_precision(precision_bits)
    _check_index(N, "N")
    tv = positive_arg(context(bits), t)
    tq = to_fraction(tv)
    tf = float(tv)
    extra = GUARD_BITS + 8 + (math.ceil((2 * N + 2) * math.log2(1 / tf)) if tf < 1 else math.ceil(2 * N * math.log2(tf)))
    ctx = context(bits + extra)
    x = ctx.mpf(tv) / 2
    # x coth x = x (1 + e^{-2x}) / (1 - e^{-2x})
    direct = x * (1 + ctx.exp(-2 * x)) / -ctx.expm1(-2 * x)
    poly = sum((ec.bernoulli(2 * k) * tq ** (2 * k) / factorial(2 * k) for k in range(N + 1)), Fraction(0))
    return round_real((-1) ** N * (direct - _from_q(ctx, poly)), bits)
