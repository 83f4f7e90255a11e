"""Per-call precision plumbing on top of mpmath.

Every public numeric routine takes ``precision_bits`` and works in a private
``MPContext`` with that precision (plus guard bits), so no global mpmath state
is read or written. Returned ``mpf`` values carry their context, which records
the precision they were produced at.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

import mpmath
from mpmath.libmp import from_rational, mpf_pos, to_str

from .errors import DomainError, RangeError

DEFAULT_PRECISION = 256
GUARD_BITS = 32
MIN_PRECISION = 53
MAX_PRECISION = 4096

_local = threading.local()


def context(bits: int) -> mpmath.ctx_mp.MPContext:
    """Return a (thread-local, cached) mpmath context fixed at ``bits``."""
    cache = _local.__dict__.setdefault("contexts", {})
    ctx = cache.get(bits)
    if ctx is None:
        ctx = mpmath.MPContext()
        ctx.prec = bits
        cache[bits] = ctx
    return ctx


def check_precision(bits: int) -> int:
    if not isinstance(bits, int) or bits < MIN_PRECISION:
        raise DomainError(f"precision_bits must be an integer >= {MIN_PRECISION}, got {bits!r}")
    if bits > MAX_PRECISION:
        raise DomainError(f"precision_bits must be <= {MAX_PRECISION}, got {bits}")
    return bits


def to_real(ctx, x):
    """Convert ``x`` (int, Fraction, float, str or mpf) to an mpf of ``ctx``."""
    if isinstance(x, Fraction):
        return ctx.make_mpf(from_rational(x.numerator, x.denominator, ctx.prec, "n"))
    if isinstance(x, float) and not math.isfinite(x):
        raise RangeError(f"argument must be finite, got {x!r}")
    v = ctx.mpf(x)
    if not ctx.isfinite(v):
        raise RangeError(f"argument must be finite, got {x!r}")
    return v


def to_fraction(x) -> Fraction:
    """Exact rational value of a finite binary float (mpf, float, int, Fraction)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    sign, man, exp, _ = x._mpf_
    if not man:
        return Fraction(0)
    man = -int(man) if sign else int(man)
    if exp >= 0:
        return Fraction(man << exp)
    return Fraction(man, 1 << -exp)


def fraction_to_real(q: Fraction, bits: int, rounding: str = "n"):
    """Round an exact rational to ``bits`` with the given mpmath rounding mode."""
    ctx = context(bits)
    return ctx.make_mpf(from_rational(q.numerator, q.denominator, bits, rounding))


def round_real(x, bits: int, rounding: str = "n"):
    """Round an mpf (from any context) to ``bits``; 'f' floors, 'c' ceils."""
    ctx = context(bits)
    return ctx.make_mpf(mpf_pos(x._mpf_, bits, rounding))


def positive_arg(ctx, t, name: str = "t"):
    v = to_real(ctx, t)
    if v <= 0:
        raise DomainError(f"{name} must be > 0, got {t!r}")
    return v


def ulp(x, bits: int):
    """Unit in the last place of ``x`` at ``bits`` of precision (as an mpf)."""
    ctx = context(bits + GUARD_BITS)
    if not x:
        return ctx.ldexp(ctx.mpf(1), -bits - 1074)
    _, e = ctx.frexp(ctx.mpf(x))
    return ctx.ldexp(ctx.mpf(1), int(e) - bits)


def format_real(x, bits: int) -> str:
    """Scientific-notation string with as many digits as ``bits`` carries."""
    digits = max(1, int(bits * math.log10(2)))
    return to_str(x._mpf_, digits, min_fixed=1, max_fixed=1)


def log2_abs(x) -> float:
    """Rough log2 |x| as a float (for guard-bit estimates); -inf for zero."""
    if not x:
        return -math.inf
    _, man, exp, _ = x._mpf_
    return int(man).bit_length() + int(exp)


def cancellation_guard(t: float, small_power: int, large_power: int = 0) -> int:
    """Extra bits to absorb cancellation for a remainder ~t**small_power (t small)
    or partial sums growing like t**large_power (t large)."""
    extra = 0
    if t < 1:
        extra += math.ceil(small_power * math.log2(1 / t))
    elif large_power:
        extra += math.ceil(large_power * math.log2(t))
    return GUARD_BITS + extra + 8
