"""Verification suites: each runs a family of identities and inequalities over a
grid and collects every failure with its inputs and both sides."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from . import exact_core as ec
from . import expansions as ex
from . import gamma_bounds as gb
from ._mp import DEFAULT_PRECISION, GUARD_BITS, context, format_real, to_real, ulp
from .errors import DomainError
from .grids import CM_POINTS, RATIO_POINTS, STANDARD, Grid

SUITES = ("recurrences", "remainders", "theta", "inequalities", "gamma", "conjecture")

CONJECTURAL_NOTE = (
    "CONJECTURAL: the 1/3 family (mu_m sign, U_m monotonicity) is numerical evidence for an open conjecture, not a theorem"
)


@dataclass(frozen=True)
class Config:
    precision_bits: int = DEFAULT_PRECISION
    tol: float = 1e-12
    grid: Grid | None = None
    n_max: int = 200
    order_max: int = 6

    def __post_init__(self):
        if not isinstance(self.precision_bits, int) or self.precision_bits < 53:
            raise DomainError(f"precision_bits must be an integer >= 53, got {self.precision_bits!r}")
        if not self.tol > 0:
            raise DomainError(f"tolerance must be > 0, got {self.tol!r}")

    @property
    def t_grid(self) -> Grid:
        return self.grid if self.grid is not None else STANDARD


@dataclass
class VerificationSummary:
    suite: str
    total: int = 0
    failures: list = field(default_factory=list)
    runtime: float = 0.0
    notes: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "total": self.total,
            "passed": self.total - len(self.failures),
            "failures": self.failures,
            "runtime_seconds": round(self.runtime, 3),
            "notes": list(self.notes),
            "checks": dict(sorted(self.counts.items())),
        }


class _Recorder:
    def __init__(self, summary: VerificationSummary, bits: int):
        self.summary = summary
        self.bits = bits

    def _fmt(self, v):
        if isinstance(v, Fraction):
            return str(v)
        if isinstance(v, (int, str)):
            return str(v)
        if isinstance(v, float):
            return repr(v)
        return format_real(v, self.bits)

    def record(self, check: str, ok: bool, inputs: dict, lhs, rhs, relation: str):
        self.summary.total += 1
        self.summary.counts[check] = self.summary.counts.get(check, 0) + 1
        if not ok:
            self.summary.failures.append(
                {
                    "check": check,
                    "inputs": {k: self._fmt(v) for k, v in inputs.items()},
                    "lhs": self._fmt(lhs),
                    "relation": relation,
                    "rhs": self._fmt(rhs),
                }
            )

    def guarded(self, check: str, inputs: dict, fn):
        """Run ``fn``; an arithmetic or domain error is recorded as a failure."""
        try:
            fn()
        except (ArithmeticError, ValueError) as exc:
            self.summary.total += 1
            self.summary.counts[check] = self.summary.counts.get(check, 0) + 1
            self.summary.failures.append(
                {
                    "check": check,
                    "inputs": {k: self._fmt(v) for k, v in inputs.items()},
                    "lhs": type(exc).__name__,
                    "relation": "raised",
                    "rhs": str(exc),
                }
            )


# ---------------------------------------------------------------------------
# shared helpers (also used by the acceptance tests)
# ---------------------------------------------------------------------------

REMAINDER_ORDERS = {"eta": range(1, 7), "sech": range(1, 7), "coth": range(0, 7), "binet": range(0, 7)}


def reconstruction(fn: str, t, index: int, tol, bits: int = DEFAULT_PRECISION):
    """(residual, allowance, result) for partial + remainder = direct.

    The allowance is tail_bound + 8 ulp, with the ulp taken at ``bits`` of
    the largest of |partial|, |remainder|, |direct|.
    """
    ctx = context(4 * bits + GUARD_BITS)
    direct = ctx.mpf(ex.direct_eval(fn, t, bits))
    if fn == "eta":
        res = ex.eta_remainder(t, index, tol, bits)
        partial = ex.eta_partial(t, index, bits)
    elif fn == "sech":
        res = ex.sech_remainder(t, index, tol, bits)
        partial = ex.sech_partial(t, index, bits)
    elif fn == "coth":
        res = ex.sigma_series(t, index, tol, bits)
        partial = ex.coth_partial(t, index, bits)
    elif fn == "binet":
        res = ex.binet_remainder(t, index, tol, bits)
        partial = ex.binet_partial(t, index, bits)
    else:
        raise DomainError(f"unknown function {fn!r}")
    partial = ctx.mpf(partial)
    rem = ctx.mpf(res.value)
    residual = abs(partial + rem - direct)
    scale = max(abs(partial), abs(rem), abs(direct))
    allowance = ctx.mpf(res.tail_bound) + 8 * ulp(scale, bits)
    return residual, allowance, res


def _ulps(x, bits: int, count: int = 8):
    return count * ulp(x, bits)


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def _recurrences(rec: _Recorder, cfg: Config):
    n_max = cfg.n_max
    for scheme in ec.SCHEMES:
        for n in range(n_max + 1):
            if not ec.scheme_domain(scheme, n):
                continue
            got, want = ec.quad_recurrence(n, scheme), ec.bernoulli(n)
            rec.record(f"bernoulli scheme {scheme}", got == want, {"n": n}, got, want, "==")
    for n in range(n_max + 1):
        got, want = ec.euler_number_from_poly(n), ec.euler_number(n)
        rec.record("euler number two routes", got == want, {"n": n}, got, want, "==")
    for n in range(3, n_max + 1, 2):
        rec.record("odd bernoulli vanish", ec.bernoulli(n) == 0, {"n": n}, ec.bernoulli(n), 0, "==")
    for j in range(1, n_max // 2 + 1):
        b = ec.bernoulli(2 * j)
        rec.record("even bernoulli sign", (b > 0) == (j % 2 == 1), {"n": 2 * j}, b, 0, "sign (-1)^(j+1)")


def _remainders(rec: _Recorder, cfg: Config):
    bits = cfg.precision_bits
    for fn, orders in REMAINDER_ORDERS.items():
        for t in cfg.t_grid:
            for k in orders:
                if k > cfg.order_max:
                    continue
                inputs = {"fn": fn, "t": t, "index": k}

                def run(fn=fn, t=t, k=k, inputs=inputs):
                    residual, allowance, _ = reconstruction(fn, t, k, cfg.tol, bits)
                    rec.record("reconstruction", residual <= allowance, inputs, residual, allowance, "<=")

                rec.guarded("reconstruction", inputs, run)
    # coth at t/2 reproduces the Binet remainder nu_n
    for t in cfg.t_grid:
        for n in range(0, min(cfg.order_max, 6) + 1):
            inputs = {"t": t, "n": n}

            def run(t=t, n=n, inputs=inputs):
                a = ex.nu_series(t, n, cfg.tol, bits)
                b = ex.nu_from_coth(t, n, cfg.tol, bits)
                diff = abs(a.value - b.value)
                allow = a.tail_bound + b.tail_bound + _ulps(a.value, bits)
                rec.record("nu via coth(t/2)", diff <= allow, inputs, diff, allow, "<=")

            rec.guarded("nu via coth(t/2)", inputs, run)
    # integral representations
    for t, m in ((Fraction(1, 2), 1), (Fraction(1), 2), (Fraction(5), 3)):
        inputs = {"t": t, "m": m}

        def run(t=t, m=m, inputs=inputs):
            s = ex.eta_remainder(t, m, 1e-30, bits)
            q = ex.eta_remainder_integral(t, m, 1e-30, bits)
            diff = abs(s.value - q)
            allow = s.tail_bound + 1e-30 + _ulps(q, bits)
            rec.record("r_m series vs integral", diff <= allow, inputs, diff, allow, "<=")

        rec.guarded("r_m series vs integral", inputs, run)
    for t, n in ((Fraction(1, 2), 1), (Fraction(1), 2), (Fraction(3), 2)):
        for form in ("even", "odd"):
            inputs = {"t": t, "n": n, "form": form}

            def run(t=t, n=n, form=form, inputs=inputs):
                s = ex.nu_series(t, n, 1e-30, bits)
                q = ex.nu_integral(t, n, 1e-30, bits, form=form)
                diff = abs(s.value - q)
                allow = s.tail_bound + 1e-30 + _ulps(q, bits)
                rec.record("nu_n series vs integral", diff <= allow, inputs, diff, allow, "<=")

            rec.guarded("nu_n series vs integral", inputs, run)


def _theta(rec: _Recorder, cfg: Config):
    bits = cfg.precision_bits
    near_zero = Fraction(1, 10**4)
    for name, fn, orders in (("Theta", ex.theta_cap, range(1, 7)), ("theta", ex.theta_low, range(0, 7))):
        for N in orders:
            if N > cfg.order_max:
                continue
            prev = None
            for t in cfg.t_grid:
                inputs = {"t": t, "N": N}
                v = fn(t, N, bits)
                rec.record(f"{name} in (0,1)", 0 < v < 1, inputs, v, "(0, 1)", "in")
                if prev is not None:
                    rec.record(f"{name} decreasing in t", v < prev[1], {**inputs, "t_prev": prev[0]}, v, prev[1], "<")
                prev = (t, v)
            small = fn(near_zero, N, bits)
            rec.record(f"{name} near t=0", small > 0.99, {"t": near_zero, "N": N}, small, 0.99, ">")


def _inequalities(rec: _Recorder, cfg: Config):
    bits = cfg.precision_bits
    top = min(cfg.order_max, 6)
    for t in cfg.t_grid:
        for fn in ex.FUNCTIONS:
            for k in range(0, top + 1):
                inputs = {"fn": fn, "t": t, "index": k}
                gap = ex.remainder_sign_gap(fn, t, k, bits)
                rec.record("signed remainder positive", gap > 0, inputs, gap, 0, ">")
                if k < top:
                    enc = ex.enclosure(fn, t, k, bits)
                    d = ex.direct_eval(fn, t, bits)
                    # the direct value carries up to 4 ulp of its own error
                    slack = _ulps(d, bits, 4)
                    ok = enc.lo - slack <= d <= enc.hi + slack
                    rec.record("enclosure contains direct value", ok, inputs, d, f"[{enc.lo}, {enc.hi}]", "in")
                    width = ex.bridge_term(fn, t, k, bits)
                    wide = context(4 * bits)
                    exact_width = wide.mpf(enc.hi) - wide.mpf(enc.lo)
                    gap = abs(exact_width - wide.mpf(width.numerator) / width.denominator)
                    w_ok = gap <= _ulps(max(abs(enc.lo), abs(enc.hi)), bits, 2)
                    rec.record("enclosure width is the bridging term", w_ok, inputs, exact_width, width, "==")
        for m in range(1, min(top, 5) + 1):
            g = ex.eta_derivative_gap(t, m, bits)
            rec.record("derivative inequality", g > 0, {"t": t, "m": m}, g, 0, ">")
    for m in range(1, top + 1):
        prev = None
        for t in cfg.t_grid:
            s = ex.s_series(t, m, cfg.tol, bits).value
            ts = context(bits + GUARD_BITS).mpf(to_real(context(bits), t)) ** 2 * s
            if prev is not None:
                rec.record("s_m decreasing", s < prev[1], {"t": t, "m": m}, s, prev[1], "<")
                rec.record("t^2 s_m increasing", ts > prev[2], {"t": t, "m": m}, ts, prev[2], ">")
            prev = (t, s, ts)


def ctx_real(q: Fraction, bits: int):
    return to_real(context(bits + GUARD_BITS), q)


def _log_gamma_oracles(bits: int):
    ctx = context(bits + GUARD_BITS)
    out = []
    for n in range(1, 8):
        out.append((Fraction(n), ctx.ln(factorial(n - 1))))
        # Gamma(n + 1/2) = sqrt(pi) (2n)! / (4^n n!)
        out.append((Fraction(2 * n + 1, 2), ctx.ln(ctx.sqrt(ctx.pi) * factorial(2 * n) / (4**n * factorial(n)))))
    out.append((Fraction(1, 2), ctx.ln(ctx.pi) / 2))
    return out


def _gamma(rec: _Recorder, cfg: Config):
    bits = cfg.precision_bits
    for x, want in _log_gamma_oracles(bits):
        enc = gb.log_gamma_enclosure(x, 8, bits)
        rec.record("log-gamma enclosure", enc.contains(want), {"x": x}, want, f"[{enc.lo}, {enc.hi}]", "in")
    for x in RATIO_POINTS:
        r = gb.ratio_quarters_enclosure(x, bits)
        for m in (1, 2, 3):
            b = gb.ratio_bounds(x, m, bits)
            ok = b.lo < r.lo and r.hi < b.hi
            rec.record("gamma quarter ratio bounds", ok, {"x": x, "m": m}, f"[{r.lo}, {r.hi}]", f"({b.lo}, {b.hi})", "inside")
    for n in range(1, 51):
        w = ctx_real(gb.wallis_exact(n), bits)
        for m in (1, 2, 3):
            b = gb.wallis_bounds(n, m, bits)
            rec.record("wallis bounds", b.lo < w < b.hi, {"n": n, "m": m}, w, f"({b.lo}, {b.hi})", "inside")
    lo1 = gb.chen_qi_bounds(1, bits).lo
    rec.record("chen-qi equality at n=1", abs(lo1 - Fraction(1, 2)) <= _ulps(lo1, bits, 4), {"n": 1}, lo1, "1/2", "==")
    ns = cfg.grid.integers() if cfg.grid is not None else None
    wanted = set(ns) if ns is not None else None
    n_top = max(ns) if ns else (0 if ns is not None else 10**4)
    for n, w, rel in gb.wallis_sequence(n_top, bits):
        if wanted is not None and n not in wanted:
            continue
        b = gb.chen_qi_bounds(n, bits)
        err = w * rel
        if n == 1:
            ok = b.lo - err <= w < b.hi - err
        else:
            ok = b.lo < w - err and w + err < b.hi
        rec.record("chen-qi bounds", ok, {"n": n}, w, f"[{b.lo}, {b.hi})", "inside")
    for fn in ("R", "F", "V"):
        for m in range(0, 5):
            report = gb.cm_finite_difference_check(fn, list(CM_POINTS), m, 4, Fraction(1, 64), bits)
            for p in report.points:
                rec.record(
                    f"finite differences {fn}_m",
                    p.status != "fail",
                    {"x": p.x, "m": m, "k": p.order},
                    p.value,
                    f"-{p.floor}",
                    ">=",
                )
    for m in range(0, 11):
        a, b = gb.v_coefficients(m, "bernoulli"), gb.v_coefficients(m, "euler")
        rec.record("V_m coefficient forms agree", a == b, {"m": m}, str(a), str(b), "==")
    for which in ("ln_4_over_pi", "ln_pi_over_3"):
        tol = max(cfg.tol, 1e-30)
        inputs = {"which": which, "tol": tol}

        def run(which=which, tol=tol, inputs=inputs):
            v = gb.quad_log_const(which, tol, bits)
            o = gb.quad_oracle(which, bits)
            rec.record("quadrature constant", abs(v - o) <= tol, inputs, v, o, "~=")

        rec.guarded("quadrature constant", inputs, run)
    ctx = context(bits + GUARD_BITS)
    g = gb.gamma_gen_euler(-1, 1e-8, bits)
    o = ctx.ln(4) - ctx.ln(ctx.pi)
    rec.record("gamma(-1) = ln(4/pi)", abs(g - o) <= 1e-8, {"z": -1}, g, o, "~=")
    g0 = gb.gamma_gen_euler(0, 1e-8, bits)
    o0 = 1 - ctx.ln(2)
    rec.record("gamma(0) = 1 - ln 2", abs(g0 - o0) <= _ulps(o0, bits, 4), {"z": 0}, g0, o0, "==")
    g1 = gb.gamma_gen_euler(1, 1e-8, bits)
    rec.record("gamma(1) = Euler's constant", abs(g1 - ctx.euler) <= 1e-8, {"z": 1}, g1, ctx.euler, "~=")
    for t in cfg.t_grid:
        for N in range(1, 6):
            v = gb.barnes_integrand_sign(t, N, bits)
            rec.record("ln G integrand sign", v > 0, {"t": t, "N": N}, v, 0, ">")


def _conjecture(rec: _Recorder, cfg: Config):
    bits = cfg.precision_bits
    rec.summary.notes.append(CONJECTURAL_NOTE)
    top = min(cfg.order_max, 6)
    for t in cfg.t_grid:
        for m in range(0, top + 1):
            inputs = {"t": t, "m": m}
            nu = ex.conjecture_fn("nu_quarter", t, m, bits)
            rec.record("nu_m sign (proved)", (-1) ** m * nu > 0, inputs, (-1) ** m * nu, 0, ">")
            alt = ex.nu_quarter_via_sech(t, m, bits)
            scale = max(abs(nu), abs(alt))
            rec.record("nu_m via sech(t/4)", abs(nu - alt) <= _ulps(scale, bits), inputs, nu, alt, "~=")
            mu = ex.conjecture_fn("mu_third", t, m, bits)
            rec.record("mu_m sign (CONJECTURAL)", (-1) ** m * mu > 0, inputs, (-1) ** m * mu, 0, ">")
    for m in range(0, 5):
        report = gb.cm_finite_difference_check("U", list(CM_POINTS), m, 4, Fraction(1, 64), bits)
        for p in report.points:
            rec.record(
                "finite differences U_m (CONJECTURAL)",
                p.status != "fail",
                {"x": p.x, "m": m, "k": p.order},
                p.value,
                f"-{p.floor}",
                ">=",
            )


_RUNNERS = {
    "recurrences": _recurrences,
    "remainders": _remainders,
    "theta": _theta,
    "inequalities": _inequalities,
    "gamma": _gamma,
    "conjecture": _conjecture,
}


def run_suite(suite: str, config: Config | None = None) -> VerificationSummary:
    """Run one suite (or ``all``) and summarize."""
    cfg = config or Config()
    if suite != "all" and suite not in _RUNNERS:
        raise DomainError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES + ('all',))}")
    summary = VerificationSummary(suite)
    rec = _Recorder(summary, cfg.precision_bits)
    start = time.perf_counter()
    for name in SUITES if suite == "all" else (suite,):
        _RUNNERS[name](rec, cfg)
    summary.runtime = time.perf_counter() - start
    return summary
