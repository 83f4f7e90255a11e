"""Acceptance criteria.

Each test prints one ``PASS``/``FAIL`` line with its measured margin; the
lines are collected again in the terminal summary. Running this file as a
script (``python3 tests/test_acceptance.py``) prints the same table without
pytest.
"""

from __future__ import annotations

import time
from fractions import Fraction
from math import comb

import bernoulli_euler as be
from bernoulli_euler import exact_core as ec
from bernoulli_euler._mp import ulp
from bernoulli_euler.grids import CM_POINTS, RATIO_POINTS, STANDARD

import oracles

BITS = 256
TOL = 1e-12
RESULTS: dict[str, str] = {}


def report(number: int, title: str, ok: bool, detail: str, elapsed: float) -> None:
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}  [{detail}; {elapsed:.2f} s]"
    RESULTS[f"{number:02d}"] = line
    print(line)


def _direct_hp(fn: str, t: Fraction):
    return oracles.direct(fn, t, 4 * BITS)


def _reconstruct(fn: str, t: Fraction, k: int):
    """(residual, allowance) of partial + remainder against a 1024-bit closed form."""
    c = oracles.ctx(4 * BITS)
    if fn == "eta":
        partial, res = be.eta_partial(t, k, BITS), be.eta_remainder(t, k, TOL, BITS)
    elif fn == "sech":
        partial, res = be.sech_partial(t, k, BITS), be.sech_remainder(t, k, TOL, BITS)
    else:
        partial, res = be.coth_partial(t, k, BITS), be.sigma_series(t, k, TOL, BITS)
    p, r, d = c.mpf(partial), c.mpf(res.value), _direct_hp(fn, t)
    residual = abs(p + r - d)
    allowance = c.mpf(res.tail_bound) + 8 * ulp(max(abs(p), abs(r), abs(d)), BITS)
    return residual, allowance


def _reconstruction_sweep(fn: str, orders) -> tuple[int, int, float]:
    bad, total, worst = 0, 0, 0.0
    for t in STANDARD:
        for k in orders:
            residual, allowance = _reconstruct(fn, t, k)
            total += 1
            bad += residual > allowance
            worst = max(worst, float(residual / allowance) if allowance else 0.0)
    return bad, total, worst


# ---------------------------------------------------------------------------


def test_criterion_01_recurrences():
    start = time.perf_counter()
    table = oracles.bernoulli_table(200)
    bad, total = 0, 0
    for scheme in ec.SCHEMES:
        for n in range(201):
            if ec.scheme_domain(scheme, n):
                total += 1
                bad += be.quad_recurrence(n, scheme) != table[n]
    bad += sum(be.bernoulli(n) != table[n] for n in range(201))
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 10
    report(1, "five recurrences equal the defining recurrence, n <= 200", ok, f"{total} exact comparisons, {bad} mismatches", elapsed)
    assert ok


def test_criterion_02_eta_reconstruction():
    start = time.perf_counter()
    bad, total, worst = _reconstruction_sweep("eta", range(1, 7))
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 5
    report(2, "2/(e^t+1) = partial + remainder, m <= 6", ok, f"{total} points, worst residual/allowance {worst:.2e}", elapsed)
    assert ok


def test_criterion_03_sech_reconstruction_and_theta():
    start = time.perf_counter()
    bad, total, worst = _reconstruction_sweep("sech", range(1, 7))
    theta_bad = sum(not 0 < be.theta_cap(t, N, BITS) < 1 for t in STANDARD for N in range(1, 7))
    elapsed = time.perf_counter() - start
    ok = bad == 0 and theta_bad == 0
    report(3, "sech t = partial + remainder, Theta in (0,1), N <= 6", ok,
           f"{total} points, worst ratio {worst:.2e}, {theta_bad} Theta violations", elapsed)
    assert ok


def test_criterion_04_coth_reconstruction_theta_and_nu():
    start = time.perf_counter()
    bad, total, worst = _reconstruction_sweep("coth", range(0, 7))
    theta_bad = sum(not 0 < be.theta_low(t, N, BITS) < 1 for t in STANDARD for N in range(0, 7))
    nu_bad = 0
    for t in STANDARD:
        for n in range(0, 7):
            a, b = be.nu_series(t, n, TOL, BITS), be.nu_from_coth(t, n, TOL, BITS)
            allow = a.tail_bound + b.tail_bound + 8 * ulp(max(abs(a.value), abs(b.value)), BITS)
            nu_bad += abs(a.value - b.value) > allow
    elapsed = time.perf_counter() - start
    ok = bad == 0 and theta_bad == 0 and nu_bad == 0
    report(4, "coth t = partial + remainder, theta in (0,1), nu_n via t/2", ok,
           f"{total} points, worst ratio {worst:.2e}, {theta_bad} theta / {nu_bad} nu violations", elapsed)
    assert ok


def _sign_gaps():
    """Every strict inequality, evaluated from exact Taylor partial sums and
    1024-bit closed forms; yields (label, value that must be > 0)."""
    c = oracles.ctx(4 * BITS)
    for t in STANDARD:
        tq = oracles.q(t, c)
        for k in range(0, 7):
            # Binet remainder sign, then the eta, sech and coth brackets
            yield "binet", (-1) ** k * (_direct_hp("binet", t) - oracles.q(oracles.binet_partial_oracle(t, k), c))
            yield "eta", (-1) ** (k + 1) * (_direct_hp("eta", t) - oracles.q(oracles.eta_partial_oracle(t, k), c))
            yield "sech", (-1) ** (k + 1) * (_direct_hp("sech", t) - oracles.q(oracles.sech_partial_oracle(t, k + 1), c))
            yield "coth", (-1) ** k * (_direct_hp("coth", t) - oracles.q(oracles.coth_partial_oracle(t, k), c))
            for fn in ("eta", "sech", "coth", "binet"):
                yield f"library {fn}", be.remainder_sign_gap(fn, t, k, BITS)
        eta_slope = [-(i + 1) * a for i, a in enumerate(oracles.taylor_eta(14)[1:])]
        for m in range(1, 6):
            poly = sum(eta_slope[i] * tq**i for i in range(2 * m - 1))
            d = 2 * c.exp(tq) / (c.exp(tq) + 1) ** 2
            yield "derivative", (-1) ** m * (d - poly)
            yield "library derivative", be.eta_derivative_gap(t, m, BITS)


def test_criterion_05_inequalities():
    start = time.perf_counter()
    total, bad, smallest = 0, 0, None
    for label, gap in _sign_gaps():
        total += 1
        bad += not gap > 0
        smallest = gap if smallest is None else min(smallest, gap)
    elapsed = time.perf_counter() - start
    ok = bad == 0
    report(5, "bracketing and derivative inequalities, strict", ok,
           f"{total} inequalities, {bad} violations, smallest gap {float(smallest):.3e}", elapsed)
    assert ok


def test_criterion_06_gamma_bounds():
    start = time.perf_counter()
    c = oracles.ctx(4 * BITS)
    bad, total = 0, 0
    for x in RATIO_POINTS:
        X = oracles.q(x, c)
        ratio = c.gamma(X + c.mpf(3) / 4) / c.gamma(X + c.mpf(1) / 4)
        for m in (1, 2, 3):
            b = be.ratio_bounds(x, m, BITS)
            total += 1
            bad += not c.mpf(b.lo) < ratio < c.mpf(b.hi)
    for n in range(1, 51):
        w = oracles.q(be.wallis_exact(n), c)
        for m in (1, 2, 3):
            b = be.wallis_bounds(n, m, BITS)
            total += 1
            bad += not c.mpf(b.lo) < w < c.mpf(b.hi)
    # exact Wallis ratios C(2n, n) / 4^n by a running product
    w = Fraction(1)
    for n in range(1, 10**4 + 1):
        w *= Fraction(2 * n - 1, 2 * n)
        b = be.chen_qi_bounds(n, BITS)
        wv = oracles.q(w, c)
        total += 1
        if n == 1:
            bad += not (c.mpf(b.lo) <= wv < c.mpf(b.hi))
        else:
            bad += not (c.mpf(b.lo) < wv < c.mpf(b.hi))
    assert w == Fraction(comb(2 * 10**4, 10**4), 4**10**4)
    lo1 = c.mpf(be.chen_qi_bounds(1, BITS).lo)
    eq_ulps = float(abs(lo1 - c.mpf(1) / 2) / ulp(c.mpf(1) / 2, BITS))
    elapsed = time.perf_counter() - start
    ok = bad == 0 and eq_ulps <= 4
    report(6, "ratio, Wallis and Chen-Qi bounds contain their oracles", ok,
           f"{total} containments, {bad} violations, n=1 lower bound off by {eq_ulps:g} ulp", elapsed)
    assert ok


def test_criterion_07_quadrature():
    c = oracles.ctx(4 * BITS)
    oracle = {"ln4pi": c.ln(4) - c.ln(c.pi), "lnpi3": c.ln(c.pi) - c.ln(3)}
    details, ok, total_time = [], True, 0.0
    for which, want in oracle.items():
        start = time.perf_counter()
        got = c.mpf(be.quad_log_const(which, 1e-8, BITS))
        elapsed = time.perf_counter() - start
        total_time += elapsed
        err = abs(got - want)
        ok = ok and err <= 1e-8 and elapsed < 5
        details.append(f"{which} error {float(err):.2e} in {elapsed:.2f} s")
    report(7, "integral representations of ln(4/pi) and ln(pi/3)", ok, ", ".join(details), total_time)
    assert ok


def test_criterion_08_generalized_euler_constants():
    start = time.perf_counter()
    c = oracles.ctx(4 * BITS)
    g1 = c.mpf(be.gamma_gen_euler(-1, 1e-6, BITS))
    err1 = abs(g1 - (c.ln(4) - c.ln(c.pi)))
    g0 = c.mpf(be.gamma_gen_euler(0, 1e-6, BITS))
    want0 = 1 - c.ln(2)
    ulps0 = float(abs(g0 - want0) / ulp(want0, BITS))
    elapsed = time.perf_counter() - start
    ok = err1 <= 1e-6 and ulps0 <= 1
    report(8, "gamma(-1) = ln(4/pi), gamma(0) = 1 - ln 2", ok,
           f"gamma(-1) error {float(err1):.2e}, gamma(0) off by {ulps0:g} ulp", elapsed)
    assert ok


def test_criterion_09_complete_monotonicity_evidence():
    start = time.perf_counter()
    total, fails, inconclusive = 0, 0, 0
    for fn in ("R", "F", "V"):
        for m in range(0, 5):
            rep = be.cm_finite_difference_check(fn, list(CM_POINTS), m, 4, Fraction(1, 64), BITS)
            for p in rep.points:
                total += 1
                fails += p.status == "fail"
                inconclusive += p.status == "inconclusive"
    elapsed = time.perf_counter() - start
    ok = fails == 0
    report(9, "finite differences of R_m, F_m, V_m, orders 0-4", ok,
           f"{total} differences, {fails} below floor, {inconclusive} inconclusive", elapsed)
    assert ok


def test_criterion_10_integral_vs_series():
    start = time.perf_counter()
    c = oracles.ctx(4 * BITS)
    tol = 1e-30
    rows = []
    for t, m in ((Fraction(1, 2), 1), (Fraction(1), 2), (Fraction(5), 3)):
        s = be.eta_remainder(t, m, tol, BITS)
        q = be.eta_remainder_integral(t, m, tol, BITS)
        rows.append((abs(c.mpf(s.value) - c.mpf(q)), c.mpf(s.tail_bound) + tol + 8 * ulp(q, BITS)))
    for t, n in ((Fraction(1, 2), 1), (Fraction(1), 2), (Fraction(3), 2)):
        s = be.nu_series(t, n, tol, BITS)
        for form in ("even", "odd"):
            q = be.nu_integral(t, n, tol, BITS, form=form)
            rows.append((abs(c.mpf(s.value) - c.mpf(q)), c.mpf(s.tail_bound) + tol + 8 * ulp(q, BITS)))
    bad = sum(d > a for d, a in rows)
    worst = max(float(d) for d, _ in rows)
    elapsed = time.perf_counter() - start
    ok = bad == 0
    report(10, "integral and series forms of r_m and nu_n agree", ok,
           f"{len(rows)} comparisons, largest difference {worst:.2e}", elapsed)
    assert ok


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
