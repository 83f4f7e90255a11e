"""
A walk through the certified remainders
=======================================

Truncate the expansion of 2/(e^t+1) after a few odd powers, then measure
what was thrown away. The remainder comes back with a rigorous tail bound,
so partial sum plus remainder must land on the closed form.
"""

from fractions import Fraction

import bernoulli_euler as be

###############################################################################
# Exact numbers first. The coefficients are rationals, never floats.

for n in (2, 4, 12, 30):
    print(f"B_{n} = {be.bernoulli(n)}")
print("E_0..E_10:", [be.euler_number(n) for n in range(0, 11, 2)])

###############################################################################
# Partial sum, remainder, closed form. The residual may exceed the tail
# bound by a few units in the last place of 256-bit rounding.

t = Fraction(3, 2)
for m in (1, 3, 6):
    partial = be.eta_partial(t, m)
    rem = be.eta_remainder(t, m, tol=1e-40)
    direct = be.direct_eval("eta", t)
    print(f"m={m}: partial={float(partial):+.12f} remainder={float(rem.value):+.3e} "
          f"residual={float(abs(partial + rem.value - direct)):.1e} tail bound={float(rem.tail_bound):.1e}")

###############################################################################
# Consecutive partial sums bracket the function, and the bracket shrinks
# until the series stops converging (|t| < pi for these expansions).

for m in range(0, 5):
    enc = be.enclosure("coth", 1, m)
    print(f"coth(1) in [{float(enc.lo):.10f}, {float(enc.hi):.10f}]  width {float(enc.width):.2e}")

###############################################################################
# The mean-value factors stay strictly inside (0, 1).

for t in (Fraction(1, 10), 1, 10):
    print(f"t={t}: Theta={float(be.theta_cap(t, 3)):.6f} theta={float(be.theta_low(t, 3)):.6f}")
