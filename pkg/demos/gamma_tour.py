"""
Gamma-function bounds in practice
=================================

The quarter-shift ratio Gamma(x+3/4)/Gamma(x+1/4) and the Wallis ratio
(2n-1)!!/(2n)!! both sit between truncations of one Euler-number series.
"""

from fractions import Fraction

import bernoulli_euler as be

###############################################################################
# Bounds tighten as more terms are used.

x = 2
exact = be.ratio_quarters_direct(x)
for m in (1, 2, 3):
    b = be.ratio_bounds(x, m)
    print(f"m={m}: {float(b.lo):.15f} < {float(exact):.15f} < {float(b.hi):.15f}")

###############################################################################
# The Chen-Qi bracket is sharp at n = 1 and stays valid as n grows.

for n in (1, 10, 1000):
    w = be.wallis_exact(n)
    b = be.chen_qi_bounds(n)
    print(f"n={n}: lower {float(b.lo):.12f}  W_n {float(w):.12f}  upper {float(b.hi):.12f}")

###############################################################################
# Finite differences give numerical evidence of complete monotonicity.

report = be.cm_finite_difference_check("V", [Fraction(1, 2), 1, 2, 5], m=2, max_order=4)
print(f"V_2: {report.status}, smallest signed difference {float(report.worst_margin):.3e}")

###############################################################################
# Two constants from integral representations, checked against logarithms.

print("ln(4/pi) by quadrature:", be.quad_log_const("ln4pi", 1e-25))
print("gamma(-1) series      :", be.gamma_gen_euler(-1, 1e-8))
