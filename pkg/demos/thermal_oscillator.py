"""Thermal oscillator states: where the fixed hbar/2 floor stops helping.

Tabulates the equilibrium covariance against temperature.  The uncertainty
product grows like coth^2 while the commutator floor stays put, so the gap
widens without limit; the purity-aware machinery (see purity_frontier.py)
is what still says something useful up there.

Run:
    python3 demos/thermal_oscillator.py
"""

import math

from urbounds import make_thermal, purity, purity_bound

print("harmonic oscillator in equilibrium, omega = 1, hbar = kB = 1")
print(f"{'T':>6} {'sig_xx*sig_pp':>14} {'/ (hbar^2/4)':>13} {'purity':>10} {'phi floor':>11}")
for temp in (0.0, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0):
    state = make_thermal(omega=1.0, T=temp)
    product = state.cov[0, 0] * state.cov[1, 1]
    mu = purity(state)
    floor = purity_bound(mu)
    print(f"{temp:6.2f} {product:14.6f} {product / 0.25:13.1f} {mu:10.6f} {floor:11.6f}")

state = make_thermal(omega=1.0, T=1.0)
mu = purity(state)
print()
print("T = 1 sanity:")
print(f"  product  = {state.cov[0, 0] * state.cov[1, 1]:.10f} "
      f"(closed form coth(1/2)^2/4 = {(0.5 / math.tanh(0.5)) ** 2:.10f})")
print(f"  purity   = {mu:.10f} (tanh(1/2) = {math.tanh(0.5):.10f})")
print(f"  identity: sqrt(det sigma) * 2 mu / hbar = "
      f"{math.sqrt(state.cov[0, 0] * state.cov[1, 1]) * 2 * mu:.12f}")
