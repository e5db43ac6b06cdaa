"""Optimal cooling of a three-level system, and when a catalyst provably helps.

The best non-catalytic cooling maps the state to an extreme point of its
future cone; with a strict catalyst the catalysable future's extreme points
bound what is achievable.  For initially-thermal states there are critical hot
temperatures separating guaranteed advantage from a provable no-go.
"""

import numpy as np

from thermocone import (
    EnergySpectrum,
    NoRootError,
    critical_hot_betas,
    heat_exchange,
    m_index,
    optimal_cooling,
)

spec = EnergySpectrum((0.0, 1.0, 2.0), 0.2)
p = (0.1, 0.2, 0.7)

report = optimal_cooling(p, spec, catalytic=True)
print("initial state:            ", p)
print("best reachable target:    ", np.round(report.target.probs, 4), f" Q_c = {report.q_c:.4f}")
print("catalytic bound target:   ", np.round(report.target_catalytic.probs, 4),
      f" Q_c = {report.q_c_catalytic:.4f}")
print("extra heat extracted (bound):", round(report.q_c_catalytic - report.q_c, 4))

# sanity: the heat values recompute from the targets
assert abs(heat_exchange(p, report.target, spec) - report.q_c) < 1e-12

# an initially-thermal state on an equidistant ladder
d, beta = 3, 2.0
cold = EnergySpectrum(tuple(float(n) for n in range(d)), beta)
hot = EnergySpectrum(cold.energies, beta / 2)
print(f"\nequidistant ladder d={d}, bath beta={beta}")
print("sandwich index m_1:", m_index(1, cold, hot))
down, up = critical_hot_betas(d, beta)
print(f"advantage guaranteed for beta_h <= {down:.4f}")
print(f"no-go inequality holds for beta_h >= {up:.4f}")

# hotter baths leave no certifiable advantage at all
try:
    critical_hot_betas(3, 0.2)
except NoRootError as exc:
    print("beta=0.2:", exc)

# the small-beta closed forms of the two boundaries
down_lin, up_lin = critical_hot_betas(3, 0.01, linearised=True)
print(f"linearised closed forms at beta=0.01: {down_lin:.4f}, {up_lin:.4f}")
