"""Thermomajorisation basics: Gibbs states, beta-ordering and curve comparison.

A three-level system exchanging energy with a bath can reach exactly the
states whose thermomajorisation curve lies below its own.  This script builds
the machinery step by step for one worked state.
"""

import numpy as np

from thermocone import (
    EnergySpectrum,
    beta_order,
    compare,
    curve_eval,
    gibbs_vector,
    tensor,
    thermo_majorizes,
    tm_curve,
)

spec = EnergySpectrum(energies=(0.0, 1.0, 2.0), beta=0.2)
print("Gibbs state:", np.round(gibbs_vector(spec).probs, 4))

# beta-ordering sorts the population-to-Gibbs ratios non-increasingly
p = (0.42, 0.51, 0.07)
sv = beta_order(p, spec)
print("slopes:", np.round(sv.slopes, 4), " level order:", sv.order + 1)

# the curve is the cumulative (Gibbs, population) path in that order
curve = tm_curve(p, spec)
print("elbows:")
for x, y in zip(curve.xs, curve.ys):
    print(f"  ({x:.4f}, {y:.4f})")
print("height halfway:", round(curve_eval(curve, 0.5), 4))

# pointwise curve dominance decides reachability
q = (0.52, 0.43, 0.05)
print("\np -> q possible:", thermo_majorizes(p, q, spec))
print("q -> p possible:", thermo_majorizes(q, p, spec))
print("relation:", compare(p, q, spec).value)

# composite systems multiply populations and add energies
r = (0.55, 0.45)
joint, joint_spec = tensor(p, spec, r, EnergySpectrum((0.0, 0.0), 0.2))
print("\njoint state:", np.round(joint.probs, 4))
print("joint energies:", joint_spec.energies)
