"""How large must a catalyst be, and which qubit populations can work at all?

For an incomparable pair the slope geometry of the source curve yields a
dimension bound k* (no catalyst with k <= k* levels can work) and, for qubit
catalysts, a necessary population window.  A deterministic grid search then
shows which qubits actually do the job.
"""

import numpy as np

from thermocone import (
    EnergySpectrum,
    dim_bound,
    qubit_window,
    search_qubit_catalyst,
)

spec = EnergySpectrum((0.0, 1.0, 2.0), 0.2)
p = (0.42, 0.51, 0.07)
q = (0.52, 0.13, 0.35)

db = dim_bound(p, q, spec)
print(f"a = {db.a:.4f}, b = {db.b:.4f}  ->  k* = {db.k_star:.4f}")
print("curves cross on the interval", tuple(round(x, 4) for x in db.L_interval))
print("=> any working catalyst needs more than", db.k_star, "levels (a qubit qualifies)")

# necessary windows for r = (1 - t, t) with a trivial Hamiltonian
low, high = qubit_window(p, q, spec, gibbs_r=0.5)
print(f"\nqubit windows: [{low.lo:.4f}, {low.hi:.4f}] and [{high.lo:.4f}, {high.hi:.4f}]")

hits = search_qubit_catalyst(p, q, spec, gibbs_r=0.5, grid_n=200)
print(f"grid search: {len(hits)} working populations, from {min(hits)} to {max(hits)}")
print("0.45 among them:", 0.45 in hits)
inside = all(low.contains(t, 1e-9) or high.contains(t, 1e-9) for t in hits)
print("all hits inside the windows:", inside)

# a biased catalyst Hamiltonian shifts the admissible windows
low_b, high_b = qubit_window(p, q, spec, gibbs_r=0.35)
print(f"\nwith excited Gibbs weight 0.35: [{low_b.lo:.4f}, {low_b.hi:.4f}]"
      f" and [{high_b.lo:.4f}, {high_b.hi:.4f}]")
hits_b = search_qubit_catalyst(p, q, spec, gibbs_r=0.35, grid_n=200)
print("working populations found:", np.round(hits_b, 3))
