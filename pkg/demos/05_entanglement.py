"""Entanglement generation for two thermal qubits, with and without a catalyst.

Energy-preserving unitaries can entangle a two-qubit population iff
4 p1 p4 < (p2 - p3)^2.  Thermal operations extend the reach to the whole
future cone, a strict catalyst to the catalysable future; the sets of states
that remain safe shrink accordingly.
"""

import numpy as np

from thermocone import (
    TwoQubitConfig,
    in_CN,
    in_TN,
    p_star,
    unitary_entanglable,
    volume_ratio_CN_TN,
)

cfg = TwoQubitConfig(beta=0.5)
spec = cfg.spectrum()

probes = {
    "thermal state": spec.gibbs,
    "middle-heavy": (0.25, 0.5, 0.05, 0.2),
    "balanced": (0.3, 0.35, 0.15, 0.2),
}
for label, state in probes.items():
    print(
        f"{label:14s} unitary: {unitary_entanglable(state)!s:5s}"
        f" thermal-safe: {in_TN(state, cfg)!s:5s}"
        f" catalytic-safe: {in_CN(state, cfg, samples=4000, seed=5)}"
    )

# the distinguished partially thermalised state: its whole future stays safe
ps = p_star(cfg.beta)
print("\ndistinguished state:", np.round(ps.probs, 4))
print("thermal-safe:", in_TN(ps, cfg), " catalytic-safe:", in_CN(ps, cfg, samples=4000, seed=6))

# volumes of the safe sets as the bath cools down
print("\nbeta    V(thermal-safe)  V(catalytic-safe)  ratio")
for beta in (0.0, 0.25, 0.5, 1.0):
    v_tn, v_cn, ratio = volume_ratio_CN_TN(beta, samples=50_000, seed=7)
    print(f"{beta:4.2f}    {v_tn.value:.4f}           {v_cn.value:.4f}             {ratio:.3f}")
print("\nthe ratio drops with beta: catalysts help entanglement generation more when it is colder")

# consistency report for the conjectured decomposition of the catalytic-safe
# set: the future of the distinguished state should lie entirely inside it
# (reported, not asserted)
rng = np.random.default_rng(8)
spec = cfg.spectrum()
from thermocone import future_cone_vertices  # noqa: E402

verts = np.asarray([v.probs for _, v in future_cone_vertices(ps, spec)])
agree = 0
trials = 200
for _ in range(trials):
    w = rng.dirichlet(np.ones(len(verts)))
    sample = w @ verts
    agree += in_CN(sample, cfg, samples=0)
print(f"\ndecomposition consistency: {100.0 * agree / trials:.1f}% of sampled points"
      " in the distinguished future are catalytic-safe")
