"""Catalysable regions: what a strict catalyst could unlock for a 3-level state.

The pair below is incomparable, yet a two-level catalyst in (0.55, 0.45) with
a trivial Hamiltonian makes the transformation possible.  The target lies in
the catalysable future carved out by the tangent-vector bound curves.
"""

import numpy as np

from thermocone import (
    EnergySpectrum,
    c_plus_vertices,
    catalysable_future_member,
    catalysable_past_member,
    catalytic_condition,
    compare,
    future_cone_vertices,
    project_simplex,
    tangent_vector,
    verify_catalyst,
)

spec = EnergySpectrum((0.0, 1.0, 2.0), 0.2)
p = (0.42, 0.51, 0.07)
q = (0.52, 0.13, 0.35)

print("relation:", compare(p, q, spec).value)
print("necessary slope condition:", catalytic_condition(p, q, spec))

# a concrete catalyst settles the question constructively
r = (0.55, 0.45)
ok = verify_catalyst(p, q, spec, r, EnergySpectrum((0.0, 0.0), 0.2))
print(f"catalyst {r} works:", ok)

# the target sits inside the catalysable future region
print("q in catalysable future of p:", catalysable_future_member(q, p, spec))
print("q in catalysable past of p:  ", catalysable_past_member(q, p, spec))

# tangent vectors generate the bounding regions; they may leave the simplex
tv = tangent_vector(p, spec, n=1, pi=(0, 1, 2))
print("\nfirst-rank tangent entries:", np.round(tv.entries.entries, 4))
print("projected back onto the simplex:", np.round(project_simplex(tv, spec).probs, 4))

# extreme points: the catalysable future needs far fewer than the plain future
fut = future_cone_vertices(p, spec)
cat = c_plus_vertices(p, spec)
print(f"\nfuture cone: {len(fut)} extreme points; joint catalysable future: {len(cat)}")
for pi, v in cat:
    print("  order", tuple(i + 1 for i in pi), "->", np.round(v.probs, 4))
