"""Cross-checking curve comparison through the embedding into plain majorisation.

Approximating the Gibbs weights by D_i/D and spreading level i over D_i equal
blocks turns thermomajorisation into ordinary majorisation of D-dimensional
vectors.  This gives an independent verdict, trustworthy whenever the curve
gaps clear the approximation margin.
"""

import numpy as np

from thermocone import EnergySpectrum, embed, oracle_report, rationalize

spec = EnergySpectrum((0.0, 1.0, 2.0), 0.2)

rg = rationalize(spec.gibbs, max_denominator=500)
print("Gibbs weights:", np.round(spec.gibbs, 5))
print(f"rational approximation: {rg.numerators} / {rg.denominator}  (error {rg.delta:.2e})")

hat = embed((0.42, 0.51, 0.07), rg)
print("embedded dimension:", len(hat), " first blocks:", np.round(hat.probs[:5], 5))

pairs = [
    ((0.42, 0.51, 0.07), (0.52, 0.43, 0.05)),
    ((0.42, 0.51, 0.07), spec.gibbs),
    ((0.8, 0.15, 0.05), (0.5, 0.3, 0.2)),
]
for p, q in pairs:
    rep = oracle_report(p, q, spec, max_denominator=500)
    verdictp = "agrees" if rep.thermo == rep.embedded else "DISAGREES"
    print(
        f"\ncurves: {rep.thermo}  embedded: {rep.embedded}  ({verdictp})"
        f"\n  margin {rep.margin:.2e} vs threshold {rep.threshold:.2e}"
        f"  -> {'inconclusive near tie' if rep.inconclusive else 'trustworthy'}"
    )
