"""Entanglement generation for two thermal qubits, with and without a catalyst.

Two identical qubits with level spacing one form a four-level system with a
degenerate middle pair; energy-preserving unitaries act freely inside that
subspace, so a state can be entangled unitarily iff 4*p1*p4 < (p2 - p3)^2.
Reachability under thermal operations reduces the question to a single future
extreme point; adding a strict catalyst extends it to the catalysable future.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from ._batch import batch_curves, eval_rows_at, fixed_dominates_rows
from .catalysis import c_plus_vertices, tangent_bound_curve
from .cones import future_cone_vertices, vertex_for_order
from .core import Dist, EnergySpectrum, EPS_CMP, _probs
from .volume import DEFAULT_SEED, VolumeEstimate, _chunk_rng, _estimate, sample_simplex

__all__ = [
    "TwoQubitConfig",
    "unitary_entanglable",
    "in_TN",
    "in_CN",
    "p_star",
    "p_star_star",
    "volume_ratio_CN_TN",
]

_CHUNK = 1 << 14
# target level order whose future extreme point decides entanglability (0-based)
_DECISIVE_ORDER = (1, 0, 2, 3)


@dataclass(frozen=True)
class TwoQubitConfig:
    """Two non-interacting qubits with unit level spacing at inverse temperature beta."""

    beta: float

    @property
    def energies(self) -> tuple[float, ...]:
        return (0.0, 1.0, 1.0, 2.0)

    def spectrum(self) -> EnergySpectrum:
        return EnergySpectrum(self.energies, self.beta)


def unitary_entanglable(p) -> bool:
    """Can energy-preserving unitaries alone entangle the state?"""
    probs = _probs(p)
    if probs.size != 4:
        raise ValueError("two-qubit populations have four entries")
    value = 4.0 * probs[0] * probs[3] - (probs[1] - probs[2]) ** 2
    return bool(value < -EPS_CMP)


def _canonical(probs: np.ndarray) -> np.ndarray:
    # the degenerate middle levels are exchangeable; order them descending
    if probs[2] > probs[1]:
        out = probs.copy()
        out[1], out[2] = probs[2], probs[1]
        return out
    return probs


def in_TN(p, cfg: TwoQubitConfig) -> bool:
    """True iff no thermal operation can make the state entanglable.

    Decided by the single future extreme point with the decisive level order,
    after canonicalising the degenerate middle pair.
    """
    probs = _canonical(_probs(p))
    vertex = vertex_for_order(probs, cfg.spectrum(), _DECISIVE_ORDER)
    return not unitary_entanglable(vertex)


def _tn_mask(samples: np.ndarray, gamma: np.ndarray) -> np.ndarray:
    swap = samples[:, 2] > samples[:, 1]
    canon = samples.copy()
    canon[swap, 1], canon[swap, 2] = samples[swap, 2], samples[swap, 1]
    xs, ys = batch_curves(canon, gamma)
    g2, g1, g3 = gamma[1], gamma[0], gamma[2]
    f1 = eval_rows_at(xs, ys, float(g2))
    f2 = eval_rows_at(xs, ys, float(g2 + g1))
    f3 = eval_rows_at(xs, ys, float(g2 + g1 + g3))
    w1 = f2 - f1
    w2 = f1
    w3 = f3 - f2
    w4 = 1.0 - f3
    return 4.0 * w1 * w4 - (w2 - w3) ** 2 >= -EPS_CMP


def _cn_mask(samples: np.ndarray, gamma: np.ndarray) -> np.ndarray:
    """Vertex test: every extreme point of the catalysable future must stay
    thermally non-entanglable.  Exact whenever the non-entanglable set is
    convex (it is at beta=0, and numerically for beta > 0)."""
    ratios = samples / gamma
    s1 = ratios.max(axis=1)
    sd = ratios.min(axis=1)
    n = samples.shape[0]
    seen: set[tuple[float, ...]] = set()
    out = np.ones(n, dtype=bool)
    for pi in permutations(range(4)):
        key = tuple(gamma[list(pi)])
        if key in seen:  # degenerate middle levels give duplicate knot sets
            continue
        seen.add(key)
        knots = np.cumsum(gamma[list(pi)])[:3]
        heights = []
        for x in knots:
            heights.append(np.minimum(np.minimum(s1 * x, 1.0 - sd * (1.0 - x)), 1.0))
        v = np.empty((n, 4))
        v[:, pi[0]] = heights[0]
        v[:, pi[1]] = heights[1] - heights[0]
        v[:, pi[2]] = heights[2] - heights[1]
        v[:, pi[3]] = 1.0 - heights[2]
        out &= _tn_mask(v, gamma)
        if not out.any():
            break
    return out


def in_CN(p, cfg: TwoQubitConfig, samples: int = 20_000, seed: int = DEFAULT_SEED) -> bool:
    """True iff not even a strict catalyst can open a path to entanglement.

    One-sided numeric classifier (sound when False): every extreme point of
    the future and catalysable-future regions is screened, then rejection
    samples from the joint region are re-screened through `in_TN`.
    """
    probs = _probs(p)
    spec = cfg.spectrum()
    for vertex in future_cone_vertices(probs, spec).distinct():
        if not in_TN(vertex, cfg):
            return False
    for vertex in c_plus_vertices(probs, spec).distinct():
        if not in_TN(vertex, cfg):
            return False
    if samples <= 0:
        return True
    gamma = spec.gibbs
    t1 = tangent_bound_curve(probs, spec, 1)
    td = tangent_bound_curve(probs, spec, 4)
    done = 0
    chunk = 0
    while done < samples:
        count = min(_CHUNK, samples - done)
        draws = sample_simplex(4, count, _chunk_rng(seed, chunk))
        xs, ys = batch_curves(draws, gamma)
        inside = fixed_dominates_rows(t1, xs, ys) & fixed_dominates_rows(td, xs, ys)
        if inside.any() and not _tn_mask(draws[inside], gamma).all():
            return False
        done += count
        chunk += 1
    return True


def p_star(beta: float) -> Dist:
    """Partially thermalised state whose whole future stays non-entanglable."""
    if beta < 0:
        raise ValueError("beta must be >= 0")
    z = 4.0 + 2.0 * math.cosh(beta)
    return Dist(np.array([math.exp(beta), 1.0, 1.0, 2.0 + math.exp(-beta)]) / z)


def p_star_star(beta: float) -> Dist:
    """Distinguished future extreme point of `p_star` (decisive level order)."""
    if beta < 0:
        raise ValueError("beta must be >= 0")
    z = 4.0 + 2.0 * math.cosh(beta)
    return Dist(np.array([math.exp(beta), 3.0, 1.0, math.exp(-beta)]) / z)


def volume_ratio_CN_TN(
    beta: float,
    samples: int = 100_000,
    seed: int = DEFAULT_SEED,
) -> tuple[VolumeEstimate, VolumeEstimate, float]:
    """Relative volumes of the catalytically and thermally non-entanglable sets.

    Classifies uniform simplex samples with the vertex test; returns
    (V_TN, V_CN, V_CN/V_TN).  The ratio is nan when no sample lands in the
    thermally non-entanglable set.
    """
    if samples < 10_000:
        raise ValueError("need at least 10000 samples")
    gamma = TwoQubitConfig(beta).spectrum().gibbs
    tn_hits = 0
    cn_hits = 0
    done = 0
    chunk = 0
    while done < samples:
        count = min(_CHUNK, samples - done)
        draws = sample_simplex(4, count, _chunk_rng(seed, chunk))
        tn = _tn_mask(draws, gamma)
        cn = _cn_mask(draws, gamma)
        tn_hits += int(tn.sum())
        cn_hits += int((cn & tn).sum())
        done += count
        chunk += 1
    v_tn = _estimate(tn_hits, samples, seed)
    v_cn = _estimate(cn_hits, samples, seed)
    ratio = v_cn.value / v_tn.value if v_tn.value > 0 else math.nan
    return v_tn, v_cn, ratio
