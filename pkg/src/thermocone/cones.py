"""Thermal cones: future/past/incomparable classification and extreme points."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .core import (
    Dist,
    EnergySpectrum,
    MAX_ENUM_DIM,
    Relation,
    _matched_gibbs,
    _probs,
    compare,
    tm_curve,
)

__all__ = ["ConeVertices", "future_cone_vertices", "classify"]


@dataclass(frozen=True, eq=False)
class ConeVertices:
    """Extreme points of a future thermal cone keyed by target level order.

    Orders are 0-based tuples listing levels by rank; only the
    lexicographically first order of each distinct vertex is kept.
    """

    vertices: dict[tuple[int, ...], Dist]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices.items())

    def distinct(self) -> list[Dist]:
        return list(self.vertices.values())


def _dedup_key(v: np.ndarray) -> tuple:
    return tuple(np.round(v, 10))


def vertex_for_order(p, spec: EnergySpectrum, order) -> Dist:
    """Future-cone extreme point whose beta-order is the given level order."""
    probs = _probs(p)
    gamma = _matched_gibbs(spec, probs.size)
    curve = tm_curve(probs, spec)
    idx = np.asarray(order, dtype=int)
    xs = np.cumsum(gamma[idx])
    xs[-1] = 1.0
    heights = np.interp(xs, curve.xs, curve.ys)
    heights[-1] = 1.0
    diffs = np.diff(np.concatenate(([0.0], heights)))
    out = np.empty_like(probs)
    out[idx] = np.maximum(diffs, 0.0)
    return Dist(out)


def future_cone_vertices(p, spec: EnergySpectrum) -> ConeVertices:
    """All extreme points of the future thermal cone of `p`.

    Enumerates every level order (d <= 8), reading the vertex populations off
    the curve of `p` at the order's Gibbs subsums; identical vertices are
    merged (L-inf tolerance 1e-10) keeping the lexicographically first order.
    """
    probs = _probs(p)
    d = probs.size
    if d > MAX_ENUM_DIM:
        raise ValueError(f"dimension {d} above enumeration cap {MAX_ENUM_DIM}")
    gamma = _matched_gibbs(spec, d)
    curve = tm_curve(probs, spec)
    out: dict[tuple[int, ...], Dist] = {}
    seen: set[tuple] = set()
    for pi in permutations(range(d)):
        idx = np.asarray(pi, dtype=int)
        xs = np.cumsum(gamma[idx])
        xs[-1] = 1.0
        heights = np.interp(xs, curve.xs, curve.ys)
        heights[-1] = 1.0
        diffs = np.diff(np.concatenate(([0.0], heights)))
        v = np.empty(d)
        v[idx] = np.maximum(diffs, 0.0)
        key = _dedup_key(v)
        if key not in seen:
            seen.add(key)
            out[pi] = Dist(v)
    return ConeVertices(out)


def classify(p, q, spec: EnergySpectrum) -> Relation:
    """Relation of `q` to the cones of `p` (MAJORIZES means q is in p's future)."""
    return compare(p, q, spec)
