"""Optimal heat extraction under thermal operations, with and without a catalyst.

Heat is counted from the system's side: negative values mean energy left the
system (cooling).  The non-catalytic optimum is attained at an extreme point
of the future thermal cone; the catalytic figure is a bound obtained from the
extreme points of the catalysable future (membership there does not guarantee
a catalyst exists, so the value bounds what any strict catalyst could do).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .catalysis import c_plus_vertices
from .cones import future_cone_vertices
from .core import Dist, EnergySpectrum, _matched_gibbs, _probs

__all__ = [
    "NoRootError",
    "CoolingReport",
    "heat_exchange",
    "optimal_cooling",
    "m_index",
    "critical_hot_betas",
]

_BISECT_TOL = 1e-8


class NoRootError(ValueError):
    """The requested inequality boundary never binds on (0, beta)."""


@dataclass(frozen=True, eq=False)
class CoolingReport:
    """Optimal heat exchange and targets; catalytic fields are bounds.

    `q_c_catalytic` is None unless the catalytic bound was requested; when
    present it satisfies q_c_catalytic <= q_c.
    """

    q_c: float
    target: Dist
    order: tuple[int, ...]
    q_c_catalytic: float | None = None
    target_catalytic: Dist | None = None
    order_catalytic: tuple[int, ...] | None = None


def heat_exchange(p, q, spec: EnergySpectrum) -> float:
    """Energy difference sum_i E_i (q_i - p_i) between final and initial state."""
    a = _probs(p)
    b = _probs(q)
    if a.size != b.size or a.size != spec.d:
        raise ValueError("dimension mismatch")
    e = np.asarray(spec.energies)
    return float(e @ (b - a))


def _best(candidates, p, spec) -> tuple[float, Dist, tuple[int, ...]]:
    best_q = None
    best_heat = math.inf
    best_pi = None
    for pi, vertex in candidates:
        heat = heat_exchange(p, vertex, spec)
        if heat < best_heat - 1e-12:  # first order in lexicographic scan wins ties
            best_heat, best_q, best_pi = heat, vertex, pi
    return best_heat, best_q, best_pi


def optimal_cooling(p, spec: EnergySpectrum, catalytic: bool = False) -> CoolingReport:
    """Minimise the heat exchange over the reachable extreme points.

    Ties between orders are broken lexicographically, so reports are
    deterministic.
    """
    probs = _probs(p)
    _matched_gibbs(spec, probs.size)
    q_c, target, order = _best(future_cone_vertices(probs, spec), probs, spec)
    if not catalytic:
        return CoolingReport(q_c=q_c, target=target, order=order)
    cat_candidates = list(future_cone_vertices(probs, spec)) + list(c_plus_vertices(probs, spec))
    q_cc, target_c, order_c = _best(cat_candidates, probs, spec)
    return CoolingReport(
        q_c=q_c,
        target=target,
        order=order,
        q_c_catalytic=q_cc,
        target_catalytic=target_c,
        order_catalytic=order_c,
    )


def _check_equidistant(spec: EnergySpectrum) -> None:
    e = np.asarray(spec.energies)
    if e.size < 2 or np.any(np.abs(np.diff(e) - (e[1] - e[0])) > 1e-9) or e[1] <= e[0]:
        raise ValueError("an ascending equidistant spectrum is required")


def m_index(j: int, spec_cold: EnergySpectrum, spec_hot: EnergySpectrum) -> int:
    """Smallest prefix length m of reversed Gibbs weights covering the top-j sum.

    Returns m with  sum_{i<=m} gamma_{d-i+1} <= sum_{i<=j} gamma_i
    <= sum_{i<=m+1} gamma_{d-i+1}.
    """
    _check_equidistant(spec_cold)
    _check_equidistant(spec_hot)
    if spec_hot.beta > spec_cold.beta:
        raise ValueError("the initial state must be hotter than the bath (beta_h <= beta)")
    d = spec_cold.d
    if not 0 <= j <= d:
        raise ValueError(f"j outside 0..{d}")
    gamma = spec_cold.gibbs
    top = float(gamma[:j].sum())
    rev = np.concatenate(([0.0], np.cumsum(gamma[::-1])))
    for m in range(d + 1):
        lower = rev[m]
        upper = rev[m + 1] if m + 1 <= d else math.inf
        if lower <= top + 1e-12 <= upper + 1e-12:
            return m
    raise RuntimeError("no sandwiching index found")  # unreachable: rev spans [0, 1]


def _geometric_sum(m: int, x: float) -> float:
    # sum_{n=0}^{m-1} exp(-n x), continuous in x with the x -> 0 limit filled in
    if m <= 0:
        return 0.0
    if x == 0.0:
        return float(m)
    return (1.0 - math.exp(-m * x)) / (1.0 - math.exp(-x))


def _advantage_margin(d: int, beta: float, m: int, beta_h: float) -> float:
    """Positive where the guarantee inequality holds."""
    z = _geometric_sum(d, beta)
    return math.exp((beta - beta_h) * (d - 1)) - z * _geometric_sum(m + 1, beta_h)


def _no_go_margin(d: int, beta: float, m: int, beta_h: float) -> float:
    """Positive where the no-go inequality holds."""
    z = _geometric_sum(d, beta)
    return z * _geometric_sum(m, beta_h) - math.exp((beta - beta_h) * (d - 1))


def _bisect_root(fn, lo: float, hi: float) -> float:
    flo = fn(lo)
    while hi - lo > _BISECT_TOL:
        mid = 0.5 * (lo + hi)
        if (fn(mid) > 0.0) == (flo > 0.0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _boundary(fn, beta: float, name: str) -> float:
    grid = np.linspace(beta * 1e-9, beta * (1.0 - 1e-9), 512)
    vals = np.array([fn(x) for x in grid])
    signs = vals > 0.0
    flips = np.nonzero(signs[1:] != signs[:-1])[0]
    if flips.size == 0:
        held = "everywhere" if signs[0] else "nowhere"
        raise NoRootError(f"the {name} inequality binds {held} on (0, beta)")
    k = flips[0]
    return _bisect_root(fn, float(grid[k]), float(grid[k + 1]))


def critical_hot_betas(
    d: int,
    beta: float,
    linearised: bool = False,
    j: int = 1,
) -> tuple[float, float]:
    """Critical hot inverse temperatures for catalytic cooling of a thermal state.

    The system starts thermal at beta_h < beta on an equidistant spectrum.
    Below the first value the catalytic ground-population bound provably
    exceeds the non-catalytic optimum; above the second the no-go inequality
    holds.  With `linearised` the small-beta closed forms are returned instead
    of bisection roots.  `j` selects which population prefix the sandwiching
    index is computed for (1 = ground state).
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    if beta <= 0.0:
        raise ValueError("beta must be positive")
    spec_cold = EnergySpectrum(tuple(float(n) for n in range(d)), beta)
    spec_hot = EnergySpectrum(spec_cold.energies, beta / 2.0)
    m = m_index(j, spec_cold, spec_hot)
    if linearised:
        down = (d * (3.0 * beta * (d - 1) - 2.0) * (m + 1) + 2.0) / (2.0 * d - m - 2.0)
        up = (d * (3.0 * beta * (d - 1) - 2.0) * m + 2.0) / (2.0 * d - m - 1.0)
        return down, up
    down = _boundary(lambda x: _advantage_margin(d, beta, m, x), beta, "advantage")
    up = _boundary(lambda x: _no_go_margin(d, beta, m, x), beta, "no-go")
    return down, up
