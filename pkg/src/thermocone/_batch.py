"""Vectorised curve kernels for the Monte-Carlo estimators.

Rows of a sample matrix are treated as independent states; curves are held as
padded knot matrices so whole batches can be classified without Python-level
loops.  Semantics match the scalar functions in `core`/`catalysis` exactly
(same tolerances, same tie-break).
"""

from __future__ import annotations

import numpy as np

from .core import EPS_CMP, TMCurve


def batch_curves(samples: np.ndarray, gamma: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Knot matrices (X, Y) of every row's curve, including the (0,0) knot."""
    ratios = samples / gamma
    order = np.argsort(-ratios, kind="stable", axis=1)
    n, d = samples.shape
    xs = np.cumsum(np.take_along_axis(np.broadcast_to(gamma, (n, d)), order, axis=1), axis=1)
    ys = np.cumsum(np.take_along_axis(samples, order, axis=1), axis=1)
    pad = np.zeros((n, 1))
    xs = np.hstack([pad, xs])
    ys = np.hstack([pad, ys])
    xs[:, -1] = 1.0
    ys[:, -1] = 1.0
    return xs, ys


def eval_rows_at(xs: np.ndarray, ys: np.ndarray, x0: float) -> np.ndarray:
    """Evaluate every row's piecewise-linear curve at the scalar abscissa x0."""
    nseg = xs.shape[1] - 1
    j = np.clip((xs <= x0 + 1e-15).sum(axis=1) - 1, 0, nseg - 1)
    rows = np.arange(xs.shape[0])
    x_lo = xs[rows, j]
    x_hi = xs[rows, j + 1]
    y_lo = ys[rows, j]
    y_hi = ys[rows, j + 1]
    t = (x0 - x_lo) / (x_hi - x_lo)
    return y_lo + t * (y_hi - y_lo)


def fixed_dominates_rows(curve: TMCurve, xs: np.ndarray, ys: np.ndarray, tol: float = EPS_CMP) -> np.ndarray:
    """Mask of rows whose curve lies everywhere below the fixed curve."""
    ok = np.all(np.interp(xs, curve.xs, curve.ys) >= ys - tol, axis=1)
    for x0, y0 in zip(curve.xs[1:-1], curve.ys[1:-1]):
        ok &= y0 >= eval_rows_at(xs, ys, float(x0)) - tol
    return ok


def rows_dominate_fixed(xs: np.ndarray, ys: np.ndarray, curve: TMCurve, tol: float = EPS_CMP) -> np.ndarray:
    """Mask of rows whose curve lies everywhere above the fixed curve."""
    ok = np.all(ys >= np.interp(xs, curve.xs, curve.ys) - tol, axis=1)
    for x0, y0 in zip(curve.xs[1:-1], curve.ys[1:-1]):
        ok &= eval_rows_at(xs, ys, float(x0)) >= y0 - tol
    return ok
