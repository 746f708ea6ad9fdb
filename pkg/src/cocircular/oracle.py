"""Slow, independent reference implementations used only by the tests."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, OracleScaleError
from .geometry import TAU, AngleConfiguration, MassVector
from .potential import AuxiliaryFunctional

_EDGE = 1e-6
_BOX_SHRINK = 4.0


@dataclass(frozen=True)
class GridSpec:
    """Points per angle dimension and number of box refinements."""

    resolution: int = 64
    refinement_rounds: int = 6

    def __post_init__(self):
        if self.resolution < 8:
            raise DomainError(f"resolution must be >= 8, got {self.resolution}")
        if self.refinement_rounds < 0:
            raise DomainError("refinement_rounds must be >= 0")


def _pair_table(aux, ma, mb, ga, gb):
    """f contribution of one body pair over the grid ga x gb."""
    r = np.abs(2.0 * np.sin(0.5 * (ga[:, None] - gb[None, :])))
    with np.errstate(divide="ignore"):
        w = r ** -aux.alpha + (r * r) / aux.k
    return ma * mb * w


def _axis_view(vec, axis, ndim):
    shape = [1] * ndim
    shape[axis] = vec.size
    return vec.reshape(shape)


def _pair_view(tab, ai, aj, ndim):
    shape = [1] * ndim
    shape[ai] = tab.shape[0]
    shape[aj] = tab.shape[1]
    return tab.reshape(shape)


def _grid_argmin(aux, m, axes):
    """Lexicographically first argmin of f over ordered grid tuples."""
    dims = len(axes)
    pinned = np.array([TAU])
    pin = [_pair_table(aux, m[i], m[-1], axes[i], pinned)[:, 0] for i in range(dims)]
    if dims == 1:
        return np.array([axes[0][int(np.argmin(pin[0]))]])
    pair = {(a, b): _pair_table(aux, m[a], m[b], axes[a], axes[b])
            for a in range(dims) for b in range(a + 1, dims)}
    inner_ndim = dims - 1
    inner_f = np.zeros((axes[1].size,) * inner_ndim)
    for a in range(1, dims):
        inner_f = inner_f + _axis_view(pin[a], a - 1, inner_ndim)
        for b in range(a + 1, dims):
            inner_f = inner_f + _pair_view(pair[(a, b)], a - 1, b - 1, inner_ndim)
    inner_ok = np.ones(inner_f.shape, dtype=bool)
    for a in range(1, dims - 1):
        lt = axes[a][:, None] < axes[a + 1][None, :]
        inner_ok &= _pair_view(lt, a - 1, a, inner_ndim)
    best_val = np.inf
    best_idx = None
    for i0 in range(axes[0].size):
        f = inner_f + pin[0][i0]
        for b in range(1, dims):
            f = f + _axis_view(pair[(0, b)][i0], b - 1, inner_ndim)
        ok = inner_ok & _axis_view(axes[1] > axes[0][i0], 0, inner_ndim)
        f = np.where(ok, f, np.inf)
        flat = int(np.argmin(f))
        val = float(f.flat[flat])
        if val < best_val:
            best_val = val
            best_idx = (i0,) + np.unravel_index(flat, f.shape)
    if best_idx is None or not np.isfinite(best_val):
        raise DomainError("no ordered grid point found in the search box")
    return np.array([axes[i][best_idx[i]] for i in range(dims)])


def brute_minimize(aux: AuxiliaryFunctional, masses: MassVector,
                   grid: GridSpec = GridSpec()) -> AngleConfiguration:
    """Grid-search minimizer over ordered reduced angles, n <= 5 only.

    Each refinement round shrinks the per-dimension search box by 4x
    around the incumbent, so the final spacing is far below the 1e-4
    agreement the tests ask for.
    """
    if masses.n > 5:
        raise OracleScaleError(
            f"brute_minimize handles n <= 5, got n = {masses.n}"
        )
    dims = masses.n - 1
    m = masses.masses
    lo = np.full(dims, _EDGE)
    hi = np.full(dims, TAU - _EDGE)
    best = None
    for _ in range(grid.refinement_rounds + 1):
        axes = [np.linspace(lo[i], hi[i], grid.resolution) for i in range(dims)]
        best = _grid_argmin(aux, m, axes)
        half = (hi - lo) / (2.0 * _BOX_SHRINK)
        lo = np.maximum(best - half, _EDGE)
        hi = np.minimum(best + half, TAU - _EDGE)
    return AngleConfiguration(np.append(best, TAU))


def finite_difference_gradient(f, point, step: float = 1e-6) -> np.ndarray:
    """Central-difference gradient of a scalar function of a vector."""
    x = np.asarray(point, dtype=float)
    out = np.empty_like(x)
    for i in range(x.size):
        e = np.zeros_like(x)
        e[i] = step
        out[i] = (f(x + e) - f(x - e)) / (2.0 * step)
    return out


def finite_difference_hessian(f, point, step: float = 1e-5) -> np.ndarray:
    """Central-difference Hessian via the four-point cross formula."""
    x = np.asarray(point, dtype=float)
    n = x.size
    out = np.empty((n, n))
    for i in range(n):
        ei = np.zeros_like(x)
        ei[i] = step
        for j in range(i, n):
            ej = np.zeros_like(x)
            ej[j] = step
            val = (f(x + ei + ej) - f(x + ei - ej)
                   - f(x - ei + ej) + f(x - ei - ej)) / (4.0 * step * step)
            out[i, j] = val
            out[j, i] = val
    return out
