"""Damped Newton minimization of the auxiliary functional.

Work happens in the reduced coordinates (t_1, ..., t_{n-1}) with t_n
pinned at 2*pi. The functional blows up at the ordering boundary, so a
feasibility-clipped, Armijo-backtracked Newton step stays interior and
converges to the unique minimizer.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure, DomainError
from .geometry import COLLISION_TOL, TAU, AngleConfiguration, MassVector
from .potential import (AuxiliaryFunctional, f_k_value, grad_theta_f_k,
                        hessian_theta_f_k)

_ARMIJO = 1e-4
_SHRINK = 0.5
_BOUNDARY_FRACTION = 0.9
_DIAG_REG = 1e-12


@dataclass(frozen=True, eq=False)
class MinimizeResult:
    """Converged minimizer of the auxiliary functional.

    ``grad_norm`` is the Euclidean norm of the reduced gradient and
    ``min_gap`` the smallest circular gap seen over accepted iterates.
    """

    theta_m: AngleConfiguration
    f_value: float
    grad_norm: float
    iterations: int
    converged: bool
    min_gap: float


def reduced_coordinates(config: AngleConfiguration) -> np.ndarray:
    """Free coordinates (t_1, ..., t_{n-1}) of a pinned configuration."""
    if abs(config.angles[-1] - TAU) > 1e-12:
        raise DomainError("configuration must be pinned: t_n = 2*pi")
    return config.angles[:-1].copy()


def angles_from_reduced(x: np.ndarray) -> AngleConfiguration:
    """Inverse of reduced_coordinates: append the pinned angle 2*pi."""
    x = np.asarray(x, dtype=float)
    return AngleConfiguration(np.append(x, TAU))


def _max_feasible_step(x: np.ndarray, d: np.ndarray) -> float:
    """Largest t keeping 0 < x_1 + t d_1 < ... < x_{n-1} + t d_{n-1} < 2*pi."""
    gaps = np.concatenate(([x[0]], np.diff(x), [TAU - x[-1]]))
    dgaps = np.concatenate(([d[0]], np.diff(d), [-d[-1]]))
    shrinking = dgaps < 0.0
    if not np.any(shrinking):
        return np.inf
    return float(np.min(gaps[shrinking] / -dgaps[shrinking]))


def minimize_f_k(aux: AuxiliaryFunctional, masses: MassVector,
                 init: AngleConfiguration | None = None, *,
                 grad_tol: float = 1e-11,
                 max_iter: int = 200) -> MinimizeResult:
    """Minimize the auxiliary functional over pinned angle configurations.

    Parameters
    ----------
    aux : AuxiliaryFunctional
        Exponent and convexity constant.
    masses : MassVector
        Positive masses, length n >= 2.
    init : AngleConfiguration, optional
        Pinned interior starting point. Defaults to the regular n-gon.
    grad_tol : float
        Converged once the reduced gradient norm drops below
        grad_tol * max(1, |f|).
    max_iter : int
        Maximum number of Newton steps.

    Returns
    -------
    MinimizeResult
        With ``converged`` True, a positive definite reduced Hessian, and
        a strictly decreasing sequence of accepted f values behind it.

    Raises
    ------
    ConvergenceFailure
        If the tolerance is not met within ``max_iter`` steps; the last
        iterate rides along on the exception.
    DomainError
        For an init outside the pinned interior domain.
    """
    n = masses.n
    if init is None:
        cfg = AngleConfiguration(TAU * np.arange(1, n + 1) / n)
    else:
        if init.n != n:
            raise DomainError(f"init has {init.n} angles for {n} masses")
        if abs(init.angles[-1] - TAU) > 1e-12:
            raise DomainError("init must be pinned: t_n = 2*pi")
        cfg = init.normalized()
        if cfg.min_gap() < COLLISION_TOL:
            raise DomainError("init is too close to a collision")
    x = cfg.angles[:-1].copy()
    fx = f_k_value(aux, masses, cfg)
    min_gap_seen = cfg.min_gap()
    gnorm = np.inf
    for iteration in range(max_iter + 1):
        grad = grad_theta_f_k(aux, masses, cfg)
        gr = grad[:-1]
        gnorm = float(np.linalg.norm(gr))
        if gnorm <= grad_tol * max(1.0, abs(fx)):
            hr = hessian_theta_f_k(aux, masses, cfg)[:-1, :-1]
            try:
                np.linalg.cholesky(hr)
            except np.linalg.LinAlgError:
                raise ConvergenceFailure(
                    "reduced Hessian is not positive definite at the candidate",
                    MinimizeResult(cfg, fx, gnorm, iteration, False, min_gap_seen),
                ) from None
            return MinimizeResult(cfg, fx, gnorm, iteration, True, min_gap_seen)
        if iteration == max_iter:
            break
        hr = hessian_theta_f_k(aux, masses, cfg)[:-1, :-1]
        reg = _DIAG_REG * float(np.trace(hr)) / n
        try:
            step = np.linalg.solve(hr + reg * np.eye(n - 1), -gr)
        except np.linalg.LinAlgError:
            step = -gr
        slope = float(gr @ step)
        if slope >= 0.0:
            step = -gr
            slope = -gnorm * gnorm
        t = min(1.0, _BOUNDARY_FRACTION * _max_feasible_step(x, step))
        # ulp slack keeps full Newton steps acceptable at the float floor,
        # where the predicted decrease is smaller than rounding in f
        slack = 4.0 * np.finfo(float).eps * abs(fx)
        accepted = False
        while t > 1e-18:
            xt = x + t * step
            try:
                cfg_t = angles_from_reduced(xt)
            except DomainError:
                t *= _SHRINK
                continue
            ft = f_k_value(aux, masses, cfg_t)
            if ft <= fx + _ARMIJO * t * slope + slack:
                accepted = True
                break
            t *= _SHRINK
        if not accepted:
            raise ConvergenceFailure(
                "line search stalled",
                MinimizeResult(cfg, fx, gnorm, iteration, False, min_gap_seen),
            )
        x, cfg, fx = xt, cfg_t, ft
        min_gap_seen = min(min_gap_seen, cfg.min_gap())
    raise ConvergenceFailure(
        f"no convergence within {max_iter} Newton steps",
        MinimizeResult(cfg, fx, gnorm, max_iter, False, min_gap_seen),
    )
