"""Residual checks for the centered co-circular equations.

A mass vector with angles on the unit circle is a centered co-circular
central configuration when three residual groups vanish: the tangential
force balance, the spread of the radial sums around a common value, and
the center of mass. ``verify_cc`` evaluates them from angles;
``verify_definition_cc`` evaluates the same quantities straight from
planar positions as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CollisionError, DimensionError, DomainError, UnsupportedExponent
from .geometry import AngleConfiguration, MassVector, center_of_mass
from .potential import _frames, _pow


@dataclass(frozen=True, eq=False)
class CCReport:
    """Residuals of the three central-configuration equation groups.

    tangential_residual : max_k |sum_{j != k} m_j sin(t_j - t_k) / r_jk**(alpha + 2)|
    radial_spread       : max_k - min_k of sum_{j != k} m_j / r_jk**alpha
    center_norm         : |sum_j m_j q_j| / M
    lambda_tilde        : mean of the radial sums
    """

    tangential_residual: float
    radial_spread: float
    center_norm: float
    lambda_tilde: float
    is_cc: bool
    tolerance: float


def _report(alpha, m, total_mass, sin_jk, r, center, tol):
    """Assemble a CCReport from precomputed pair data.

    ``sin_jk[k, j]`` must hold sin(t_j - t_k) and ``r`` the chord matrix
    with a safe diagonal. Each residual group is compared against
    tol * M**2 so the verdict tracks the scale of the mass vector.
    """
    w_t = _pow(r, -(alpha + 2.0))
    np.fill_diagonal(w_t, 0.0)
    tangential = float(np.max(np.abs((sin_jk * w_t) @ m)))
    w_r = _pow(r, -alpha)
    np.fill_diagonal(w_r, 0.0)
    radial = w_r @ m
    spread = float(np.max(radial) - np.min(radial))
    lam = float(np.mean(radial))
    scaled = tol * total_mass ** 2
    ok = tangential <= scaled and spread <= scaled and center <= scaled
    return CCReport(tangential, spread, center, lam, bool(ok), tol)


def verify_cc(alpha: float, masses: MassVector, config: AngleConfiguration,
              tol: float = 1e-9) -> CCReport:
    """Check the central-configuration equations at given angles.

    At a genuine solution the radial sums share the common value
    lambda_tilde = 2 u_alpha / M, the tangential sums vanish, and the
    center of mass sits at the circle center.
    """
    if alpha <= 0.0:
        raise UnsupportedExponent(f"alpha must be positive, got {alpha}")
    m, d, r = _frames(masses, config)
    center = abs(center_of_mass(masses, config))
    # sin(t_j - t_k) = -sin(d[k, j])
    return _report(alpha, m, masses.total_mass, -np.sin(d), r, center, tol)


def verify_definition_cc(alpha: float, masses: MassVector, positions,
                         tol: float = 1e-9) -> CCReport:
    """Check the same equations straight from planar positions.

    Positions must sit on the unit circle to within 1e-9. The tangential
    and radial residuals are the imaginary and real parts of the planar
    force balance taken against each body's direction, so the report
    agrees with :func:`verify_cc` on matching inputs.
    """
    if alpha <= 0.0:
        raise UnsupportedExponent(f"alpha must be positive, got {alpha}")
    q = np.asarray(positions, dtype=complex)
    if q.ndim != 1 or q.size != masses.n:
        raise DimensionError(f"{masses.n} masses but {q.size} positions")
    if np.max(np.abs(np.abs(q) - 1.0)) > 1e-9:
        raise DomainError("positions must lie on the unit circle (within 1e-9)")
    r = np.abs(q[:, None] - q[None, :])
    off = r[~np.eye(q.size, dtype=bool)]
    if off.min() < 1e-12:
        raise CollisionError("two positions coincide")
    np.fill_diagonal(r, 1.0)
    m = masses.masses
    sin_jk = np.imag(q[None, :] * np.conj(q)[:, None])
    center = abs(np.sum(m * q)) / masses.total_mass
    return _report(alpha, m, masses.total_mass, sin_jk, r, center, tol)
