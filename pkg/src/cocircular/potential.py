"""Power-law pair energies on the circle and their exact derivatives.

For exponent beta != 0 the pair energy is

    u_beta(m, t) = sum_{j<k} m_j m_k / r_jk**beta,

with r_jk the chord length. The auxiliary functional adds a chord-squared
term,

    f(m, t) = u_alpha(m, t) + u_{-2}(m, t) / k,

whose angle Hessian has nonpositive off-diagonal entries and zero row sums
once k >= 2**(3 + alpha)/alpha. That makes the Hessian positive
semidefinite with kernel spanned by (1, ..., 1), so f has a unique
minimizer over the pinned angle domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, KTooSmall, UnsupportedExponent
from .geometry import AngleConfiguration, MassVector, chord_matrix


def k_min(alpha: float) -> float:
    """Smallest admissible convexity constant, 2**(3 + alpha)/alpha."""
    return 2.0 ** (3.0 + alpha) / alpha


@dataclass(frozen=True)
class AuxiliaryFunctional:
    """Exponent alpha > 0 plus the convexity constant k.

    Omitting ``k`` picks the tight default 2**(3 + alpha)/alpha; anything
    below that threshold is rejected because it breaks the off-diagonal
    sign structure of the angle Hessian.
    """

    alpha: float
    k: float = None

    def __post_init__(self):
        if not (isinstance(self.alpha, (int, float)) and math.isfinite(self.alpha)):
            raise UnsupportedExponent("alpha must be a finite number")
        if self.alpha <= 0.0:
            raise UnsupportedExponent(f"alpha must be positive, got {self.alpha}")
        object.__setattr__(self, "alpha", float(self.alpha))
        threshold = k_min(self.alpha)
        if self.k is None:
            object.__setattr__(self, "k", threshold)
        elif not (self.k >= threshold):
            raise KTooSmall(f"k = {self.k} is below 2**(3 + alpha)/alpha = {threshold}")
        else:
            object.__setattr__(self, "k", float(self.k))


@dataclass(frozen=True, eq=False)
class PotentialReport:
    """Value and exact first/second derivatives at one (m, t) point."""

    value: float
    grad_theta: np.ndarray
    grad_mass: np.ndarray
    hessian_theta: np.ndarray


def _pow(base: np.ndarray, expo: float) -> np.ndarray:
    """base**expo with multiply chains for small integer exponents."""
    ei = int(round(expo))
    if expo == ei and 0 < abs(ei) <= 4:
        out = base
        for _ in range(abs(ei) - 1):
            out = out * base
        return 1.0 / out if ei < 0 else out
    return base ** expo


def _check_lengths(masses: MassVector, config: AngleConfiguration) -> None:
    if masses.n != config.n:
        raise DimensionError(f"{masses.n} masses but {config.n} angles")


def _frames(masses, config):
    """Masses, angle differences, and chords with a safe diagonal."""
    _check_lengths(masses, config)
    r = chord_matrix(config).r.copy()
    np.fill_diagonal(r, 1.0)
    d = config.angles[:, None] - config.angles[None, :]
    return masses.masses, d, r


def u_beta(beta: float, masses: MassVector, config: AngleConfiguration) -> float:
    """Pair energy sum_{j<k} m_j m_k r_jk**(-beta).

    beta = -2 gives the chord-squared sum sum m_j m_k (2 - 2 cos(t_j - t_k));
    beta = 0 (the logarithmic case) is out of scope.
    """
    if beta == 0:
        raise UnsupportedExponent("beta = 0 (logarithmic potential) is not supported")
    _check_lengths(masses, config)
    r = chord_matrix(config).r
    j, k = np.triu_indices(config.n, 1)
    m = masses.masses
    return float(np.sum(m[j] * m[k] * _pow(r[j, k], -float(beta))))


def f_k_value(aux: AuxiliaryFunctional, masses: MassVector,
              config: AngleConfiguration) -> float:
    """Auxiliary functional u_alpha + u_{-2}/k."""
    return u_beta(aux.alpha, masses, config) + u_beta(-2.0, masses, config) / aux.k


def grad_theta_f_k(aux: AuxiliaryFunctional, masses: MassVector,
                   config: AngleConfiguration) -> np.ndarray:
    """Exact angle gradient of the auxiliary functional.

    Entry k is m_k sum_{j != k} m_j sin(t_j - t_k)
    (alpha / r_jk**(alpha + 2) - 2/k). Pair contributions are equal and
    opposite, so the entries sum to zero up to roundoff.
    """
    m, d, r = _frames(masses, config)
    w = aux.alpha * _pow(r, -(aux.alpha + 2.0)) - 2.0 / aux.k
    np.fill_diagonal(w, 0.0)
    # sin(t_j - t_k) = -sin(d[k, j])
    return -(m * np.sum(m[None, :] * np.sin(d) * w, axis=1))


def hessian_theta_f_k(aux: AuxiliaryFunctional, masses: MassVector,
                      config: AngleConfiguration) -> np.ndarray:
    """Exact angle Hessian of the auxiliary functional.

    Off-diagonal entry (i, j) is

        m_i m_j [-alpha (1 + alpha cos^2((t_j - t_i)/2)) / r_ij**(alpha + 2)
                 + (2 - 4 cos^2((t_j - t_i)/2)) / k],

    and each diagonal entry is minus the sum of its row's off-diagonal
    entries, so rows sum to zero exactly. For k >= 2**(3 + alpha)/alpha
    every off-diagonal entry is <= 0.
    """
    m, d, r = _frames(masses, config)
    a = aux.alpha
    c2 = np.cos(0.5 * d) ** 2
    off = (m[:, None] * m[None, :]) * (
        -a * (1.0 + a * c2) * _pow(r, -(a + 2.0)) + (2.0 - 4.0 * c2) / aux.k
    )
    np.fill_diagonal(off, 0.0)
    h = 0.5 * (off + off.T)  # fold any residual asymmetry
    np.fill_diagonal(h, -np.sum(h, axis=1))
    return h


def grad_mass_f_k(aux: AuxiliaryFunctional, masses: MassVector,
                  config: AngleConfiguration) -> np.ndarray:
    """Mass gradient: entry k is sum_{j != k} m_j (r_jk**-alpha + r_jk**2/k)."""
    _check_lengths(masses, config)
    return pair_weight_matrix(aux, config) @ masses.masses


def pair_weight_matrix(aux: AuxiliaryFunctional,
                       config: AngleConfiguration) -> np.ndarray:
    """Matrix of pair weights r_jk**-alpha + r_jk**2/k with zero diagonal.

    This is the mass-space Hessian of the auxiliary functional: for any
    real vector y, y^T W y / 2 equals the functional evaluated with y in
    place of the masses.
    """
    r = chord_matrix(config).r.copy()
    np.fill_diagonal(r, 1.0)
    w = _pow(r, -aux.alpha) + (r * r) / aux.k
    np.fill_diagonal(w, 0.0)
    return w


def potential_report(aux: AuxiliaryFunctional, masses: MassVector,
                     config: AngleConfiguration) -> PotentialReport:
    """Bundle value, both gradients, and the angle Hessian."""
    return PotentialReport(
        value=f_k_value(aux, masses, config),
        grad_theta=grad_theta_f_k(aux, masses, config),
        grad_mass=grad_mass_f_k(aux, masses, config),
        hessian_theta=hessian_theta_f_k(aux, masses, config),
    )
