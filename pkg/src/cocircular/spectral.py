"""Interaction matrices, the quadratic expansion identity, and spectra.

The pair-weight matrix W (zero diagonal) is the mass-space Hessian of the
auxiliary functional: y^T W y / 2 reproduces the functional with y in
place of the masses. Shifting it to C J - W with C = 2 u_alpha / M**2 +
2/k yields a matrix that annihilates the mass vector at a solution of the
central-configuration equations and is positive semidefinite whenever the
normalized potential 2**(alpha+1) u_alpha / M**2 stays below 1 + alpha/4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidArity
from .geometry import AngleConfiguration, MassVector, regular_ngon, TAU
from .potential import AuxiliaryFunctional, f_k_value, pair_weight_matrix, u_beta


@dataclass(frozen=True, eq=False)
class InteractionMatrix:
    """Pair weights r_jk**-alpha + r_jk**2/k, symmetric, zero diagonal."""

    h: np.ndarray


@dataclass(frozen=True, eq=False)
class CriterionMatrix:
    """Rank-one shift C J - H with the normalized potential alongside."""

    hcal: np.ndarray
    u_ratio: float
    threshold: float


@dataclass(frozen=True, eq=False)
class CriterionVerdict:
    """Spectral exclusion verdict with the diagnostics behind it.

    ``offdiag_max``, ``kernel_residual`` and the two smallest eigenvalues
    describe the mass-weighted criterion matrix diag(m) hcal diag(m);
    at a centered co-circular solution with the condition satisfied it is
    diagonally dominant and positive semidefinite with kernel (1, ..., 1).
    """

    excluded: bool
    u_ratio: float
    threshold: float
    condition_holds: bool
    masses_equal: bool
    margin: float
    offdiag_max: float
    kernel_residual: float
    min_eigenvalue: float
    second_eigenvalue: float


@dataclass(frozen=True, eq=False)
class CirculantSpectrum:
    """Eigenvalues (index order, not sorted) and root-of-unity eigenvectors."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def build_matrices(aux: AuxiliaryFunctional, masses: MassVector,
                   config: AngleConfiguration):
    """Interaction and criterion matrices at one (m, t) point."""
    w = pair_weight_matrix(aux, config)
    u = u_beta(aux.alpha, masses, config)
    total = masses.total_mass
    c = 2.0 * u / total ** 2 + 2.0 / aux.k
    hcal = c * np.ones_like(w) - w
    u_ratio = 2.0 ** (aux.alpha + 1.0) * u / total ** 2
    threshold = 1.0 + aux.alpha / 4.0
    return InteractionMatrix(w), CriterionMatrix(hcal, u_ratio, threshold)


def taylor_identity_check(aux: AuxiliaryFunctional, masses_cc: MassVector,
                          config_cc: AngleConfiguration,
                          y: MassVector) -> float:
    """Residual of the exact quadratic expansion at a verified solution.

    For sum-preserving y the first-order term drops (the mass gradient is
    constant there), leaving f(y) - f(m) = (y - m)^T W (y - m) / 2; the
    returned value is the absolute defect of that identity.
    """
    total = masses_cc.total_mass
    if abs(y.total_mass - total) > 1e-9 * max(1.0, total):
        raise DomainError(
            f"sum mismatch: {y.total_mass} versus {total}"
        )
    w = pair_weight_matrix(aux, config_cc)
    d = y.masses - masses_cc.masses
    lhs = f_k_value(aux, y, config_cc) - f_k_value(aux, masses_cc, config_cc)
    return float(abs(lhs - 0.5 * (d @ w @ d)))


def criterion_verdict(aux: AuxiliaryFunctional, masses: MassVector,
                      config: AngleConfiguration) -> CriterionVerdict:
    """Spectral exclusion test at one configuration.

    Unequal masses are excluded whenever the normalized potential
    2**(alpha+1) u_alpha / M**2 stays within 1 + alpha/4; equal masses
    satisfy the equations at the regular polygon, so the same condition
    is then an admissibility statement rather than an exclusion.
    """
    _, cm = build_matrices(aux, masses, config)
    m = masses.masses
    weighted = np.outer(m, m) * cm.hcal
    eigs = np.linalg.eigvalsh(weighted)
    off = weighted[~np.eye(masses.n, dtype=bool)]
    masses_equal = bool(np.ptp(m) <= 1e-12 * np.max(m))
    condition = bool(cm.u_ratio <= cm.threshold)
    return CriterionVerdict(
        excluded=bool(condition and not masses_equal),
        u_ratio=cm.u_ratio,
        threshold=cm.threshold,
        condition_holds=condition,
        masses_equal=masses_equal,
        margin=float(cm.threshold - cm.u_ratio),
        offdiag_max=float(np.max(off)),
        kernel_residual=float(np.max(np.abs(weighted @ np.ones(masses.n)))),
        min_eigenvalue=float(eigs[0]),
        second_eigenvalue=float(eigs[1]),
    )


def circulant_spectrum(aux: AuxiliaryFunctional, n: int) -> CirculantSpectrum:
    """Closed-form spectrum of the equal-mass interaction matrix.

    At the regular n-gon the matrix is circulant, so eigenvalue k is the
    cosine transform of the first row and eigenvector k the k-th
    root-of-unity vector (ξ_k, ξ_k**2, ..., ξ_k**n)/sqrt(n) with
    ξ_k = exp(2 pi i k / n). Eigenvalues come back in index order with
    the all-ones direction first.
    """
    if n < 3:
        raise InvalidArity(f"need n >= 3 bodies, got {n}")
    row = pair_weight_matrix(aux, regular_ngon(n))[0]
    j = np.arange(n)
    eigenvalues = np.array(
        [float(np.sum(row * np.cos(TAU * k * j / n))) for k in range(n)]
    )
    vectors = np.exp(1j * TAU * np.outer(np.arange(1, n + 1), j) / n)
    return CirculantSpectrum(eigenvalues, vectors / math.sqrt(n))
