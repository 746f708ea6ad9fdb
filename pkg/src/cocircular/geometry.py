"""Masses, angles, and chord geometry on the unit circle.

A configuration is n bodies at q_j = exp(i t_j) on the unit circle with
strictly increasing angles in (0, 2*pi]. Pinning t_n = 2*pi removes the
rotational freedom; that pinned set is the domain used by the minimizer
and by the symmetry-group actions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CollisionError, DimensionError, DomainError, InvalidArity

TAU = 2.0 * math.pi

# Two bodies whose circular angle distance falls below this are treated as
# colliding; beyond it the r**-(alpha + 2) terms lose all conditioning.
COLLISION_TOL = 1e-12


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class MassVector:
    """Positive masses m_1..m_n; ``total_mass`` caches their sum."""

    masses: np.ndarray
    total_mass: float = field(init=False)

    def __post_init__(self):
        m = np.array(self.masses, dtype=float)
        if m.ndim != 1 or m.size < 2:
            raise InvalidArity("a mass vector needs at least two entries")
        if not np.all(np.isfinite(m)) or np.any(m <= 0.0):
            raise DomainError("masses must be positive and finite")
        object.__setattr__(self, "masses", _readonly(m))
        object.__setattr__(self, "total_mass", float(math.fsum(m)))

    @property
    def n(self) -> int:
        return self.masses.size


@dataclass(frozen=True, eq=False)
class AngleConfiguration:
    """Angles 0 < t_1 < ... < t_n <= 2*pi; t_n == 2*pi is the pinned form."""

    angles: np.ndarray

    def __post_init__(self):
        t = np.array(self.angles, dtype=float)
        if t.ndim != 1 or t.size < 2:
            raise InvalidArity("an angle configuration needs at least two entries")
        if not np.all(np.isfinite(t)):
            raise DomainError("angles must be finite")
        if t[0] <= 0.0 or t[-1] > TAU:
            raise DomainError("angles must lie in (0, 2*pi]")
        if np.any(np.diff(t) <= 0.0):
            raise DomainError("angles must be strictly increasing")
        object.__setattr__(self, "angles", _readonly(t))

    @property
    def n(self) -> int:
        return self.angles.size

    @property
    def in_k0(self) -> bool:
        """True when the rotation freedom is pinned by t_n == 2*pi."""
        return bool(self.angles[-1] == TAU)

    def normalized(self) -> "AngleConfiguration":
        """Rotate so the last angle is exactly 2*pi."""
        t = self.angles + (TAU - self.angles[-1])
        t[-1] = TAU
        return AngleConfiguration(t)

    def min_gap(self) -> float:
        """Smallest circular gap between consecutive bodies (wrap included)."""
        gaps = np.diff(self.angles)
        wrap = self.angles[0] + TAU - self.angles[-1]
        return float(min(np.min(gaps), wrap))

    def positions(self) -> np.ndarray:
        """Unit-circle positions exp(i t_j)."""
        return np.exp(1j * self.angles)


@dataclass(frozen=True, eq=False)
class ChordMatrix:
    """Symmetric matrix of pairwise chord lengths with a zero diagonal."""

    r: np.ndarray

    def __post_init__(self):
        r = np.array(self.r, dtype=float)
        if r.ndim != 2 or r.shape[0] != r.shape[1]:
            raise DomainError("chord matrix must be square")
        if not np.array_equal(r, r.T):
            raise DomainError("chord matrix must be symmetric")
        if np.any(np.diag(r) != 0.0):
            raise DomainError("chord matrix diagonal must be zero")
        off = r[~np.eye(r.shape[0], dtype=bool)]
        if off.size and (off.min() <= 0.0 or off.max() > 2.0 + 1e-12):
            raise DomainError("off-diagonal chords must lie in (0, 2]")
        object.__setattr__(self, "r", _readonly(r))

    @property
    def n(self) -> int:
        return self.r.shape[0]


def chord_matrix(config: AngleConfiguration) -> ChordMatrix:
    """Pairwise chord lengths r_jk = |2 sin((t_j - t_k)/2)|.

    The half-angle form avoids the cancellation that sqrt(2 - 2 cos)
    suffers for nearly coincident bodies.
    """
    if config.min_gap() < COLLISION_TOL:
        raise CollisionError(
            f"two bodies are within {COLLISION_TOL} radians of each other"
        )
    t = config.angles
    r = np.abs(2.0 * np.sin(0.5 * (t[:, None] - t[None, :])))
    np.fill_diagonal(r, 0.0)
    # clamp roundoff just above the diameter
    np.clip(r, 0.0, 2.0, out=r)
    return ChordMatrix(r)


def regular_ngon(n: int) -> AngleConfiguration:
    """Pinned regular n-gon: t_j = 2*pi*j/n with t_n = 2*pi exactly."""
    if n < 3:
        raise InvalidArity(f"a regular polygon needs n >= 3 bodies, got {n}")
    t = TAU * np.arange(1, n + 1) / n
    # 2*pi*n/n can round one ulp past 2*pi; the last angle is pinned
    t[-1] = TAU
    return AngleConfiguration(t)


def center_of_mass(masses: MassVector, config: AngleConfiguration) -> complex:
    """(1/M) sum_j m_j exp(i t_j) as a complex number."""
    if masses.n != config.n:
        raise DimensionError(
            f"{masses.n} masses but {config.n} angles"
        )
    z = np.sum(masses.masses * config.positions())
    return complex(z / masses.total_mass)
