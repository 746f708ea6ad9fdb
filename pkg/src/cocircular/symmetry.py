"""Dihedral relabeling symmetry and the exclusion criteria built on it.

The group of order 2n is generated by the cyclic shift P, which moves
every mass label down by one, and the reflection S, which reverses the
first n-1 labels and fixes the last. Each element carries a paired affine
action on pinned angle configurations chosen so that relabeled masses
minimize at the correspondingly transformed angles.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError, InvalidArity
from .geometry import TAU, AngleConfiguration, MassVector
from .minimizer import MinimizeResult, minimize_f_k
from .potential import AuxiliaryFunctional, pair_weight_matrix
from .verifier import verify_cc


@dataclass(frozen=True)
class GroupElement:
    """Element shift**h * reflection**l of the dihedral group of order 2n."""

    h: int
    l: int
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise InvalidArity("the dihedral group needs n >= 2 labels")
        object.__setattr__(self, "h", self.h % self.n)
        object.__setattr__(self, "l", self.l % 2)

    @classmethod
    def identity(cls, n: int) -> "GroupElement":
        return cls(0, 0, n)

    @classmethod
    def shift(cls, n: int) -> "GroupElement":
        return cls(1, 0, n)

    @classmethod
    def reflection(cls, n: int) -> "GroupElement":
        return cls(0, 1, n)

    @classmethod
    def elements(cls, n: int) -> list["GroupElement"]:
        """All 2n elements, cyclic part first, then the reflections."""
        return [cls(h, l, n) for l in (0, 1) for h in range(n)]

    @property
    def is_identity(self) -> bool:
        return self.h == 0 and self.l == 0

    @property
    def is_reflection(self) -> bool:
        return self.l == 1

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        """Composition: self applied after other (matrix order)."""
        if self.n != other.n:
            raise DimensionError("group elements act on different label counts")
        sign = -1 if self.l else 1
        return GroupElement(self.h + sign * other.h, self.l + other.l, self.n)

    def inverse(self) -> "GroupElement":
        if self.l:
            return self
        return GroupElement(-self.h, 0, self.n)


def act_on_masses(g: GroupElement, masses: MassVector) -> MassVector:
    """Permute the masses by g (reflection first, then the shifts)."""
    if g.n != masses.n:
        raise DimensionError(f"group on {g.n} labels, {masses.n} masses")
    m = masses.masses
    if g.l:
        m = np.concatenate([m[-2::-1], m[-1:]])
    if g.h:
        m = np.roll(m, -g.h)
    return MassVector(m)


def act_on_angles(g: GroupElement, config: AngleConfiguration) -> AngleConfiguration:
    """Affine angle action paired with the mass permutation.

    The shift maps t to (t_2 - t_1, ..., t_n - t_1, 2*pi); the reflection
    maps t to (2*pi - t_{n-1}, ..., 2*pi - t_1, 2*pi). Both preserve all
    chords, so the functional is invariant under the simultaneous action
    on masses and angles.
    """
    if g.n != config.n:
        raise DimensionError(f"group on {g.n} labels, {config.n} angles")
    t = config.angles
    if abs(t[-1] - TAU) > 1e-12:
        raise DomainError("group actions need a pinned configuration (t_n = 2*pi)")
    if g.l:
        t = np.concatenate([TAU - t[-2::-1], [TAU]])
    for _ in range(g.h):
        t = np.concatenate([t[1:] - t[0], [TAU]])
    return AngleConfiguration(t)


@dataclass(frozen=True, eq=False)
class ExclusionVerdict:
    """Outcome of a symmetry-based exclusion scan.

    ``certificates`` lists every witness found with its margin, the
    single ``witness`` being the one with the largest margin. For the
    swap scan, ``swap_decreases`` records the closed-form hypothetical
    decrease for every pair (zero for equal masses) and ``inconsistent``
    flags the impossible combination of a certificate with a passing
    residual check.
    """

    excluded: bool
    witness: "GroupElement | tuple[int, int] | None"
    margin: float
    certificates: tuple
    f_value: float
    theta_m: AngleConfiguration
    minimize_result: MinimizeResult
    swap_decreases: tuple = ()
    inconsistent: bool = False


def exclusion_by_group(aux: AuxiliaryFunctional, masses: MassVector, *,
                       margin_scale: float = 1e-10) -> ExclusionVerdict:
    """Scan all 2n relabelings for a certificate excluding these masses.

    If (m, theta_m) satisfied the central-configuration equations, the
    mass gradient of the functional there would be a constant vector, so
    relabeling the masses to g m would change the value by the pure
    quadratic term q(g) = (gm - m)^T W (gm - m) / 2 with W the pair
    weights at theta_m. Relabelings can never beat the minimum value, so
    q(g) < 0 for any g proves no such configuration exists.
    """
    res = minimize_f_k(aux, masses)
    w = pair_weight_matrix(aux, res.theta_m)
    tol = margin_scale * abs(res.f_value)
    m = masses.masses
    certificates = []
    for g in GroupElement.elements(masses.n):
        if g.is_identity:
            continue
        d = act_on_masses(g, masses).masses - m
        if not d.any():
            continue
        q = 0.5 * float(d @ w @ d)
        if q < -tol:
            certificates.append((g, -q))
    if certificates:
        witness, margin = max(certificates, key=lambda c: c[1])
        return ExclusionVerdict(True, witness, margin, tuple(certificates),
                                res.f_value, res.theta_m, res)
    return ExclusionVerdict(False, None, 0.0, (), res.f_value, res.theta_m, res)


def exclusion_by_swap(aux: AuxiliaryFunctional, masses: MassVector, *,
                      verify_tol: float = 1e-9) -> ExclusionVerdict:
    """Exclusion via pairwise mass swaps (0-based index pairs).

    Exchanging unequal masses j and k at the minimizer would change the
    functional by the closed form -(m_k - m_j)**2 (r_jk**-alpha +
    r_jk**2/k) if the point satisfied the central-configuration
    equations. When the swapped vector is also a relabeling g m, that
    strict decrease contradicts minimality, so the pair certifies
    exclusion. The closed-form decreases for all pairs are reported
    either way, and a certificate coexisting with a passing residual
    check is flagged inconsistent.
    """
    res = minimize_f_k(aux, masses)
    w = pair_weight_matrix(aux, res.theta_m)
    m = masses.masses
    n = masses.n
    images = [act_on_masses(g, masses).masses
              for g in GroupElement.elements(n) if not g.is_identity]
    decreases = []
    certificates = []
    for j in range(n):
        for k in range(j + 1, n):
            drop = -((m[k] - m[j]) ** 2) * w[j, k]
            decreases.append(((j, k), float(drop)))
            if m[j] == m[k]:
                continue
            swapped = m.copy()
            swapped[[j, k]] = swapped[[k, j]]
            if any(np.array_equal(img, swapped) for img in images):
                certificates.append(((j, k), float(-drop)))
    if certificates:
        witness, margin = max(certificates, key=lambda c: c[1])
        inconsistent = bool(
            verify_cc(aux.alpha, masses, res.theta_m, verify_tol).is_cc
        )
        return ExclusionVerdict(True, witness, margin, tuple(certificates),
                                res.f_value, res.theta_m, res,
                                tuple(decreases), inconsistent)
    return ExclusionVerdict(False, None, 0.0, (), res.f_value, res.theta_m,
                            res, tuple(decreases), False)
