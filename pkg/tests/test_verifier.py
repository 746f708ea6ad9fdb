import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cocircular import (
    TAU,
    AngleConfiguration,
    AuxiliaryFunctional,
    CollisionError,
    DomainError,
    MassVector,
    UnsupportedExponent,
    act_on_angles,
    act_on_masses,
    GroupElement,
    minimize_f_k,
    regular_ngon,
    u_beta,
    verify_cc,
    verify_definition_cc,
)
from conftest import ordered_angles, random_masses


def test_ngon_is_cc_and_lambda_matches_direct_sum():
    for n, alpha in ((3, 1.0), (6, 1.0), (5, 0.5), (8, 2.0)):
        m = MassVector(np.ones(n))
        rep = verify_cc(alpha, m, regular_ngon(n))
        assert rep.is_cc
        assert rep.tangential_residual < 1e-12
        assert rep.radial_spread < 1e-12
        assert rep.center_norm < 1e-12
        direct = sum(
            (1.0 / np.sin(j * np.pi / n)) ** alpha for j in range(1, n)
        ) / 2**alpha
        assert abs(rep.lambda_tilde - direct) < 1e-12
        # the common radial value is 2 U_alpha / M
        assert abs(rep.lambda_tilde
                   - 2.0 * u_beta(alpha, m, regular_ngon(n)) / n) < 1e-12


def test_lambda_tilde_frozen_hexagon():
    rep = verify_cc(1.0, MassVector(np.ones(6)), regular_ngon(6))
    assert abs(rep.lambda_tilde - (2.5 + 2.0 / np.sqrt(3.0))) < 1e-14


def test_one_heavy_minimizer_is_not_cc():
    aux = AuxiliaryFunctional(1.0)
    m = MassVector(np.array([1.0, 1.0, 1.0, 2.0]))
    res = minimize_f_k(aux, m)
    rep = verify_cc(1.0, m, res.theta_m)
    assert not rep.is_cc
    assert rep.radial_spread > rep.tolerance


def test_alternating_square_fails_radially():
    rep = verify_cc(1.0, MassVector(np.array([1.0, 2.0, 1.0, 2.0])),
                    regular_ngon(4))
    assert rep.tangential_residual < 1e-12  # symmetric placement
    assert abs(rep.radial_spread - (np.sqrt(2.0) - 0.5)) < 1e-12
    assert not rep.is_cc


def test_perturbed_ngon_rejected_by_both_verifiers():
    t = regular_ngon(5).angles.copy()
    t[1] += 0.01
    cfg = AngleConfiguration(t)
    m = MassVector(np.ones(5))
    assert not verify_cc(1.0, m, cfg).is_cc
    assert not verify_definition_cc(1.0, m, cfg.positions()).is_cc


def test_verifiers_agree_on_angle_parametrization():
    aux = AuxiliaryFunctional(1.0, 16.0)
    m = MassVector(np.array([1.0, 1.0, 2.0]))
    res = minimize_f_k(aux, m)
    a = verify_cc(1.0, m, res.theta_m)
    b = verify_definition_cc(1.0, m, res.theta_m.positions())
    assert a.is_cc == b.is_cc
    assert abs(a.tangential_residual - b.tangential_residual) < 1e-10
    assert abs(a.radial_spread - b.radial_spread) < 1e-10
    assert abs(a.center_norm - b.center_norm) < 1e-10
    assert abs(a.lambda_tilde - b.lambda_tilde) < 1e-10


def test_definition_verifier_validation():
    m = MassVector(np.ones(3))
    with pytest.raises(DomainError):
        verify_definition_cc(1.0, m, np.array([0.5 + 0j, 1j, -1j]))  # off circle
    with pytest.raises(CollisionError):
        q = np.exp(1j * np.array([1.0, 1.0 + 1e-14, 3.0]))
        verify_definition_cc(1.0, m, q)
    with pytest.raises(UnsupportedExponent):
        verify_definition_cc(-1.0, m, regular_ngon(3).positions())


def test_tolerance_knob():
    t = regular_ngon(4).angles.copy()
    t[0] += 1e-6
    cfg = AngleConfiguration(t)
    m = MassVector(np.ones(4))
    assert not verify_cc(1.0, m, cfg, tol=1e-9).is_cc
    assert verify_cc(1.0, m, cfg, tol=1.0).is_cc


@given(st.integers(0, 2**32 - 1), st.integers(3, 7))
@settings(max_examples=30, deadline=None)
def test_residuals_invariant_under_relabeling(seed, n):
    rng = np.random.default_rng(seed)
    m = random_masses(rng, n)
    cfg = ordered_angles(rng, n)
    base = verify_cc(1.0, m, cfg)
    for g in GroupElement.elements(n):
        rep = verify_cc(1.0, act_on_masses(g, m), act_on_angles(g, cfg))
        for field in ("tangential_residual", "radial_spread", "center_norm"):
            a, b = getattr(rep, field), getattr(base, field)
            assert abs(a - b) <= 1e-12 * max(1.0, abs(b))


@given(st.integers(0, 2**32 - 1), st.integers(3, 7))
@settings(max_examples=30, deadline=None)
def test_verifiers_agree_on_random_configurations(seed, n):
    rng = np.random.default_rng(seed)
    m = random_masses(rng, n)
    cfg = ordered_angles(rng, n)
    a = verify_cc(1.0, m, cfg)
    b = verify_definition_cc(1.0, m, cfg.positions())
    assert a.is_cc == b.is_cc
    scale = max(1.0, a.tangential_residual, a.radial_spread)
    assert abs(a.tangential_residual - b.tangential_residual) < 1e-10 * scale
    assert abs(a.radial_spread - b.radial_spread) < 1e-10 * scale
