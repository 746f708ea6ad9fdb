import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cocircular import (
    TAU,
    AngleConfiguration,
    AuxiliaryFunctional,
    ConvergenceFailure,
    DomainError,
    MassVector,
    angles_from_reduced,
    grad_theta_f_k,
    hessian_theta_f_k,
    minimize_f_k,
    reduced_coordinates,
    regular_ngon,
)
from conftest import ordered_angles, random_masses


def test_equal_masses_return_ngon():
    for n in (3, 7, 12):
        for alpha in (0.5, 1.0, 2.0):
            res = minimize_f_k(AuxiliaryFunctional(alpha), MassVector(np.ones(n)))
            assert res.converged
            np.testing.assert_allclose(res.theta_m.angles, regular_ngon(n).angles,
                                       rtol=0, atol=1e-9)


def test_one_heavy_triangle_frozen():
    aux = AuxiliaryFunctional(1.0, 16.0)
    res = minimize_f_k(aux, MassVector(np.array([1.0, 1.0, 2.0])))
    np.testing.assert_allclose(
        res.theta_m.angles,
        [2.1722178297908954, 4.11096747738869, TAU],
        rtol=0, atol=1e-9,
    )
    assert abs(res.f_value - 3.8196204817779997) < 1e-12
    # the two unit masses sit symmetric about the axis through the heavy one
    assert abs(res.theta_m.angles[0] + res.theta_m.angles[1] - TAU) < 1e-9
    assert res.grad_norm <= 1e-11 * max(1.0, abs(res.f_value))


def test_reduced_coordinates_frozen_and_roundtrip():
    x = reduced_coordinates(regular_ngon(4))
    np.testing.assert_allclose(x, [np.pi / 2, np.pi, 1.5 * np.pi], atol=1e-15)
    back = angles_from_reduced(x)
    np.testing.assert_array_equal(back.angles, regular_ngon(4).angles)


def test_reduced_coordinates_requires_pinned():
    with pytest.raises(DomainError):
        reduced_coordinates(AngleConfiguration(np.array([1.0, 2.0, 3.0])))


def test_angles_from_reduced_rejects_boundary():
    with pytest.raises(DomainError):
        angles_from_reduced(np.array([1.0, TAU]))  # collides with the pin


def test_init_validation():
    aux = AuxiliaryFunctional(1.0)
    m = MassVector(np.ones(4))
    with pytest.raises(DomainError):
        minimize_f_k(aux, m, regular_ngon(3))  # wrong length
    with pytest.raises(DomainError):
        minimize_f_k(aux, m, AngleConfiguration(np.array([1.0, 2.0, 3.0, 4.0])))


def test_convergence_failure_carries_last_iterate():
    aux = AuxiliaryFunctional(1.0)
    m = MassVector(np.array([1.0, 1.0, 2.0]))
    with pytest.raises(ConvergenceFailure) as exc:
        minimize_f_k(aux, m, grad_tol=-1.0)  # unsatisfiable tolerance
    result = exc.value.result
    assert result.converged is False
    assert result.iterations == 200
    assert result.theta_m.n == 3


def test_solution_is_a_positive_definite_critical_point():
    rng = np.random.default_rng(2)
    aux = AuxiliaryFunctional(1.0)
    m = random_masses(rng, 6)
    res = minimize_f_k(aux, m)
    g = grad_theta_f_k(aux, m, res.theta_m)[:-1]
    assert np.linalg.norm(g) <= 1e-11 * max(1.0, abs(res.f_value))
    h = hessian_theta_f_k(aux, m, res.theta_m)[:-1, :-1]
    assert np.min(np.linalg.eigvalsh(h)) > 0.0
    assert res.min_gap > 0.0


def test_twenty_random_restarts_agree():
    rng = np.random.default_rng(9)
    aux = AuxiliaryFunctional(1.0)
    m = random_masses(rng, 6)
    reference = minimize_f_k(aux, m).theta_m.angles
    for _ in range(20):
        init = ordered_angles(rng, 6)
        res = minimize_f_k(aux, m, init)
        np.testing.assert_allclose(res.theta_m.angles, reference,
                                   rtol=0, atol=1e-8)


@given(st.integers(0, 2**32 - 1), st.integers(3, 8))
@settings(max_examples=25, deadline=None)
def test_minimizer_independent_of_init(seed, n):
    rng = np.random.default_rng(seed)
    aux = AuxiliaryFunctional(1.0)
    m = random_masses(rng, n)
    a = minimize_f_k(aux, m)
    b = minimize_f_k(aux, m, ordered_angles(rng, n))
    assert a.converged and b.converged
    np.testing.assert_allclose(a.theta_m.angles, b.theta_m.angles,
                               rtol=0, atol=1e-8)


@given(st.integers(0, 2**32 - 1), st.sampled_from([0.5, 1.0, 2.0]),
       st.integers(3, 8))
@settings(max_examples=25, deadline=None)
def test_minimum_beats_random_competitors(seed, alpha, n):
    rng = np.random.default_rng(seed)
    aux = AuxiliaryFunctional(alpha)
    m = random_masses(rng, n)
    res = minimize_f_k(aux, m)
    from cocircular import f_k_value

    for _ in range(5):
        other = ordered_angles(rng, n)
        assert res.f_value <= f_k_value(aux, m, other) + 1e-10


def test_unpinned_init_near_pin_is_normalized():
    aux = AuxiliaryFunctional(1.0)
    m = MassVector(np.ones(3))
    init = AngleConfiguration(np.array([TAU / 3, 2 * TAU / 3, TAU - 5e-13]))
    res = minimize_f_k(aux, m, init)
    assert res.theta_m.in_k0
