import numpy as np
import pytest

from src.errors import ExcessiveRejectionError, UnsupportedDomainError
from src.fgword import KernelFactory, KernelType
from src.ggqm import (
    GGEstimate,
    evaluate_sample,
    estimate_row,
    gg_estimate,
    gg_estimates,
    gg_schedule,
    homogenization_drift,
    richardson,
    sample_pair,
    sample_stream,
    u_value,
)
from src.hamflow import Domain, IntegratorType, ZeroHamiltonian, bump, calabi
from src.punctured import PathOptions

EXACT = PathOptions(method=IntegratorType.EXACT_RADIAL)


@pytest.fixture(scope="module")
def ab():
    return KernelFactory.create(KernelType.AB)


@pytest.fixture(scope="module")
def aab():
    return KernelFactory.create(KernelType.AAB)


@pytest.fixture(scope="module")
def torus_bump():
    return bump(Domain.torus(), (0.5, 0.5), 0.25, 0.1)


@pytest.fixture(scope="module")
def proposition_estimates(ab, aab, torus_bump):
    return gg_estimates(
        [ab, aab], torus_bump, p=16, n_samples=20000, seed=11, options=EXACT, extrapolate=True
    )


def estimate(value, std_error, p):
    return GGEstimate(value=value, std_error=std_error, p=p, n_samples=100, n_rejected=0, seed=0)


def test_zero_hamiltonian_pair_value(ab):
    F = ZeroHamiltonian(Domain.torus())
    assert u_value(ab, F, np.array([0.1, 0.2]), np.array([0.6, 0.9]), p=4) == 0.0


def test_bump_away_from_the_pair_has_zero_value(ab):
    far = bump(Domain.torus(), (0.5, 0.5), 0.1, 0.05)
    x, y = np.array([0.1, 0.1]), np.array([0.9, 0.2])
    assert u_value(ab, far, x, y, p=4, options=EXACT) == 0.0


def test_pair_value_requires_the_torus(ab):
    F = bump(Domain.disc(), (0.0, 0.0), 0.3, 0.01)
    with pytest.raises(UnsupportedDomainError):
        u_value(ab, F, np.array([0.1, 0.0]), np.array([-0.1, 0.0]))


def test_power_must_be_positive(ab):
    with pytest.raises(ValueError):
        gg_estimate(ab, ZeroHamiltonian(Domain.torus()), p=0, n_samples=4)


def test_zero_hamiltonian_estimate(ab):
    result = gg_estimate(ab, ZeroHamiltonian(Domain.torus()), p=2, n_samples=64, seed=3)
    assert result.value == 0.0
    assert result.std_error == 0.0
    assert result.n_samples == 64
    assert result.rejection_rate < 0.01


@pytest.mark.slow
def test_commutator_kernel_matches_twice_calabi(proposition_estimates, torus_bump):
    result, _ = proposition_estimates
    target = 2.0 * calabi(torus_bump)
    assert target == pytest.approx(0.2, rel=1e-3)
    assert abs(result.value - target) <= max(0.1 * target, 4.0 * result.std_error)


@pytest.mark.slow
def test_kernel_vanishing_on_the_commutator_estimates_zero(proposition_estimates):
    _, result = proposition_estimates
    assert result.extrapolated
    assert abs(result.value) <= 4.0 * result.std_error


def test_estimates_are_reproducible_across_workers(ab, torus_bump):
    kwargs = {"p": 2, "n_samples": 24, "seed": 5, "options": EXACT}
    serial = gg_estimate(ab, torus_bump, chunk_size=24, **kwargs)
    chunked = gg_estimate(ab, torus_bump, chunk_size=5, **kwargs)
    parallel = gg_estimate(ab, torus_bump, chunk_size=5, workers=2, **kwargs)
    for other in (chunked, parallel):
        assert other.value == serial.value
        assert other.std_error == serial.std_error
        assert other.n_rejected == serial.n_rejected


def test_sample_streams_depend_on_seed_and_index():
    first = sample_pair(sample_stream(1, 0))
    np.testing.assert_array_equal(first, sample_pair(sample_stream(1, 0)))
    assert not np.array_equal(first, sample_pair(sample_stream(2, 0)))
    assert not np.array_equal(first, sample_pair(sample_stream(1, 1)))


def test_excessive_rejection_is_reported(ab):
    options = PathOptions(delta_punct=0.3)
    with pytest.raises(ExcessiveRejectionError):
        gg_estimate(ab, ZeroHamiltonian(Domain.torus()), p=1, n_samples=50, options=options)


def test_schedule_runs_every_power(ab, aab):
    table = gg_schedule([ab, aab], ZeroHamiltonian(Domain.torus()), (1, 2, 4), n_samples=8)
    assert set(table) == {"ab", "aab"}
    assert [e.p for e in table["ab"]] == [1, 2, 4]


def test_schedule_must_increase(ab):
    with pytest.raises(ValueError):
        gg_schedule([ab], ZeroHamiltonian(Domain.torus()), (2, 1), n_samples=8)


def test_richardson_extrapolation():
    assert richardson([estimate(1.0, 0.1, 8), estimate(1.5, 0.1, 16)]) == pytest.approx(2.0)
    assert richardson([estimate(0.7, 0.1, 4)]) == 0.7
    with pytest.raises(ValueError):
        richardson([estimate(1.0, 0.1, 4), estimate(1.5, 0.1, 16)])


def test_homogenization_drift_tolerance():
    estimates = [estimate(1.0, 0.1, 1), estimate(1.5, 0.1, 2), estimate(1.52, 0.1, 4)]
    drifts = homogenization_drift(estimates)
    assert [d.p for d in drifts] == [1, 2]
    assert drifts[0].drift == pytest.approx(0.5)
    assert not drifts[0].within
    assert drifts[1].within
    assert drifts[1].tolerance == pytest.approx(3.0 * np.hypot(0.1, 0.1))


def test_bias_bound_and_z_score():
    result = GGEstimate(
        value=0.3, std_error=0.1, p=4, n_samples=90, n_rejected=10, seed=0, max_abs=2.0
    )
    assert result.bias_bound == pytest.approx(0.2)
    assert result.z_score(0.1) == pytest.approx(2.0)
    assert estimate(0.0, 0.0, 1).z_score(0.0) == 0.0


def test_estimate_rows_carry_the_config_hash(ab):
    result = gg_estimate(ab, ZeroHamiltonian(Domain.torus()), p=1, n_samples=4)
    row = estimate_row(result, "abc123")
    assert row["config_hash"] == "abc123"
    assert row["kernel"] == "ab"
    assert row["p"] == 1


def test_extrapolated_sample_pairs_p_with_2p(ab, torus_bump):
    values, rejected, unresolved = evaluate_sample(
        [ab], torus_bump, 4, seed=3, index=0, options=EXACT, extrapolate=True
    )
    assert (rejected, unresolved) == (0, 0)
    x, y = sample_pair(sample_stream(3, 0))
    low = u_value(ab, torus_bump, x, y, p=4, options=EXACT)
    high = u_value(ab, torus_bump, x, y, p=8, options=EXACT)
    assert values[0] == pytest.approx((high - low) / 4)


def test_extrapolated_estimate_of_zero_hamiltonian(ab):
    result = gg_estimate(ab, ZeroHamiltonian(Domain.torus()), p=2, n_samples=16, extrapolate=True)
    assert result.extrapolated
    assert result.value == 0.0


def test_unresolved_draws_are_redrawn_and_counted(ab, torus_bump):
    options = PathOptions(h_loop=1e-9, chord_ratio=1e-6, max_steps=64)
    result = gg_estimate(
        ab, torus_bump, p=1, n_samples=100, seed=2, options=options, max_rejection_rate=1.0
    )
    assert result.n_unresolved > 0
    assert result.unresolved_rate == result.n_unresolved / 100
    # surviving pairs barely move
    assert result.value == 0.0
    assert result.bias_bound == 0.0


def test_too_many_unresolved_draws_abort_the_estimate(ab, torus_bump):
    options = PathOptions(h_loop=1e-9, chord_ratio=1e-6, max_steps=64)
    with pytest.raises(ExcessiveRejectionError, match="unresolved"):
        gg_estimate(ab, torus_bump, p=1, n_samples=100, seed=2, options=options)
