import numpy as np
import pytest

from src.errors import DisplacementTooLargeError, UnsupportedDomainError
from src.hamflow import Domain, ZeroHamiltonian, bump
from src.moserfrag import RescaledIsotopy, disc_fragment
from src.moserfrag.constants import TOL_FRAG

EPS = 0.05


def test_zero_hamiltonian_splits_into_identities():
    result = disc_fragment(ZeroHamiltonian(Domain.disc()), EPS, n=65)
    assert result.theta.is_identity
    assert result.phi_plus.is_identity
    assert result.phi_minus.is_identity
    assert result.kappa >= 1.5 * EPS
    assert result.passed()


BUMPS = [
    ((0.0, 0.0), 0.5, 0.002),
    ((0.1, 0.05), 0.4, 0.001),
    ((-0.2, 0.0), 0.5, 0.0015),
    ((0.0, 0.3), 0.3, 0.0005),
    ((0.3, -0.2), 0.45, 0.001),
]


@pytest.mark.slow
@pytest.mark.parametrize("center, radius, mass", BUMPS)
def test_small_bumps_are_fragmented(center, radius, mass):
    F = bump(Domain.disc(), center, radius, mass)
    result = disc_fragment(F, EPS, n=65)
    assert 0.0 < result.displacement < EPS
    assert result.supports_ok
    assert result.commute_defect == 0.0
    assert result.composition_residual <= TOL_FRAG
    assert result.passed()
    assert result.phi_plus.is_identity or result.phi_plus.support[2] > 0.0
    assert result.phi_minus.is_identity or result.phi_minus.support[3] < 0.0


def test_large_displacement_is_rejected():
    F = bump(Domain.disc(), (0.0, 0.0), 0.1, 0.01)
    with pytest.raises(DisplacementTooLargeError):
        disc_fragment(F, EPS, n=65)


def test_torus_is_unsupported():
    F = bump(Domain.torus(), (0.5, 0.5), 0.2, 0.001)
    with pytest.raises(UnsupportedDomainError):
        disc_fragment(F, EPS, n=65)


def test_epsilon_out_of_range():
    with pytest.raises(ValueError, match="epsilon"):
        disc_fragment(ZeroHamiltonian(Domain.disc()), 0.7, n=65)


def test_isotopy_runs_from_identity_to_time_one_map():
    F = bump(Domain.disc(), (0.0, 0.0), 0.5, 0.002)
    isotopy = RescaledIsotopy(F, EPS)
    points = np.array([[0.1, 0.0], [0.0, -0.3], [0.2, 0.2]])
    assert np.array_equal(isotopy(points, 0.0), points)
    assert isotopy.c(0.0) == 1.0 and isotopy.c(1.0) == 1.0
    assert isotopy.c(0.5) == pytest.approx(isotopy.scale)
    assert np.allclose(isotopy(points, 1.0), isotopy.flow(points, 0.0, 1.0), atol=1e-12)
