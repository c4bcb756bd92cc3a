import numpy as np
import pytest

from src.errors import UnsupportedDomainError
from src.hamflow import (
    Domain,
    FlowMap,
    FunctionHamiltonian,
    HamiltonianFactory,
    HamiltonianPreset,
    IdentityMap,
    IntegratorType,
    ZeroHamiltonian,
    bump,
    c0_distance,
    calabi,
)
from src.hamflow.constants import TOL_QUAD


def coordinate_q(points, t):
    return points[:, 1]


def test_calabi_of_zero_is_zero():
    assert calabi(ZeroHamiltonian(Domain.disc())) == 0.0


def test_calabi_of_unit_mass_bump():
    F = bump(Domain.disc(), (0.1, -0.2), 0.4, 1.0)
    assert calabi(F) == pytest.approx(1.0, abs=TOL_QUAD)


def test_calabi_is_linear():
    F = bump(Domain.torus(), (0.3, 0.8), 0.2, 0.37)
    assert calabi(F.scaled(3.0)) == pytest.approx(3.0 * calabi(F), rel=1e-12)


def test_calabi_of_pulsed_bump_matches_steady_bump():
    pulsed = HamiltonianFactory.create(
        HamiltonianPreset.PULSED_BUMP, domain="disc", radius=0.3, mass=0.5, center=[0.0, 0.0]
    )
    assert pulsed.time_dependent
    assert calabi(pulsed) == pytest.approx(0.5, abs=TOL_QUAD)


def test_calabi_rejects_full_torus_support():
    F = FunctionHamiltonian(Domain.torus(), coordinate_q)
    with pytest.raises(UnsupportedDomainError):
        calabi(F)


def discontinuity_sequence(indices):
    domain = Domain.disc()
    maps = [
        FlowMap(bump(domain, (0.0, 0.0), 1.0 / i, 1.0), steps=1, method=IntegratorType.EXACT_RADIAL)
        for i in indices
    ]
    return maps


def test_unit_calabi_maps_converge_to_identity():
    indices = (2, 4, 8)
    maps = discontinuity_sequence(indices)
    values = [calabi(f.hamiltonian) for f in maps]
    distances = [c0_distance(f) for f in maps]
    assert values == pytest.approx([1.0, 1.0, 1.0], abs=TOL_QUAD)
    assert all(later <= earlier for earlier, later in zip(distances, distances[1:]))
    assert all(d <= 2.0 / i for d, i in zip(distances, indices))


def test_c0_distance_of_map_to_itself_is_zero():
    F = bump(Domain.torus(), (0.5, 0.5), 0.25, 0.002)
    f = FlowMap(F, steps=32)
    assert c0_distance(f, f, n_c0=64) <= 1e-9


def test_c0_distance_bounded_by_support_diameter():
    radius = 0.2
    F = bump(Domain.torus(), (0.9, 0.1), radius, 0.05)
    f = FlowMap(F, steps=1, method=IntegratorType.EXACT_RADIAL)
    distance = c0_distance(f, IdentityMap(Domain.torus()))
    assert 0.0 < distance <= 2 * radius


def test_c0_triangle_inequality():
    domain = Domain.torus()
    f, g, h = (
        FlowMap(bump(domain, (0.5, 0.5), 0.3, mass), steps=1, method=IntegratorType.EXACT_RADIAL)
        for mass in (0.01, 0.004, -0.006)
    )
    assert c0_distance(f, h) <= c0_distance(f, g) + c0_distance(g, h) + 0.02


def test_symmetric_distance_dominates_one_sided():
    domain = Domain.torus()
    f = FlowMap(bump(domain, (0.3, 0.3), 0.2, 0.01), steps=1, method=IntegratorType.EXACT_RADIAL)
    g = FlowMap(bump(domain, (0.6, 0.7), 0.2, 0.02), steps=1, method=IntegratorType.EXACT_RADIAL)
    assert c0_distance(f, g, n_c0=128, symmetric=True) >= c0_distance(f, g, n_c0=128)
