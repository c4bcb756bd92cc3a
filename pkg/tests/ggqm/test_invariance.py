import pytest

from src.fgword import KernelFactory, KernelType
from src.ggqm import gg_estimate, shift_invariance, subgroup_linearity
from src.hamflow import (
    Domain,
    HamiltonianFactory,
    HamiltonianPreset,
    IntegratorType,
    ZeroHamiltonian,
    bump,
)
from src.punctured import PathOptions

EXACT = PathOptions(method=IntegratorType.EXACT_RADIAL)


@pytest.fixture(scope="module")
def kernels():
    return [KernelFactory.create(KernelType.AB), KernelFactory.create(KernelType.AAB)]


@pytest.fixture(scope="module")
def torus_bump():
    return bump(Domain.torus(), (0.5, 0.5), 0.25, 0.1)


def test_zero_hamiltonian_is_trivially_invariant(kernels):
    rows = shift_invariance(kernels, ZeroHamiltonian(Domain.torus()), p=2, n_samples=16)
    assert [row.kernel for row in rows] == ["ab", "aab"]
    assert all(row.within and row.value == 0.0 for row in rows)


def test_scaled_hamiltonian_generates_the_time_s_map(kernels, torus_bump):
    ab = kernels[0]
    twice = gg_estimate(ab, torus_bump.scaled(2.0), p=2, n_samples=40, seed=9, options=EXACT)
    longer = gg_estimate(ab, torus_bump, p=4, n_samples=40, seed=9, options=EXACT)
    assert twice.value == 2.0 * longer.value


@pytest.mark.slow
def test_estimates_are_invariant_under_a_torus_shift(kernels, torus_bump):
    rows = shift_invariance(
        kernels, torus_bump, p=8, n_samples=4000, seed=3, options=EXACT, extrapolate=True
    )
    assert len(rows) == 2
    for row in rows:
        assert row.label == "shift=(0.25, 0.125)"
        assert row.within, row


@pytest.mark.slow
def test_estimates_are_linear_on_the_time_s_maps(kernels, torus_bump):
    rows = subgroup_linearity(
        kernels, torus_bump, p=8, n_samples=4000, seed=5, options=EXACT, extrapolate=True
    )
    assert [row.label for row in rows] == ["s=1", "s=1", "s=2", "s=2", "s=3", "s=3"]
    for row in rows:
        assert row.within, row
    ab_rows = [row for row in rows if row.kernel == "ab"]
    assert ab_rows[2].expected == pytest.approx(3.0 * ab_rows[0].value)


def test_linearity_needs_an_autonomous_hamiltonian(kernels):
    pulsed = HamiltonianFactory.create(
        HamiltonianPreset.PULSED_BUMP, radius=0.25, mass=0.1, center=[0.5, 0.5]
    )
    with pytest.raises(ValueError, match="autonomous"):
        subgroup_linearity(kernels, pulsed, n_samples=4)


def test_linearity_scales_must_be_positive(kernels, torus_bump):
    with pytest.raises(ValueError, match="positive integers"):
        subgroup_linearity(kernels, torus_bump, scales=(0, 1), n_samples=4)
