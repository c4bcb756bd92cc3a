"""Calabi integral of compactly supported Hamiltonians."""
from __future__ import annotations

import numpy as np
from scipy.special import roots_legendre

from ..errors import UnsupportedDomainError
from .constants import N_QUAD, N_TIME_QUAD
from .protocol import Hamiltonian


def _quadrature_nodes(hamiltonian: Hamiltonian, n_quad: int) -> tuple[np.ndarray, float]:
    support = hamiltonian.support
    if support.is_full:
        if hamiltonian.domain.is_torus:
            raise UnsupportedDomainError(
                f"Calabi is undefined for {hamiltonian.name}: full support on the torus"
            )
        low, width = np.array([-1.0, -1.0]), 2.0
    else:
        low, width = np.asarray(support.center) - support.radius, 2.0 * support.radius
    h = width / n_quad
    axis = (np.arange(n_quad) + 0.5) * h
    xs, ys = np.meshgrid(low[0] + axis, low[1] + axis, indexing="ij")
    nodes = np.column_stack([xs.ravel(), ys.ravel()])
    if support.is_full:
        nodes = nodes[hamiltonian.domain.contains(nodes)]
    return nodes, h * h


def calabi(hamiltonian: Hamiltonian, n_quad: int = N_QUAD, n_time: int = N_TIME_QUAD) -> float:
    """``int_0^1 int F(x, t) dx dt`` by midpoint tensor quadrature in space.

    Time is integrated by Gauss-Legendre when the Hamiltonian depends on time.

    Raises
    ------
    UnsupportedDomainError
        If the Hamiltonian has full support on the torus.
    """
    support = hamiltonian.support
    if support.is_empty:
        return 0.0
    nodes, cell_area = _quadrature_nodes(hamiltonian, n_quad)
    if not hamiltonian.time_dependent:
        return float(np.sum(hamiltonian.value(nodes, 0.0)) * cell_area)
    roots, weights = roots_legendre(n_time)
    times = 0.5 * (roots + 1.0)
    total = sum(
        0.5 * weight * float(np.sum(hamiltonian.value(nodes, t)))
        for t, weight in zip(times, weights)
    )
    return float(total * cell_area)
