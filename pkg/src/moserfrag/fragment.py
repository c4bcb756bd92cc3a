"""Splitting a C0-small disc map into a strip factor and two half-disc factors.

The isotopy ``h_t(z) = f_tau(t)(c(t) z) / c(t)`` runs from the identity to
``f``. While ``c`` is large it only moves a tiny disc around the origin;
afterwards ``c`` returns to 1 with ``tau = 1``. Its Hamiltonian, cut off to
the strip ``|q| < 2 eps``, generates ``theta``, which agrees with ``f`` on a
thinner strip ``|q| < kappa``. ``theta^-1 f`` is then the identity on that
strip and splits into commuting factors on either side of it.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.special import roots_legendre

from ..errors import DisplacementTooLargeError, KappaNotFoundError, UnsupportedDomainError
from ..hamflow import (
    Hamiltonian,
    IntegratorType,
    RadialHamiltonian,
    cutoff,
    cutoff_derivative,
    integrate,
    smooth_step,
    smooth_step_derivative,
)
from ..hamflow.constants import DEFAULT_STEPS
from .constants import (
    FRAGMENT_C_MARGIN,
    FRAGMENT_DELTA,
    FRAGMENT_FD_STEP,
    FRAGMENT_GRID,
    FRAGMENT_KAPPA_ITERATIONS,
    FRAGMENT_KAPPA_MIN,
    FRAGMENT_KAPPA_TIMES,
    FRAGMENT_PLATEAU,
    FRAGMENT_QUAD_NODES,
    FRAGMENT_T_STEPS,
    TOL_FRAG,
)
from .grid import Grid, GridDiffeo, rk4_flow, support_box


def default_method(hamiltonian: Hamiltonian) -> IntegratorType:
    """Closed-form rotation for radial or empty Hamiltonians, implicit midpoint otherwise."""
    if isinstance(hamiltonian, RadialHamiltonian) or hamiltonian.support.is_empty:
        return IntegratorType.EXACT_RADIAL
    return IntegratorType.MIDPOINT


class RescaledIsotopy:
    """``h_t = R_{1/c(t)} f_tau(t) R_{c(t)}`` with its generator and Hamiltonian.

    ``c`` ramps from 1 to ``C = FRAGMENT_C_MARGIN / (2 eps)`` on
    ``[delta/4, delta]`` and back on ``[1 - delta, 1 - delta/4]``; ``tau``
    runs from 0 to 1 on ``[delta, 1 - delta]``. The two phases never overlap.
    """

    def __init__(
        self,
        hamiltonian: Hamiltonian,
        epsilon: float,
        delta: float = FRAGMENT_DELTA,
        method: Optional[IntegratorType] = None,
        flow_steps: int = DEFAULT_STEPS,
    ):
        self.hamiltonian = hamiltonian
        self.epsilon = epsilon
        self.delta = delta
        self.method = method or default_method(hamiltonian)
        self.flow_steps = flow_steps
        self.scale = FRAGMENT_C_MARGIN / (2.0 * epsilon)
        support = hamiltonian.support
        if support.is_empty:
            self.reach = 0.0
        elif support.is_full:
            self.reach = 1.0
        else:
            self.reach = min(float(np.hypot(*support.center)) + support.radius, 1.0)

    @property
    def middle(self) -> tuple[float, float]:
        return self.delta, 1.0 - self.delta

    @property
    def ending(self) -> tuple[float, float]:
        return 1.0 - self.delta, 1.0 - 0.25 * self.delta

    def _ramp(self, t: float) -> tuple[float, float]:
        width = 0.75 * self.delta
        if t <= 0.5:
            u, sign = (t - 0.25 * self.delta) / width, 1.0
        else:
            u, sign = (1.0 - 0.25 * self.delta - t) / width, -1.0
        return float(smooth_step(u)), sign * float(smooth_step_derivative(u)) / width

    def c(self, t: float) -> float:
        return 1.0 + (self.scale - 1.0) * self._ramp(t)[0]

    def dc(self, t: float) -> float:
        return (self.scale - 1.0) * self._ramp(t)[1]

    def tau(self, t: float) -> float:
        return float(smooth_step((t - self.delta) / (1.0 - 2.0 * self.delta)))

    def dtau(self, t: float) -> float:
        width = 1.0 - 2.0 * self.delta
        return float(smooth_step_derivative((t - self.delta) / width)) / width

    def flow(self, points: np.ndarray, t0: float, t1: float) -> np.ndarray:
        """Flow of the Hamiltonian itself, in the plane."""
        if t0 == t1 or len(points) == 0:
            return points.copy()
        return integrate(
            self.hamiltonian, points, t0, t1, self.flow_steps, self.method
        ).end

    def __call__(self, points: np.ndarray, t: float) -> np.ndarray:
        """``h_t`` at ``points``."""
        tau, c = self.tau(t), self.c(t)
        if tau == 0.0:
            return points.copy()
        return self.flow(c * points, 0.0, tau) / c

    def generator(self, points: np.ndarray, t: float) -> np.ndarray:
        """Velocity ``d/dt h_t`` at the current positions ``points``."""
        velocity = np.zeros_like(points)
        c = self.c(t)
        active = np.hypot(points[:, 0], points[:, 1]) * c < self.reach
        if not np.any(active):
            return velocity
        w = points[active]
        dtau, dc = self.dtau(t), self.dc(t)
        if dtau != 0.0:
            tau = self.tau(t)
            velocity[active] = dtau * self.hamiltonian.sgrad(c * w, tau) / c
        elif dc != 0.0:
            u = self.flow(c * w, 1.0, 0.0)
            h = FRAGMENT_FD_STEP
            ahead, behind = self.flow((1.0 + h) * u, 0.0, 1.0), self.flow((1.0 - h) * u, 0.0, 1.0)
            du = (ahead - behind) / (2.0 * h)
            velocity[active] = (dc / c) * (du / c - w)
        return velocity

    def hamiltonian_value(self, points: np.ndarray, t: float) -> np.ndarray:
        """Hamiltonian of ``h_t``, normalized to vanish far from the origin.

        Closed form while ``tau`` moves; otherwise the integral of the
        generator's ``q`` component along ``p`` across its support.
        """
        values = np.zeros(len(points))
        c = self.c(t)
        bound = self.reach / c
        dtau, dc = self.dtau(t), self.dc(t)
        if dtau != 0.0:
            active = np.hypot(points[:, 0], points[:, 1]) < bound
            value = self.hamiltonian.value(c * points[active], self.tau(t))
            values[active] = dtau * value / c**2
            return values
        if dc == 0.0:
            return values
        active = (np.abs(points[:, 1]) < bound) & (points[:, 0] > -bound)
        if not np.any(active):
            return values
        p = np.minimum(points[active, 0], bound)
        q = points[active, 1]
        roots, weights = roots_legendre(FRAGMENT_QUAD_NODES)
        half = 0.5 * (p + bound)
        s = -bound + half[:, None] * (roots[None, :] + 1.0)
        nodes = np.column_stack([s.ravel(), np.repeat(q, FRAGMENT_QUAD_NODES)])
        integrand = self.generator(nodes, t)[:, 1].reshape(s.shape)
        values[active] = half * (integrand @ weights)
        return values


@dataclass(frozen=True)
class FragmentResult:
    """``f = theta phi_plus phi_minus`` with the measured checks."""

    theta: GridDiffeo
    phi_plus: GridDiffeo
    phi_minus: GridDiffeo
    epsilon: float
    kappa: float
    displacement: float
    composition_residual: float
    strip_residual: float
    theta_in_strip: bool
    plus_in_upper: bool
    minus_in_lower: bool
    commute_defect: float

    @property
    def supports_ok(self) -> bool:
        return self.theta_in_strip and self.plus_in_upper and self.minus_in_lower

    def passed(self, tol: float = TOL_FRAG) -> bool:
        return self.supports_ok and self.commute_defect == 0.0 and self.composition_residual <= tol


class _StripFlow:
    """Flow of the cut-off field ``chi Y + H sgrad chi`` inside the strip ``|q| < 2 eps``."""

    def __init__(self, isotopy: RescaledIsotopy, steps: int):
        self.isotopy = isotopy
        self.steps = steps
        self.width = 2.0 * isotopy.epsilon
        self.plateau = FRAGMENT_PLATEAU * self.width

    def velocity(self, points: np.ndarray, t: float) -> np.ndarray:
        field = np.zeros_like(points)
        q = points[:, 1]
        inside = (np.abs(q) < self.width) & (np.hypot(points[:, 0], q) < 1.0)
        if not np.any(inside):
            return field
        w = points[inside]
        chi = cutoff(w[:, 1], self.plateau, self.width)
        local = chi[:, None] * self.isotopy.generator(w, t)
        band = (chi > 0.0) & (chi < 1.0)
        if np.any(band):
            dchi = cutoff_derivative(w[band, 1], self.plateau, self.width)
            local[band, 0] -= self.isotopy.hamiltonian_value(w[band], t) * dchi
        field[inside] = local
        return field

    def __call__(self, points: np.ndarray, inverse: bool = False) -> np.ndarray:
        images = np.array(points, dtype=float)
        moving = np.abs(images[:, 1]) < self.width
        if not np.any(moving):
            return images
        phases = [self.isotopy.middle, self.isotopy.ending]
        current = images[moving]
        if inverse:
            for t0, t1 in reversed(phases):
                current = rk4_flow(self.velocity, current, t1, t0, self.steps)
        else:
            for t0, t1 in phases:
                current = rk4_flow(self.velocity, current, t0, t1, self.steps)
        images[moving] = current
        return images


def _find_kappa(isotopy: RescaledIsotopy, samples: np.ndarray, limit: float) -> float:
    """Largest ``kappa`` such that ``h_t`` keeps ``|q| < kappa`` within ``|q| <= limit``."""
    times = np.linspace(0.0, 1.0, FRAGMENT_KAPPA_TIMES)
    reach = np.abs(samples[:, 1])
    for t in times:
        reach = np.maximum(reach, np.abs(isotopy(samples, float(t))[:, 1]))
    start = np.abs(samples[:, 1])

    def admissible(kappa: float) -> bool:
        inside = start < kappa
        return not np.any(inside) or float(reach[inside].max()) <= limit

    low, high = FRAGMENT_KAPPA_MIN, 2.0 * isotopy.epsilon
    if not admissible(low):
        raise KappaNotFoundError(
            f"h_t leaves |q| <= {limit:.3g} already from |q| < {low:g}"
        )
    for _ in range(FRAGMENT_KAPPA_ITERATIONS):
        mid = 0.5 * (low + high)
        if admissible(mid):
            low = mid
        else:
            high = mid
    return low


def _half_flow(
    isotopy: RescaledIsotopy,
    strip: _StripFlow,
    grid: Grid,
    f_nodes: np.ndarray,
    disc: np.ndarray,
    sign: float,
) -> tuple[np.ndarray, np.ndarray, bool]:
    """``theta^-1 f`` and its inverse flowed from the half-disc ``sign q > 0`` alone.

    Every other node is fixed. The flag tells whether both maps keep the
    half-disc in itself.
    """
    nodes = grid.points()
    half = disc & (sign * nodes[:, 1] > 0.0)
    forward, backward = nodes.copy(), nodes.copy()
    if np.any(half):
        forward[half] = strip(f_nodes[half], inverse=True)
        backward[half] = isotopy.flow(strip(nodes[half]), 1.0, 0.0)
    stays = bool(
        np.all(sign * forward[half, 1] > 0.0) and np.all(sign * backward[half, 1] > 0.0)
    )
    shape = grid.nodes().shape
    return forward.reshape(shape), backward.reshape(shape), stays


def _box_within(box, y_low: float, y_high: float):
    if box is None:
        return None
    return box[0], box[1], max(box[2], y_low), min(box[3], y_high)


def disc_fragment(
    hamiltonian: Hamiltonian,
    epsilon: float,
    n: int = FRAGMENT_GRID,
    delta: float = FRAGMENT_DELTA,
    t_steps: int = FRAGMENT_T_STEPS,
    method: Optional[IntegratorType] = None,
    flow_steps: int = DEFAULT_STEPS,
) -> FragmentResult:
    """Decompose the time-1 map ``f`` of a disc Hamiltonian as ``theta phi_plus phi_minus``.

    ``theta`` is supported in the strip ``|q| < 2 eps``, ``phi_plus`` in
    ``q > 0`` and ``phi_minus`` in ``q < 0``, all inside the unit disc.
    Maps are sampled on an ``n x n`` grid of ``[-1, 1]^2``.

    Raises
    ------
    UnsupportedDomainError
        If the Hamiltonian does not live on the disc.
    DisplacementTooLargeError
        If some grid node moves by ``eps`` or more under ``f``.
    KappaNotFoundError
        If no strip around ``q = 0`` stays within the cutoff plateau.
    """
    if hamiltonian.domain.is_torus:
        raise UnsupportedDomainError("Fragmentation is implemented on the disc only")
    if not 0.0 < epsilon < 0.5:
        raise ValueError(f"epsilon must be in (0, 0.5), got: {epsilon}")
    if not 0.0 < delta < 0.5:
        raise ValueError(f"delta must be in (0, 0.5), got: {delta}")
    logger = logging.getLogger()

    grid = Grid.square(n)
    nodes = grid.points()
    disc = np.hypot(nodes[:, 0], nodes[:, 1]) < 1.0
    isotopy = RescaledIsotopy(hamiltonian, epsilon, delta, method, flow_steps)

    f_nodes = nodes.copy()
    f_nodes[disc] = isotopy.flow(nodes[disc], 0.0, 1.0)
    displacement = float(np.max(np.hypot(*(f_nodes - nodes).T)))
    if displacement >= epsilon:
        raise DisplacementTooLargeError(
            f"Time-1 map moves a grid node by {displacement:.3g} >= eps = {epsilon}"
        )

    strip = _StripFlow(isotopy, t_steps)
    samples = nodes[disc & (np.abs(nodes[:, 1]) < strip.width)]
    kappa = _find_kappa(isotopy, samples, strip.plateau)
    logger.debug(f"Fragmentation eps={epsilon}: displacement {displacement:.3g}, kappa {kappa:.4g}")

    node_grid = grid.nodes()
    shape = node_grid.shape
    q = node_grid[..., 1]
    theta_forward = strip(nodes).reshape(shape)
    theta_backward = strip(nodes, inverse=True).reshape(shape)
    moved = np.any(theta_forward != node_grid, axis=-1)
    moved |= np.any(theta_backward != node_grid, axis=-1)
    width = strip.width
    theta = GridDiffeo(
        grid, theta_forward, theta_backward, _box_within(support_box(grid, moved), -width, width)
    )

    row = float(grid.ys[grid.ys > 0.0].min())
    halves, invariant = [], []
    for sign in (1.0, -1.0):
        forward, backward, stays = _half_flow(isotopy, strip, grid, f_nodes, disc, sign)
        changed = np.any(forward != node_grid, axis=-1) | np.any(backward != node_grid, axis=-1)
        y_low, y_high = (row, 1.0) if sign > 0.0 else (-1.0, -row)
        box = _box_within(support_box(grid, changed), y_low, y_high)
        halves.append(GridDiffeo(grid, forward, backward, box))
        invariant.append(stays)
    phi_plus, phi_minus = halves

    outside_disc = ~disc.reshape(grid.shape)

    def fixed(diffeo: GridDiffeo, region: np.ndarray) -> bool:
        return bool(
            np.all(diffeo.forward[region] == node_grid[region])
            and np.all(diffeo.backward[region] == node_grid[region])
        )

    theta_in_strip = fixed(theta, (np.abs(q) >= width) | outside_disc)
    plus_in_upper = invariant[0] and fixed(phi_plus, (q <= 0.0) | outside_disc)
    minus_in_lower = invariant[1] and fixed(phi_minus, (q >= 0.0) | outside_disc)

    inside = nodes[disc]
    lowered = phi_minus(inside)
    composed = strip(phi_plus(lowered))
    composition = float(np.max(np.hypot(*(composed - f_nodes[disc]).T)))
    swapped = phi_minus(phi_plus(inside))
    commute = float(np.max(np.abs(phi_plus(lowered) - swapped)))

    thin = (np.abs(q) < kappa).reshape(-1) & disc
    drift = strip(f_nodes[thin], inverse=True) - nodes[thin]
    strip_residual = float(np.max(np.hypot(*drift.T))) if len(drift) else 0.0

    result = FragmentResult(
        theta=theta,
        phi_plus=phi_plus,
        phi_minus=phi_minus,
        epsilon=epsilon,
        kappa=kappa,
        displacement=displacement,
        composition_residual=composition,
        strip_residual=strip_residual,
        theta_in_strip=theta_in_strip,
        plus_in_upper=plus_in_upper,
        minus_in_lower=minus_in_lower,
        commute_defect=commute,
    )
    logger.info(
        f"Fragmented '{hamiltonian.name}' with eps={epsilon}: kappa {kappa:.4g}, "
        f"composition residual {composition:.3g}, supports {'ok' if result.supports_ok else 'FAIL'}"
    )
    return result
