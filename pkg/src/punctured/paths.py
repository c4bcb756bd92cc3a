"""Difference paths of flows, their closure to based loops, and their words."""
from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from ..errors import NearPunctureError, StepUnderflowError, TangentialCrossingError
from ..fgword import Word, reduce_codes
from ..hamflow import (
    Hamiltonian,
    IntegratorFactory,
    IntegratorType,
    RadialHamiltonian,
    integrate,
)
from .constants import (
    BASE_STEPS,
    CHORD_RATIO,
    DELTA_PUNCT,
    H_LOOP,
    MAX_LOOP_STEPS,
    SWEEP_ARC_STEP,
)
from .cuts import CutSystem
from .dump import dump_failure
from .loop import PuncturedLoop, check_puncture_distance, lattice_distance

DEFAULT_CUTS = CutSystem()


@dataclass(frozen=True)
class PathOptions:
    """Sampling and refinement settings for difference paths.

    Loops that cannot be read are dumped to ``dump_dir`` when it is set.
    """

    delta_punct: float = DELTA_PUNCT
    h_loop: float = H_LOOP
    chord_ratio: float = CHORD_RATIO
    base_steps: int = BASE_STEPS
    max_steps: int = MAX_LOOP_STEPS
    method: IntegratorType = IntegratorType.MIDPOINT
    dump_dir: Optional[Path] = None


@dataclass(frozen=True, eq=False)
class DifferencePath:
    """Samples of ``f_t(x) - f_t(y)`` in lifted coordinates.

    ``final`` holds the lifted images of ``x`` and ``y`` at the last time.
    """

    points: np.ndarray
    times: np.ndarray
    final: np.ndarray
    refinements: int = 0

    @property
    def start(self) -> np.ndarray:
        return self.points[0]

    @property
    def end(self) -> np.ndarray:
        return self.points[-1]

    @property
    def wrapped(self) -> np.ndarray:
        return np.mod(self.points, 1.0)


def segments_resolved(points: np.ndarray, h_loop: float, chord_ratio: float) -> bool:
    """Whether every segment is shorter than ``max(h_loop, chord_ratio * puncture distance)``."""
    if len(points) < 2:
        return True
    lengths = np.hypot(*np.diff(points, axis=0).T)
    clearance = lattice_distance(points)
    allowed = np.maximum(h_loop, chord_ratio * np.minimum(clearance[:-1], clearance[1:]))
    return bool(np.all(lengths <= allowed))


def difference_path(
    hamiltonian: Hamiltonian,
    x: np.ndarray,
    y: np.ndarray,
    T: float = 1.0,
    options: PathOptions | None = None,
    n_samples: int | None = None,
) -> DifferencePath:
    """Sample ``f_t(x) - f_t(y)`` for ``t`` in ``[0, T]``, doubling samples until resolved.

    Raises
    ------
    NearPunctureError
        If a sample or segment comes within ``delta_punct`` of the puncture.
    StepUnderflowError
        If resolving the path needs more than ``max_steps`` samples.
    """
    options = options or PathOptions()
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    if np.array_equal(x, y):
        raise ValueError(f"Difference path needs distinct points, got x = y = {x}")
    steps = n_samples or max(1, math.ceil(T * options.base_steps))
    integrator = IntegratorFactory.create(options.method)
    refinements = 0
    while True:
        traj = integrate(
            hamiltonian,
            np.vstack([x, y]),
            0.0,
            T,
            steps,
            integrator=integrator,
            max_steps=options.max_steps,
        )
        path = traj.points[:, 0] - traj.points[:, 1]
        check_puncture_distance(path, options.delta_punct, segments=False)
        if segments_resolved(path, options.h_loop, options.chord_ratio):
            check_puncture_distance(path, options.delta_punct)
            break
        if steps * 2 > options.max_steps:
            error = StepUnderflowError(
                f"Difference path unresolved at {steps} samples (max {options.max_steps})"
            )
            if options.dump_dir is not None:
                dump_failure(close_loop(path, options.delta_punct), error, options.dump_dir)
            raise error
        steps *= 2
        refinements += 1
    if refinements:
        logging.getLogger().debug(f"Difference path resolved after {refinements} refinements")
    return DifferencePath(
        points=path, times=traj.times, final=traj.end, refinements=refinements
    )


def cell_basepoint(v: np.ndarray) -> np.ndarray:
    """Lift of the basepoint in the half-open unit cell containing ``v``."""
    return np.floor(v) + 0.5


def close_loop(
    path: DifferencePath | np.ndarray, delta_punct: float = DELTA_PUNCT
) -> PuncturedLoop:
    """Join the basepoint to both ends of ``path`` by straight connectors.

    Each connector stays inside the cell of its endpoint, so it crosses no
    cut and can only approach the puncture where the endpoint does.

    Raises
    ------
    NearPunctureError
        If either endpoint lies within ``delta_punct`` of the puncture.
    """
    points = path.points if isinstance(path, DifferencePath) else np.asarray(path, dtype=float)
    ends = points[[0, -1]]
    check_puncture_distance(ends, delta_punct, "connector endpoint", segments=False)
    loop_points = np.vstack([cell_basepoint(ends[0]), points, cell_basepoint(ends[1])])
    return PuncturedLoop(loop_points, delta_punct)


def word_of_loop(loop: PuncturedLoop, cuts: CutSystem = DEFAULT_CUTS) -> Word:
    """Reduced word of the crossing sequence of ``loop`` with the cuts.

    Raises
    ------
    NearPunctureError
        If the loop comes within its ``min_puncture_dist`` of the puncture.
    TangentialCrossingError
        If two crossings of one segment cannot be ordered.
    """
    loop.check()
    return reduce_codes(c.code for c in cuts.crossings(loop.points))


def _codes(points: np.ndarray, cuts: CutSystem) -> list[int]:
    return [c.code for c in cuts.crossings(points)]


def rotation_period(
    hamiltonian: Hamiltonian, x: np.ndarray, y: np.ndarray, options: PathOptions
) -> float | None:
    """Period of the difference path when exactly one of ``x``, ``y`` turns about a fixed center.

    Only autonomous radial Hamiltonians sampled in closed form qualify; ``None`` otherwise.
    """
    if options.method is not IntegratorType.EXACT_RADIAL:
        return None
    if not isinstance(hamiltonian, RadialHamiltonian) or hamiltonian.time_dependent:
        return None
    rates = hamiltonian.rotation_angle(np.vstack([x, y]), 0.0, 1.0)
    moving = rates != 0.0
    if int(moving.sum()) != 1:
        return None
    return 2.0 * math.pi / abs(float(rates[moving][0]))


def periodic_pair_word(
    hamiltonian: Hamiltonian,
    x: np.ndarray,
    y: np.ndarray,
    T: float,
    period: float,
    options: PathOptions,
    cuts: CutSystem = DEFAULT_CUTS,
) -> Word:
    """Pair word over ``[0, T]`` read from one resolved period and the remaining arc.

    The difference path repeats itself every ``period``, so the crossings of
    one turn are read once and repeated.

    Raises
    ------
    NearPunctureError
        If the turn, the remaining arc or a connector endpoint nears the puncture.
    """
    turns, rest = divmod(T, period)
    turn = difference_path(hamiltonian, x, y, period, options).points
    codes = _codes(np.vstack([cell_basepoint(turn[0]), turn]), cuts)
    codes += _codes(turn, cuts) * (int(turns) - 1)
    tail = difference_path(hamiltonian, x, y, rest, options).points if rest > 0.0 else turn[:1]
    codes += _codes(np.vstack([tail, cell_basepoint(tail[-1])]), cuts)
    check_puncture_distance(
        np.vstack([turn[0], tail[-1]]), options.delta_punct, "connector endpoint", segments=False
    )
    logging.getLogger().debug(f"Pair word read from {int(turns)} turns of period {period:.3g}")
    return reduce_codes(codes)


def _closest_approach(u: complex, v: complex, sweep: float) -> float:
    """Smallest ``|u - e^{is} v|`` for ``s`` between 0 and ``sweep``."""
    aligned = cmath.phase(u) - cmath.phase(v)
    low, high = min(0.0, sweep), max(0.0, sweep)
    k = math.ceil((low - aligned) / (2.0 * math.pi))
    if aligned + 2.0 * math.pi * k <= high:
        return abs(abs(u) - abs(v))
    return min(abs(u - v), abs(u - cmath.exp(1j * sweep) * v))


def _winding_angle(u: complex, v: complex, turn_u: float, turn_v: float) -> float:
    """Continuous change of ``arg(e^{i a t} u - e^{i b t} v)`` for ``t`` in ``[0, 1]``.

    ``a = turn_u`` and ``b = turn_v``; the difference must avoid 0.
    """
    sweep = turn_v - turn_u
    if abs(v) > abs(u):
        q = u / v
        inner = sweep + cmath.phase(1 - q * cmath.exp(-1j * sweep)) - cmath.phase(1 - q)
    else:
        q = v / u
        inner = cmath.phase(1 - q * cmath.exp(1j * sweep)) - cmath.phase(1 - q)
    return turn_u + inner


def radial_pair_word(
    hamiltonian: Hamiltonian,
    x: np.ndarray,
    y: np.ndarray,
    T: float,
    options: PathOptions,
    cuts: CutSystem = DEFAULT_CUTS,
) -> Word | None:
    """Pair word of an autonomous radial flow read from the winding of the difference path.

    Both points turn about the same center, so ``f_t(x) - f_t(y)`` stays
    within ``|u| + |v|`` of one lattice point, where ``u`` and ``v`` are their
    offsets from the center. When that is below 1 no other lattice point is
    reachable, and the word only depends on the angle swept around that
    point, which is known in closed form. The path is replaced by an arc
    sweeping the same angle at its closest approach.

    Returns ``None`` when the flow or the pair does not qualify.

    Raises
    ------
    NearPunctureError
        If the path comes within ``options.delta_punct`` of the lattice point.
    """
    if options.method is not IntegratorType.EXACT_RADIAL:
        return None
    if not isinstance(hamiltonian, RadialHamiltonian) or hamiltonian.time_dependent:
        return None
    pair = np.vstack([x, y])
    offsets = hamiltonian.domain.displacement(np.asarray(hamiltonian.center), pair)
    u, v = complex(*offsets[0]), complex(*offsets[1])
    if abs(u) + abs(v) >= 1.0:
        return None

    turn_u, turn_v = (float(a) for a in hamiltonian.rotation_angle(pair, 0.0, T))
    closest = _closest_approach(u, v, turn_v - turn_u)
    if closest < options.delta_punct:
        raise NearPunctureError(
            f"pair path passes within {closest:.3e} of the puncture "
            f"(minimum {options.delta_punct:.3e})"
        )
    start = x - y
    moved = hamiltonian.rotate(pair, 0.0, T)
    hub = np.round(start - (offsets[0] - offsets[1]))
    theta = math.atan2(*(start - hub)[::-1])
    swept = _winding_angle(u, v, turn_u, turn_v)
    count = max(2, math.ceil(abs(swept) / SWEEP_ARC_STEP) + 1)
    angles = np.linspace(theta, theta + swept, count)
    arc = hub + closest * np.column_stack([np.cos(angles), np.sin(angles)])
    path = np.vstack([start, arc, moved[0] - moved[1]])
    return word_of_loop(close_loop(path, options.delta_punct), cuts)


def pair_word(
    hamiltonian: Hamiltonian,
    x: np.ndarray,
    y: np.ndarray,
    T: float = 1.0,
    options: PathOptions | None = None,
) -> Word:
    """Word of the closed difference loop of the pair ``(x, y)`` over ``[0, T]``.

    Radial flows sampled in closed form skip path resolution: the word is read
    from the swept angle when the pair stays near one lattice point, and from
    one repeated turn when only one point of the pair moves.
    """
    options = options or PathOptions()
    word = radial_pair_word(hamiltonian, x, y, T, options)
    if word is not None:
        return word
    period = rotation_period(hamiltonian, x, y, options)
    if period is not None and period < T:
        return periodic_pair_word(hamiltonian, x, y, T, period, options)
    path = difference_path(hamiltonian, x, y, T, options)
    loop = close_loop(path, options.delta_punct)
    try:
        return word_of_loop(loop)
    except TangentialCrossingError as e:
        if options.dump_dir is not None:
            dump_failure(loop, e, options.dump_dir)
        raise
