"""Extending a curve map near the core circle of an annulus to a C0-small diffeomorphism.

Chart: ``x`` in ``[0, 1)`` periodic, ``y`` in ``[-1, 1]``; the core circle
``L`` is ``y = 0``.

The inverse map is assembled in stages. The target is lifted by
``CURVE_LIFT * eps``. Markers at spacing at most ``eps`` send vertical rays
up to their first hit on the lifted curve, and a rectangle move around each
ray pulls the hit arc down onto ``L``. The arcs left between consecutive
markers are then straightened: runs where the target turns back in ``x``
are combed out by horizontal moves, and a vertical slide finishes each arc.
"""
from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import PchipInterpolator

from ..errors import NotEmbeddedError, NotGraphNearMarkersError
from ..hamflow import as_points, cutoff, cutoff_derivative
from .constants import (
    CURVE_FLOW_STEPS,
    CURVE_GRID,
    CURVE_INNER,
    CURVE_LIFT,
    CURVE_OUTER,
    FOLD_PAD,
    FOLD_REACH,
    MARKER_REFINEMENTS,
    MARKER_WINDOW,
)
from .grid import Grid, GridDiffeo, rk4_flow, support_box

_PCHIP_PAD = 3
_NEWTON_STEPS = 12


def _wrap(dx: np.ndarray) -> np.ndarray:
    return dx - np.round(dx)


def _increments(vertices: np.ndarray) -> np.ndarray:
    """Minimal-image steps between consecutive vertices of the closed polyline."""
    steps = np.roll(vertices, -1, axis=0) - vertices
    steps[:, 0] -= np.round(steps[:, 0])
    return steps


def _lifted(vertices: np.ndarray) -> np.ndarray:
    """Unwrapped vertices, with the closing vertex appended."""
    steps = _increments(vertices)
    return vertices[0] + np.vstack([np.zeros((1, 2)), np.cumsum(steps, axis=0)])


def winding(vertices: np.ndarray) -> int:
    """Number of times the closed polyline goes around the annulus."""
    return int(np.round(_increments(vertices)[:, 0].sum()))


def _cross(o: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """z-component of ``(a - o) x (b - o)``."""
    u, v = a - o, b - o
    return u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]


def self_intersections(vertices: np.ndarray) -> list[tuple[int, int]]:
    """Index pairs of non-adjacent segments that cross on the annulus."""
    lifted = _lifted(vertices)
    start, end = lifted[:-1], lifted[1:]
    m = len(start)
    pairs = set()
    for shift in (-1.0, 0.0, 1.0):
        offset = np.array([shift, 0.0])
        a, b = start[:, None, :], end[:, None, :]
        c, d = (start + offset)[None, :, :], (end + offset)[None, :, :]
        d1, d2 = _cross(a, b, c), _cross(a, b, d)
        d3, d4 = _cross(c, d, a), _cross(c, d, b)
        crossing = (d1 * d2 < 0) & (d3 * d4 < 0)
        for k, j in zip(*np.nonzero(crossing)):
            if k < j and (j - k) % m not in (1, m - 1):
                pairs.add((int(k), int(j)))
    return sorted(pairs)


def _slide(points: np.ndarray, amount: np.ndarray) -> np.ndarray:
    """Time-one flow of ``amount chi(y) d/dy``, a translation where ``chi = 1``.

    ``amount`` is constant along each column, so slides add up.
    """

    def velocity(p: np.ndarray, t: float) -> np.ndarray:
        rate = amount * cutoff(p[:, 1], CURVE_INNER, CURVE_OUTER)
        return np.column_stack([np.zeros(len(p)), rate])

    return rk4_flow(velocity, points, 0.0, 1.0, CURVE_FLOW_STEPS)


def _periodic_pchip(s: np.ndarray, values: np.ndarray) -> Callable[[np.ndarray], np.ndarray]:
    """Shape-preserving interpolant through ``(s_k mod 1, values_k)``."""
    s = np.mod(s, 1.0)
    order = np.argsort(s, kind="stable")
    s, values = s[order], values[order]
    pad = min(_PCHIP_PAD, len(s))
    knots = np.concatenate([s[-pad:] - 1.0, s, s[:pad] + 1.0])
    data = np.concatenate([values[-pad:], values, values[:pad]])
    spline = PchipInterpolator(knots, data)

    def profile(x: np.ndarray) -> np.ndarray:
        return spline(np.mod(np.asarray(x, dtype=float), 1.0))

    return profile


@dataclass(frozen=True)
class _Fold:
    """Horizontal move taking a graph run at levels ``[low, high]`` onto a fold.

    On level ``y`` the point ``s(y)`` is pushed by ``shift(y)``; the push
    fades out within ``reach`` on both sides, so every level moves monotonically.
    """

    low: float
    high: float
    reach: float
    s: PchipInterpolator
    shift: PchipInterpolator
    extent: tuple[float, float]
    strip: tuple[float, float]

    def push(self, points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Displacement along x and its x-derivative."""
        x, y = points[:, 0], points[:, 1]
        dx, slope = np.zeros(len(points)), np.zeros(len(points))
        on = (y >= self.low) & (y <= self.high)
        if np.any(on):
            level = y[on]
            u = _wrap(x[on] - self.s(level)) / self.reach
            amount = self.shift(level)
            dx[on] = amount * cutoff(u, 0.0, 1.0)
            slope[on] = amount * cutoff_derivative(u, 0.0, 1.0) / self.reach
        return dx, slope


@dataclass(frozen=True)
class _Markers:
    """Marker abscissae and the half-width of their rectangles."""

    xs: np.ndarray
    half: float
    refinements: int

    def window(self, x: np.ndarray) -> np.ndarray:
        """1 on the middle half of every rectangle, 0 outside all of them."""
        offset = _wrap(np.asarray(x, dtype=float)[:, None] - self.xs[None, :])
        return cutoff(offset, 0.5 * self.half, self.half).sum(axis=1)


@dataclass(frozen=True)
class CurveMap:
    """``psi``, taking ``L`` onto the target, as a composition of closed-form stages.

    ``psi = lift^-1 . fold . move^-1 . raise`` where ``raise`` slides ``L``
    onto the curve left after the rectangle moves, ``move`` slides by
    ``-W (g + lift)`` with ``W`` the marker windows, and ``fold`` pushes
    the straightened runs back into the target's folds.
    """

    lift: float
    markers: _Markers
    profile: Callable[[np.ndarray], np.ndarray]
    folds: tuple[_Fold, ...]

    def _moved(self, x: np.ndarray) -> np.ndarray:
        return self.markers.window(x) * (self.profile(x) + self.lift)

    def _raised(self, x: np.ndarray) -> np.ndarray:
        return (1.0 - self.markers.window(x)) * (self.profile(x) + self.lift)

    def _push(self, points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        dx, slope = np.zeros(len(points)), np.zeros(len(points))
        for fold in self.folds:
            d, s = fold.push(points)
            dx += d
            slope += s
        return dx, slope

    def _fold(self, points: np.ndarray) -> np.ndarray:
        out = points.copy()
        out[:, 0] += self._push(points)[0]
        return out

    def _unfold(self, points: np.ndarray) -> np.ndarray:
        if not self.folds:
            return points.copy()
        goal = points[:, 0]
        guess = points.copy()
        guess[:, 0] = goal - self._push(points)[0]
        for _ in range(_NEWTON_STEPS):
            dx, slope = self._push(guess)
            guess[:, 0] -= (guess[:, 0] + dx - goal) / (1.0 + slope)
        return guess

    def __call__(self, points: np.ndarray) -> np.ndarray:
        p = as_points(points)
        p = _slide(p, self._raised(p[:, 0]))
        p = _slide(p, self._moved(p[:, 0]))
        p = self._fold(p)
        return _slide(p, np.full(len(p), -self.lift))

    def inverse(self, points: np.ndarray) -> np.ndarray:
        p = as_points(points)
        p = _slide(p, np.full(len(p), self.lift))
        p = self._unfold(p)
        p = _slide(p, -self._moved(p[:, 0]))
        return _slide(p, -self._raised(p[:, 0]))

    def stage_norms(self, points: np.ndarray) -> tuple[float, float, float]:
        """Largest displacement of the lift, the rectangle moves and the straightening."""
        p = as_points(points)
        lifted = _slide(p, np.full(len(p), self.lift))
        moved = _slide(p, -self._moved(p[:, 0]))
        q = _slide(p, self._moved(p[:, 0]))
        q = self._unfold(q)
        q = _slide(q, -self._moved(q[:, 0]))
        straightened = _slide(q, -self._raised(q[:, 0]))

        def largest(images: np.ndarray) -> float:
            shift = images - p
            return float(np.max(np.hypot(_wrap(shift[:, 0]), shift[:, 1])))

        return largest(lifted), largest(moved), largest(straightened)


@dataclass(frozen=True)
class CurveExtension:
    """``psi`` with ``psi(L) = target`` and the measured constants.

    ``exact`` evaluates the stages in closed form; ``psi`` samples it on the
    grid. ``grid_residual`` is the vertex residual of the sampled map.
    """

    psi: GridDiffeo
    exact: CurveMap
    epsilon: float
    markers: np.ndarray
    refinements: int
    folds: int
    stage_norms: tuple[float, float, float]
    c_prime: float
    vertex_residual: float
    grid_residual: float
    boundary_identity: bool


def _rolled(vertices: np.ndarray) -> np.ndarray:
    """Vertices restarted in the middle of the longest forward run."""
    forward = _increments(vertices)[:, 0] > 0.0
    if forward.all():
        return vertices
    m = len(forward)
    best, best_start, run = 0, 0, 0
    for k in range(2 * m):
        run = run + 1 if forward[k % m] else 0
        if run > best:
            best, best_start = min(run, m), k - run + 1
    return np.roll(vertices, -((best_start + best // 2) % m), axis=0)


def _close_run(x: np.ndarray, a: int, b: int, pad: float) -> tuple[int, int]:
    """Widen ``[a, b]`` until ``x[a]`` lies left of and ``x[b]`` right of all between."""
    while True:
        if not x[a] + pad < x[a + 1 : b + 1].min():
            a -= 1
        elif not x[b] - pad > x[a:b].max():
            b += 1
        else:
            return a, b
        if a < 0 or b >= len(x):
            raise NotGraphNearMarkersError(
                f"Target turns back near x={np.mod(x[max(a, 0)], 1.0):.4g} "
                "over a whole turn of the annulus"
            )


def _fold_runs(x: np.ndarray) -> list[tuple[int, int]]:
    """Vertex ranges closed around each run where ``x`` goes backward."""
    runs: list[tuple[int, int]] = []
    back = np.diff(x) <= 0.0
    k = 0
    while k < len(back):
        if not back[k]:
            k += 1
            continue
        j = k
        while j + 1 < len(back) and back[j + 1]:
            j += 1
        pad = FOLD_PAD * (x[k] - x[j + 1])
        a, b = _close_run(x, k, j + 1, pad)
        while runs and a <= runs[-1][1]:
            a0, b0 = runs.pop()
            a, b = _close_run(x, min(a, a0), max(b, b0), pad)
        runs.append((a, b))
        k = max(j + 1, b)
    return runs


def _retimed(x: np.ndarray, y: np.ndarray, runs: list[tuple[int, int]]) -> np.ndarray:
    """Strictly increasing parameters: ``x`` off the folds, arclength across them."""
    s = x.copy()
    for a, b in runs:
        dy = np.diff(y[a : b + 1])
        if not (np.all(dy > 0.0) or np.all(dy < 0.0)):
            raise NotGraphNearMarkersError(
                f"Target turns back near x={np.mod(x[a], 1.0):.4g} "
                "without rising or falling monotonically"
            )
        length = np.concatenate([[0.0], np.cumsum(np.hypot(np.diff(x[a : b + 1]), dy))])
        s[a : b + 1] = x[a] + (x[b] - x[a]) * length / length[-1]
    return s


def _make_fold(
    x: np.ndarray, levels: np.ndarray, s: np.ndarray, run: tuple[int, int]
) -> _Fold:
    a, b = run
    span = slice(a, b + 1)
    order = np.argsort(levels[span])
    level = levels[span][order]
    shift = (x - s)[span]
    reach = FOLD_REACH * float(np.max(np.abs(shift)))
    return _Fold(
        low=float(level[0]),
        high=float(level[-1]),
        reach=reach,
        s=PchipInterpolator(level, s[span][order]),
        shift=PchipInterpolator(level, shift[order]),
        extent=(float(x[span].min()), float(x[span].max())),
        strip=(float(s[a]) - reach, float(s[b]) + reach),
    )


def _check_clear(
    folds: list[_Fold], runs: list[tuple[int, int]], x: np.ndarray, levels: np.ndarray
) -> None:
    """No other part of the lifted curve may enter a fold's strip at the fold's levels."""
    x0, x1 = x, np.append(x[1:], x[0] + 1.0)
    y0, y1 = levels, np.roll(levels, -1)
    index = np.arange(len(x))
    for fold, (a, b) in zip(folds, runs):
        outside = (index < a) | (index >= b)
        level_hit = (np.minimum(y0, y1) < fold.high) & (np.maximum(y0, y1) > fold.low)
        for shift in (-1.0, 0.0, 1.0):
            near = (np.minimum(x0, x1) + shift < fold.strip[1]) & (
                np.maximum(x0, x1) + shift > fold.strip[0]
            )
            if np.any(outside & level_hit & near):
                raise NotGraphNearMarkersError(
                    f"Target comes back within {fold.reach:.3g} of its fold near "
                    f"x={np.mod(fold.extent[0], 1.0):.4g}"
                )


def _meets(x: float, half: float, blocked: list[tuple[float, float]]) -> bool:
    for lo, hi in blocked:
        for shift in (-1.0, 0.0, 1.0):
            if x - half < hi + shift and x + half > lo + shift:
                return True
    return False


def _dodge(x: float, half: float, blocked: list[tuple[float, float]]) -> float:
    """Nearest position whose rectangle clears every blocked interval."""
    clearance = 1.25 * half
    for _ in range(len(blocked)):
        hits = [
            (lo + shift, hi + shift)
            for lo, hi in blocked
            for shift in (-1.0, 0.0, 1.0)
            if x - half < hi + shift and x + half > lo + shift
        ]
        if not hits:
            break
        lo, hi = hits[0]
        left, right = lo - clearance, hi + clearance
        x = left if x - left <= right - x else right
    return float(np.mod(x, 1.0))


def _place_markers(epsilon: float, blocked: list[tuple[float, float]]) -> _Markers:
    """Markers at spacing ``<= eps`` whose rectangles stay off the folds.

    Each refinement adds a marker and halves the rectangles.
    """
    count = int(np.ceil(1.0 / epsilon))
    for level in range(MARKER_REFINEMENTS + 1):
        half = MARKER_WINDOW / (count * 2**level)
        xs = np.sort([_dodge(x, half, blocked) for x in np.arange(count) / count])
        gaps = np.diff(np.append(xs, xs[0] + 1.0))
        clear = not any(_meets(x, half, blocked) for x in xs)
        if clear and gaps.max() <= epsilon and gaps.min() > 2.0 * half:
            return _Markers(xs, half, level)
        count += 1
    where = np.mod(blocked[0][0], 1.0) if blocked else 0.0
    raise NotGraphNearMarkersError(
        f"Target is not a graph near marker x={where:.4g} "
        f"after {MARKER_REFINEMENTS} refinements"
    )


def _first_hits(x: np.ndarray, levels: np.ndarray, columns: np.ndarray) -> np.ndarray:
    """Lowest crossing of each vertical ray ``x = c`` with the closed polyline."""
    x0, x1 = x, np.append(x[1:], x[0] + 1.0)
    y0, y1 = levels, np.roll(levels, -1)
    lo, hi = np.minimum(x0, x1), np.maximum(x0, x1)
    width = np.where(hi > lo, x1 - x0, 1.0)
    hits = np.full(len(columns), np.inf)
    for shift in (-1.0, 0.0, 1.0):
        c = columns[:, None] + shift
        crossing = (c >= lo) & (c <= hi) & (hi > lo)
        t = (c - x0) / width
        y = np.where(crossing, y0 + t * (y1 - y0), np.inf)
        hits = np.minimum(hits, y.min(axis=1))
    return hits


def curve_extend(target: np.ndarray, epsilon: float, n: int = CURVE_GRID) -> CurveExtension:
    """A diffeomorphism of the annulus taking ``L`` onto the closed polyline ``target``.

    The target only needs to be embedded, to go around once and to stay in
    ``|y| <= eps``; it may turn back in ``x``. Each such backward run must
    keep rising or falling, and no other part of the target may come back
    within the reach of its horizontal move. Markers whose rectangles would
    meet a backward run are moved off it, then the marker set is refined.
    The map is the identity for ``|y| >= CURVE_OUTER``.

    Raises
    ------
    NotEmbeddedError
        If the target does not go around once or crosses itself.
    NotGraphNearMarkersError
        If some backward run cannot be straightened, or no marker placement
        clears the runs after ``MARKER_REFINEMENTS`` refinements.
    ValueError
        If the target leaves ``|y| <= eps``, repeats a vertex, or ``eps`` is not small.
    """
    vertices = np.array(target, dtype=float)
    if vertices.ndim != 2 or vertices.shape[1] != 2 or len(vertices) < 3:
        raise ValueError(f"target must be an (N, 2) array with N >= 3, got: {vertices.shape}")
    limit = CURVE_INNER / (CURVE_LIFT + 1.0)
    if not 0.0 < epsilon < limit:
        raise ValueError(f"epsilon must be in (0, {limit:.4g}), got: {epsilon}")
    vertices[:, 0] = np.mod(vertices[:, 0], 1.0)
    height = float(np.max(np.abs(vertices[:, 1])))
    if height > epsilon:
        raise ValueError(f"target reaches |y| = {height:.4g} > eps = {epsilon}")
    if np.any(np.all(_increments(vertices) == 0.0, axis=1)):
        raise ValueError("target repeats a vertex")

    turns = winding(vertices)
    if abs(turns) != 1:
        raise NotEmbeddedError(f"Target wraps {turns} times around the annulus, expected once")
    if turns == -1:
        vertices = vertices[::-1].copy()
    crossings = self_intersections(vertices)
    if crossings:
        raise NotEmbeddedError(f"Target crosses itself at segments {crossings[:5]}")

    vertices = _rolled(vertices)
    lift = CURVE_LIFT * epsilon
    x, y = _lifted(vertices)[:-1, 0], vertices[:, 1]
    levels = y + lift
    runs = _fold_runs(x)
    s = _retimed(x, y, runs)
    folds = [_make_fold(x, levels, s, run) for run in runs]
    _check_clear(folds, runs, x, levels)
    markers = _place_markers(epsilon, [fold.extent for fold in folds])
    exact = CurveMap(lift, markers, _periodic_pchip(s, y), tuple(folds))

    grid = Grid(0.0, 1.0, -1.0, 1.0, n, n, periodic_x=True)
    nodes = grid.nodes()
    points = nodes.reshape(-1, 2)
    forward = exact(points).reshape(nodes.shape)
    backward = exact.inverse(points).reshape(nodes.shape)
    moved = np.any(forward != nodes, axis=-1)
    box = support_box(grid, moved)
    if box is not None:
        box = (box[0], box[1], max(box[2], -CURVE_OUTER), min(box[3], CURVE_OUTER))
    psi = GridDiffeo(grid, forward, backward, box)

    on_core = np.column_stack([np.mod(s, 1.0), np.zeros(len(s))])

    def residual(images: np.ndarray) -> float:
        gap = images - vertices
        return float(np.max(np.hypot(_wrap(gap[:, 0]), gap[:, 1])))

    vertex_residual = residual(exact(on_core))
    grid_residual = residual(psi(on_core))
    rim = np.abs(nodes[..., 1]) >= CURVE_OUTER
    boundary_identity = bool(np.all(forward[rim] == nodes[rim]))
    c_prime = psi.c0_norm() / epsilon
    hits = _first_hits(x, levels, markers.xs)

    logging.getLogger().info(
        f"Curve extension eps={epsilon}: {len(markers.xs)} markers "
        f"({markers.refinements} refinements), {len(folds)} folds, C' {c_prime:.3g}, "
        f"vertex residual {vertex_residual:.3g}"
    )
    return CurveExtension(
        psi=psi,
        exact=exact,
        epsilon=epsilon,
        markers=np.column_stack([markers.xs, hits]),
        refinements=markers.refinements,
        folds=len(folds),
        stage_norms=exact.stage_norms(points),
        c_prime=c_prime,
        vertex_residual=vertex_residual,
        grid_residual=grid_residual,
        boundary_identity=boundary_identity,
    )
