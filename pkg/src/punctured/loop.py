"""Based closed polylines in the punctured torus."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import NearPunctureError
from .constants import BASEPOINT, CLOSURE_TOL, DELTA_PUNCT


def lattice_distance(points: np.ndarray) -> np.ndarray:
    """Distance from each point to the nearest lift of the puncture."""
    offsets = points - np.round(points)
    return np.hypot(offsets[:, 0], offsets[:, 1])


def _point_segment_distance(lattice: np.ndarray, start: np.ndarray, end: np.ndarray) -> np.ndarray:
    direction = end - start
    length2 = np.einsum("ij,ij->i", direction, direction)
    safe = np.where(length2 > 0.0, length2, 1.0)
    s = np.clip(np.einsum("ij,ij->i", lattice - start, direction) / safe, 0.0, 1.0)
    nearest = start + s[:, None] * direction
    return np.hypot(*(lattice - nearest).T)


def segment_lattice_distance(points: np.ndarray) -> np.ndarray:
    """Distance from each segment to the lattice points nearest its ends and midpoint.

    Exact whenever segments are shorter than half the lattice spacing.
    """
    start, end = points[:-1], points[1:]
    candidates = (np.round(start), np.round(end), np.round(0.5 * (start + end)))
    return np.min([_point_segment_distance(c, start, end) for c in candidates], axis=0)


def check_puncture_distance(
    points: np.ndarray, delta: float, what: str = "path", segments: bool = True
) -> None:
    """Raise if any vertex, or any segment when ``segments`` is set, comes within ``delta``."""
    if len(points) == 0:
        return
    closest = float(np.min(lattice_distance(points)))
    if segments and len(points) > 1:
        closest = min(closest, float(np.min(segment_lattice_distance(points))))
    if closest < delta:
        raise NearPunctureError(
            f"{what} passes within {closest:.3e} of the puncture (minimum {delta:.3e})"
        )


@dataclass(frozen=True, eq=False)
class PuncturedLoop:
    """Closed polyline in T^2 minus the puncture, in lifted coordinates.

    The first and last vertices are lifts of the basepoint; they may differ
    by a lattice vector.
    """

    points: np.ndarray
    min_puncture_dist: float = DELTA_PUNCT
    basepoint: tuple[float, float] = field(default=BASEPOINT)

    def __post_init__(self) -> None:
        points = np.asarray(self.points, dtype=float)
        if points.ndim != 2 or points.shape[1] != 2 or len(points) < 2:
            raise ValueError(f"Loop needs an (n >= 2, 2) vertex array, got shape: {points.shape}")
        for end in (points[0], points[-1]):
            offset = end - np.asarray(self.basepoint)
            if np.max(np.abs(offset - np.round(offset))) > CLOSURE_TOL:
                raise ValueError(f"Loop endpoint {end} is not a lift of the basepoint")
        object.__setattr__(self, "points", points)

    @property
    def wrapped(self) -> np.ndarray:
        return np.mod(self.points, 1.0)

    def __len__(self) -> int:
        return len(self.points)

    def check(self) -> None:
        """Raise ``NearPunctureError`` if the loop touches the ``min_puncture_dist`` ball."""
        check_puncture_distance(self.points, self.min_puncture_dist, "loop")

    def concat(self, other: PuncturedLoop) -> PuncturedLoop:
        """Traverse ``self`` and then ``other``."""
        shift = self.points[-1] - other.points[0]
        joined = np.vstack([self.points, other.points[1:] + shift])
        delta = min(self.min_puncture_dist, other.min_puncture_dist)
        return PuncturedLoop(joined, delta, self.basepoint)

    def reversed(self) -> PuncturedLoop:
        return PuncturedLoop(self.points[::-1].copy(), self.min_puncture_dist, self.basepoint)

    def perturbed(self, rng: np.random.Generator, amplitude: float) -> PuncturedLoop:
        """Move every interior vertex to a uniform point of the disc of radius ``amplitude``."""
        n = len(self.points)
        radius = amplitude * np.sqrt(rng.uniform(0.0, 1.0, n))
        angle = rng.uniform(0.0, 2.0 * np.pi, n)
        jitter = np.column_stack([radius * np.cos(angle), radius * np.sin(angle)])
        jitter[[0, -1]] = 0.0
        return PuncturedLoop(self.points + jitter, self.min_puncture_dist, self.basepoint)
