"""Flat torus and unit disc domains, with support descriptors."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from ..errors import SupportEscapesDomainError
from .constants import TORUS_MAX_RADIUS
from .types import DomainKind, SupportKind

_TRANSLATES = np.array(list(product((-1.0, 0.0, 1.0), repeat=2)))


def as_points(points: np.ndarray) -> np.ndarray:
    """View a single point or a point array as an ``(N, 2)`` float array."""
    return np.atleast_2d(np.asarray(points, dtype=float)).reshape(-1, 2)


@dataclass(frozen=True)
class Domain:
    """Torus R^2/Z^2 with coordinates in [0,1)^2, or the unit disc in R^2."""

    kind: DomainKind

    @classmethod
    def torus(cls) -> Domain:
        return cls(DomainKind.TORUS)

    @classmethod
    def disc(cls) -> Domain:
        return cls(DomainKind.DISC)

    @property
    def is_torus(self) -> bool:
        return self.kind is DomainKind.TORUS

    @property
    def area(self) -> float:
        return 1.0 if self.is_torus else float(np.pi)

    def wrap(self, points: np.ndarray) -> np.ndarray:
        """Canonical coordinates: [0,1)^2 on the torus, unchanged on the disc."""
        points = np.asarray(points, dtype=float)
        if not self.is_torus:
            return points
        wrapped = np.mod(points, 1.0)
        wrapped[wrapped >= 1.0] = 0.0
        return wrapped

    def displacement(self, start: np.ndarray, end: np.ndarray) -> np.ndarray:
        """Vector from ``start`` to ``end``; shortest representative on the torus."""
        delta = np.asarray(end, dtype=float) - np.asarray(start, dtype=float)
        if self.is_torus:
            delta = delta - np.round(delta)
        return delta

    def distance(self, p: np.ndarray, q: np.ndarray) -> np.ndarray:
        """Flat distance; on the torus the minimum over the 9 nearest lattice translates."""
        p, q = as_points(p), as_points(q)
        if not self.is_torus:
            return np.linalg.norm(q - p, axis=1)
        delta = self.wrap(q) - self.wrap(p)
        shifted = delta[:, None, :] + _TRANSLATES[None, :, :]
        return np.linalg.norm(shifted, axis=2).min(axis=1)

    def contains(self, points: np.ndarray) -> np.ndarray:
        points = as_points(points)
        if self.is_torus:
            return np.ones(len(points), dtype=bool)
        return np.einsum("ij,ij->i", points, points) < 1.0

    def check_disc(self, center: tuple[float, float], radius: float) -> None:
        """Raise if the closed disc does not fit in the domain interior."""
        if radius < 0:
            raise ValueError(f"radius must be nonnegative, got: {radius}")
        if self.is_torus:
            if radius > TORUS_MAX_RADIUS:
                raise SupportEscapesDomainError(
                    f"Disc of radius {radius} does not embed in the torus "
                    f"(maximum {TORUS_MAX_RADIUS})"
                )
            return
        if float(np.hypot(*center)) + radius >= 1.0:
            raise SupportEscapesDomainError(
                f"Disc at {tuple(center)} with radius {radius} leaves the unit disc"
            )

    def evaluation_grid(self, n: int) -> np.ndarray:
        """Deterministic cell-midpoint grid covering the domain."""
        if self.is_torus:
            axis = (np.arange(n) + 0.5) / n
        else:
            axis = -1.0 + (np.arange(n) + 0.5) * (2.0 / n)
        xs, ys = np.meshgrid(axis, axis, indexing="ij")
        nodes = np.column_stack([xs.ravel(), ys.ravel()])
        return nodes[self.contains(nodes)]


@dataclass(frozen=True)
class Support:
    """Support descriptor: the whole domain or an open disc."""

    kind: SupportKind
    center: tuple[float, float] = (0.0, 0.0)
    radius: float = 0.0

    @classmethod
    def full(cls) -> Support:
        return cls(SupportKind.FULL)

    @classmethod
    def disc(cls, center: tuple[float, float], radius: float) -> Support:
        return cls(SupportKind.DISC, (float(center[0]), float(center[1])), float(radius))

    @property
    def is_full(self) -> bool:
        return self.kind is SupportKind.FULL

    @property
    def is_empty(self) -> bool:
        return self.kind is SupportKind.DISC and self.radius <= 0.0

    def contains(self, points: np.ndarray, domain: Domain) -> np.ndarray:
        """Mask of points lying in the open support."""
        points = as_points(points)
        if self.is_full:
            return domain.contains(points)
        offsets = domain.displacement(np.asarray(self.center), points)
        return np.einsum("ij,ij->i", offsets, offsets) < self.radius**2

    def area(self, domain: Domain) -> float:
        if self.is_full:
            return domain.area
        return float(np.pi * self.radius**2)
