"""Cut system reading crossings of lifted polylines as free-group letters."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ..errors import TangentialCrossingError
from .constants import TANGENT_TOL
from .types import CutAxis


class Crossing(NamedTuple):
    """A transversal crossing of a cut circle by one polyline segment."""

    segment: int
    param: float
    axis: CutAxis
    code: int


@dataclass(frozen=True)
class CutSystem:
    """Cuts A = {y = 0} and B = {x = 0} of the torus, seen as lines y, x in Z of the lift.

    Crossing B in the +x direction emits ``a``; crossing A in the -y
    direction emits ``b``. With these orientations a clockwise loop
    around the puncture reads ``abAB``.
    """

    a_code: int = 1
    b_code: int = 2

    def _axis_crossings(
        self, segment: int, start: float, end: float, axis: CutAxis
    ) -> list[Crossing]:
        low, high = np.floor(start), np.floor(end)
        if low == high:
            return []
        if axis is CutAxis.B:
            code = self.a_code if end > start else -self.a_code
        else:
            code = self.b_code if end < start else -self.b_code
        if end > start:
            lines = np.arange(low + 1.0, high + 1.0)
        else:
            lines = np.arange(low, high, -1.0)
        params = (lines - start) / (end - start)
        return [Crossing(segment, float(s), axis, code) for s in params]

    def segment_crossings(self, segment: int, start: np.ndarray, end: np.ndarray) -> list[Crossing]:
        """Crossings of one segment, ordered by parameter.

        Raises
        ------
        TangentialCrossingError
            If an A-crossing and a B-crossing cannot be ordered.
        """
        vertical = self._axis_crossings(segment, float(start[0]), float(end[0]), CutAxis.B)
        horizontal = self._axis_crossings(segment, float(start[1]), float(end[1]), CutAxis.A)
        if not vertical or not horizontal:
            return vertical or horizontal
        merged = sorted(vertical + horizontal, key=lambda c: c.param)
        for first, second in zip(merged, merged[1:]):
            if first.axis is not second.axis and second.param - first.param < TANGENT_TOL:
                raise TangentialCrossingError(
                    f"Segment {segment} meets both cuts at parameter {first.param:.3e}"
                )
        return merged

    def crossings(self, points: np.ndarray) -> list[Crossing]:
        """All crossings of a lifted polyline, in order along the polyline."""
        cells = np.floor(points)
        changed = np.flatnonzero(np.any(np.diff(cells, axis=0) != 0, axis=1))
        found: list[Crossing] = []
        for i in changed:
            found.extend(self.segment_crossings(int(i), points[i], points[i + 1]))
        return found
