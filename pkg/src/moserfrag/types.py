"""Boundary modes and serialized grid kinds."""
from enum import Enum, IntEnum


class BoundaryMode(str, Enum):
    """Where a primitive of a 2-form is required to vanish."""

    FREE = "free"
    VANISH_NEAR_BOUNDARY = "vanish_near_boundary"
    VANISH_ON_SKELETON = "vanish_on_skeleton"


class GridKind(IntEnum):
    """Payload kinds of the binary grid format."""

    FORM = 1
    ONE_FORM = 2
    DIFFEO = 3
