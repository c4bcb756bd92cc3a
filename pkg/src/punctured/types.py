"""Cut circle types."""
from enum import Enum


class CutAxis(str, Enum):
    """The two cut circles through the puncture."""

    A = "A"  # y = 0, crossed by the b letters
    B = "B"  # x = 0, crossed by the a letters
