"""Free-group generator and kernel types."""
from enum import Enum


class Generator(str, Enum):
    """Generators of the free group F(a, b)."""

    A = "a"
    B = "b"


class KernelType(str, Enum):
    """Named counting kernels shipped with the library."""

    A = "a"
    AB = "ab"
    AAB = "aab"
    ABB = "abb"
