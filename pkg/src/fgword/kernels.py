"""Library of named counting kernels."""
from __future__ import annotations

from typing import Any

from .counting import CountingQM
from .types import KernelType

# Patterns of the shipped kernels. ``a`` is the exponent-sum homomorphism,
# ``ab`` does not vanish on [a, b], ``aab`` and ``abb`` do.
LIBRARY_PATTERNS: dict[KernelType, str] = {
    KernelType.A: "a",
    KernelType.AB: "ab",
    KernelType.AAB: "aab",
    KernelType.ABB: "abb",
}


def create_library_kernel(kernel_type: KernelType, config: dict[str, Any]) -> CountingQM:
    """Create one of the library kernels.

    Parameters
    ----------
    kernel_type
        Which library kernel to build.
    config
        Configuration dictionary with keys:
        - weight: float (optional) - weight of the single pattern, default 1.0
        - name: str (optional) - display name, defaults to the kernel type value

    Returns
    -------
    CountingQM instance.
    """
    weight = config.get("weight", 1.0)
    if not isinstance(weight, (int, float)):
        raise ValueError(f"weight must be a number, got: {weight!r}")
    name = config.get("name") or kernel_type.value
    return CountingQM.from_pairs(name, [(LIBRARY_PATTERNS[kernel_type], float(weight))])


def create_custom_kernel(name: str, terms: list[tuple[str, float]]) -> CountingQM:
    """Create a kernel from explicit ``(word-string, weight)`` terms."""
    if not terms:
        raise ValueError(f"Kernel '{name}' needs at least one term")
    return CountingQM.from_pairs(name, terms)
