"""Factory for creating counting kernels."""
from __future__ import annotations

from functools import partial
from typing import Any, Callable, ClassVar

from .counting import CountingQM
from .kernels import create_library_kernel
from .types import KernelType


class KernelFactory:
    """Factory for creating library kernels. Easily extensible."""

    _registry: ClassVar[dict[KernelType, Callable[[dict[str, Any]], CountingQM]]] = {}

    @classmethod
    def register(cls, kernel_type: KernelType):
        """Register a new kernel factory.

        Parameters
        ----------
        kernel_type
            Type to register the kernel under.
        """
        def decorator(factory_func: Callable[[dict[str, Any]], CountingQM]):
            cls._registry[kernel_type] = factory_func
            return factory_func
        return decorator

    @classmethod
    def create(cls, kernel_type: KernelType, **kwargs) -> CountingQM:
        """Create a kernel by type.

        Parameters
        ----------
        kernel_type
            Type of the kernel to create.
        **kwargs
            Additional arguments passed to the kernel factory.

        Returns
        -------
        CountingQM instance.
        """
        if kernel_type not in cls._registry:
            available = ", ".join(t.value for t in cls._registry)
            raise ValueError(
                f"Unknown kernel: {kernel_type}. "
                f"Available kernels: {available}"
            )
        return cls._registry[kernel_type](kwargs)

    @classmethod
    def available(cls) -> list[KernelType]:
        return list(cls._registry)


for _kernel_type in KernelType:
    KernelFactory.register(_kernel_type)(partial(create_library_kernel, _kernel_type))
