"""Free-group words and homogeneous counting quasi-morphisms."""

from .counting import (
    CountingQM,
    commutator_value,
    count_subwords,
    defect_estimate,
    evaluation_matrix,
    independence_rank,
    qm_eval,
)
from .factory import KernelFactory
from .kernels import create_custom_kernel
from .types import Generator, KernelType
from .word import (
    COMMUTATOR_AB,
    GEN_A,
    GEN_B,
    Letter,
    Word,
    commutator,
    concat,
    cyclic_reduce,
    power,
    random_word,
    reduce,
    reduce_codes,
)

__all__ = [
    "COMMUTATOR_AB",
    "GEN_A",
    "GEN_B",
    "CountingQM",
    "Generator",
    "KernelFactory",
    "KernelType",
    "Letter",
    "Word",
    "commutator",
    "commutator_value",
    "concat",
    "count_subwords",
    "create_custom_kernel",
    "cyclic_reduce",
    "defect_estimate",
    "evaluation_matrix",
    "independence_rank",
    "power",
    "qm_eval",
    "random_word",
    "reduce",
    "reduce_codes",
]
