"""Homogeneous Brooks counting quasi-morphisms on F(a, b).

Occurrences of a pattern are counted with overlaps. Homogenization is done
exactly by counting on the cyclically reduced core, so ``mu(w^n) = n mu(w)``
and conjugation invariance hold without any numerical limit.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .constants import DEFAULT_DEFECT_BUDGET, DEFAULT_DEFECT_MAX_LEN
from .word import COMMUTATOR_AB, Word, cyclic_reduce, random_word


@dataclass(frozen=True)
class CountingQM:
    """Weighted family of pattern words defining a homogeneous quasi-morphism."""

    name: str
    terms: tuple[tuple[Word, float], ...]
    defect_bound: Optional[float] = None

    def __post_init__(self) -> None:
        for pattern, _ in self.terms:
            if pattern.is_identity():
                raise ValueError(f"Kernel '{self.name}' contains an empty pattern")

    @classmethod
    def from_pairs(cls, name: str, pairs: Iterable[tuple[str, float]]) -> CountingQM:
        """Build a kernel from ``(word-string, weight)`` pairs."""
        return cls(name=name, terms=tuple((Word.parse(text), float(w)) for text, w in pairs))

    def with_defect_bound(self, bound: float) -> CountingQM:
        return replace(self, defect_bound=bound)

    def pairs(self) -> list[tuple[str, float]]:
        return [(str(pattern), weight) for pattern, weight in self.terms]

    def __call__(self, g: Word) -> float:
        return qm_eval(self, g)


def count_subwords(pattern: Word, g: Word, cyclic: bool = False) -> int:
    """Number of overlapping occurrences of ``pattern`` in ``g``.

    In cyclic mode ``g`` is read as a cyclic word: every starting position in
    one period is tried once, wrapping around as often as the pattern needs.
    """
    if pattern.is_identity():
        raise ValueError("pattern must be a nonempty word")
    m, n = len(pattern), len(g)
    if n == 0 or (not cyclic and n < m):
        return 0
    target = np.asarray(g.codes, dtype=np.int8)
    if cyclic:
        target = np.resize(target, n + m - 1)
    windows = sliding_window_view(target, m)
    return int(np.all(windows == np.asarray(pattern.codes, dtype=np.int8), axis=1).sum())


def qm_eval(mu: CountingQM, g: Word) -> float:
    """Homogeneous value of ``mu`` on ``g``."""
    core, _ = cyclic_reduce(g)
    if core.is_identity():
        return 0.0
    total = 0.0
    for pattern, weight in mu.terms:
        net = count_subwords(pattern, core, cyclic=True) - count_subwords(
            pattern.inverse(), core, cyclic=True
        )
        total += weight * net
    return float(total)


def commutator_value(mu: CountingQM) -> float:
    """``mu([a, b])``, the factor relating the torus quasi-morphism to Calabi."""
    return qm_eval(mu, COMMUTATOR_AB)


def defect_estimate(
    mu: CountingQM,
    budget: int = DEFAULT_DEFECT_BUDGET,
    max_len: int = DEFAULT_DEFECT_MAX_LEN,
    seed: int = 0,
) -> float:
    """Empirical lower bound for the defect of ``mu``.

    The first sampled pair is always ``(e, e)``. Remaining pairs are drawn as
    ``x = u v`` and ``y = v^-1 w`` so that the product ``xy`` cancels.

    Parameters
    ----------
    mu
        Kernel to probe.
    budget
        Number of pairs, at least 1.
    max_len
        Maximum length of ``x`` and ``y`` before reduction.
    seed
        Seed of the sampling stream.

    Returns
    -------
    Maximum of ``|mu(xy) - mu(x) - mu(y)|`` over the sampled pairs.
    """
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got: {budget}")
    rng = np.random.default_rng(seed)
    half = max(max_len // 2, 0)
    worst = 0.0
    for _ in range(budget - 1):
        len_u, len_v, len_w = (int(k) for k in rng.integers(0, half + 1, size=3))
        u = random_word(rng, len_u)
        v = random_word(rng, len_v)
        w = random_word(rng, len_w)
        x, y = u * v, v.inverse() * w
        worst = max(worst, abs(qm_eval(mu, x * y) - qm_eval(mu, x) - qm_eval(mu, y)))
    logging.getLogger().debug(f"Defect estimate for '{mu.name}': {worst} ({budget} pairs)")
    return worst


def evaluation_matrix(kernels: Sequence[CountingQM], words: Sequence[Word]) -> np.ndarray:
    """Matrix of kernel values, one row per kernel and one column per word."""
    return np.array([[qm_eval(mu, w) for w in words] for mu in kernels], dtype=float)


def independence_rank(kernels: Sequence[CountingQM], words: Sequence[Word]) -> int:
    """Rank of the kernels' values on sample words (a lower bound on their span)."""
    if not kernels or not words:
        return 0
    return int(np.linalg.matrix_rank(evaluation_matrix(kernels, words)))
