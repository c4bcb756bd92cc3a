"""Reduced words in the free group F(a, b).

Words are stored as flat tuples of integer letter codes (``+1``/``-1`` for
``a``/``a^-1`` and ``+2``/``-2`` for ``b``/``b^-1``). Every ``Word`` instance is
freely reduced; the only way to build one from arbitrary letters is ``reduce``.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

import numpy as np

from .constants import ALPHABET, LETTER_CODES
from .types import Generator

_CODE_TO_SYMBOL = {code: symbol for symbol, code in LETTER_CODES.items()}
_ALL_CODES = (1, -1, 2, -2)


@dataclass(frozen=True)
class Letter:
    """A generator raised to the power +1 or -1."""

    generator: Generator
    exponent: int

    def __post_init__(self) -> None:
        if self.exponent not in (1, -1):
            raise ValueError(f"Letter exponent must be +1 or -1, got: {self.exponent}")
        object.__setattr__(self, "generator", Generator(self.generator))

    @property
    def code(self) -> int:
        base = 1 if self.generator is Generator.A else 2
        return base * self.exponent

    @classmethod
    def from_code(cls, code: int) -> Letter:
        generator = Generator.A if abs(code) == 1 else Generator.B
        return cls(generator, 1 if code > 0 else -1)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; the empty word is the identity."""

    codes: tuple[int, ...] = ()

    @classmethod
    def identity(cls) -> Word:
        return cls()

    @classmethod
    def parse(cls, text: str) -> Word:
        """Parse a word over the alphabet ``a, A, b, B`` (capital = inverse).

        Raises
        ------
        ValueError
            If the text contains a symbol outside the alphabet.
        """
        unknown = sorted({symbol for symbol in text if symbol not in LETTER_CODES})
        if unknown:
            raise ValueError(
                f"Unknown word symbol(s) {', '.join(repr(s) for s in unknown)} in {text!r}. "
                f"Allowed symbols: {', '.join(ALPHABET)}"
            )
        return cls(_reduce_codes(LETTER_CODES[symbol] for symbol in text))

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter.from_code(code) for code in self.codes)

    def is_identity(self) -> bool:
        return not self.codes

    def inverse(self) -> Word:
        return Word(tuple(-code for code in reversed(self.codes)))

    def exponent_sums(self) -> tuple[int, int]:
        """Images of the word in the abelianization Z^2."""
        sum_a = sum((1 if code > 0 else -1) for code in self.codes if abs(code) == 1)
        sum_b = sum((1 if code > 0 else -1) for code in self.codes if abs(code) == 2)
        return sum_a, sum_b

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __mul__(self, other: Word) -> Word:
        return concat(self, other)

    def __invert__(self) -> Word:
        return self.inverse()

    def __pow__(self, n: int) -> Word:
        return power(self, n)

    def __str__(self) -> str:
        return "".join(_CODE_TO_SYMBOL[code] for code in self.codes)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def _reduce_codes(codes: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for code in codes:
        if stack and stack[-1] == -code:
            stack.pop()
        else:
            stack.append(code)
    return tuple(stack)


def reduce(letters: Iterable[Letter]) -> Word:
    """Return the freely reduced representative of a letter sequence."""
    return Word(_reduce_codes(letter.code for letter in letters))


def reduce_codes(codes: Iterable[int]) -> Word:
    """Same as ``reduce`` for an already encoded letter sequence."""
    return Word(_reduce_codes(int(code) for code in codes))


def concat(u: Word, v: Word) -> Word:
    """Reduced representative of the product ``uv`` of two reduced words."""
    limit = min(len(u.codes), len(v.codes))
    k = 0
    while k < limit and u.codes[-1 - k] == -v.codes[k]:
        k += 1
    return Word(u.codes[: len(u.codes) - k] + v.codes[k:])


def power(w: Word, n: int) -> Word:
    """``w`` to the ``n``-th power by repeated squaring."""
    if n < 0:
        return power(w.inverse(), -n)
    result = Word()
    base = w
    while n:
        if n & 1:
            result = concat(result, base)
        n >>= 1
        if n:
            base = concat(base, base)
    return result


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split ``w`` as ``conjugator * core * conjugator^-1`` with a cyclically reduced core."""
    codes = w.codes
    n = len(codes)
    i = 0
    while i < n - 1 - i and codes[i] == -codes[n - 1 - i]:
        i += 1
    return Word(codes[i : n - i]), Word(codes[:i])


def commutator(u: Word, v: Word) -> Word:
    return u * v * u.inverse() * v.inverse()


def random_word(rng: np.random.Generator, length: int) -> Word:
    """Uniformly random reduced word of the given length."""
    codes: list[int] = []
    for _ in range(length):
        allowed = [code for code in _ALL_CODES if not codes or code != -codes[-1]]
        codes.append(allowed[int(rng.integers(0, len(allowed)))])
    return Word(tuple(codes))


GEN_A = Word((1,))
GEN_B = Word((2,))
COMMUTATOR_AB = commutator(GEN_A, GEN_B)
