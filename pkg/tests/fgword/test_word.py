from itertools import product

import numpy as np
import pytest

from src.fgword import (
    COMMUTATOR_AB,
    Generator,
    Letter,
    Word,
    concat,
    cyclic_reduce,
    power,
    random_word,
    reduce,
    reduce_codes,
)

a = Letter(Generator.A, 1)
A = Letter(Generator.A, -1)
b = Letter(Generator.B, 1)
B = Letter(Generator.B, -1)


def reduced_words(max_len: int) -> list[Word]:
    words = [Word()]
    frontier = [Word()]
    for _ in range(max_len):
        grown = []
        for w in frontier:
            for code in (1, -1, 2, -2):
                if w.codes and w.codes[-1] == -code:
                    continue
                grown.append(Word((*w.codes, code)))
        words.extend(grown)
        frontier = grown
    return words


def test_reduce_cancels_inverse_pair():
    assert reduce([a, A]) == Word()


def test_reduce_iterated_cancellation():
    assert reduce([a, b, B, A, b]) == Word.parse("b")


def test_reduce_is_idempotent():
    once = reduce([b, a, A, B, b])
    assert once == Word.parse("b")
    assert reduce(once.letters) == once


def test_reduce_idempotent_on_random_sequences():
    rng = np.random.default_rng(7)
    for _ in range(200):
        codes = rng.choice([1, -1, 2, -2], size=int(rng.integers(0, 20)))
        w = reduce_codes(codes)
        assert reduce_codes(w.codes) == w
        assert all(w.codes[i] != -w.codes[i + 1] for i in range(len(w) - 1))


@pytest.mark.parametrize(
    "u,v,expected",
    [("a", "A", ""), ("ab", "Ba", "aa"), ("ab", "", "ab")],
)
def test_concat_examples(u, v, expected):
    assert concat(Word.parse(u), Word.parse(v)) == Word.parse(expected)


def test_concat_associative_exhaustive_short_words():
    words = reduced_words(2)
    for x, y, z in product(words, repeat=3):
        assert (x * y) * z == x * (y * z)


def test_concat_associative_random_words_up_to_six():
    rng = np.random.default_rng(11)
    for _ in range(2000):
        x, y, z = (random_word(rng, int(rng.integers(0, 7))) for _ in range(3))
        assert (x * y) * z == x * (y * z)


def test_inverse_and_power():
    w = Word.parse("abA")
    assert w * ~w == Word()
    assert power(w, 0) == Word()
    assert power(w, 3) == w * w * w
    assert power(w, -2) == ~w * ~w
    assert str(Word.parse("ab") ** 5) == "ab" * 5


@pytest.mark.parametrize("n", [1, 2, 3, 7, 16, 33])
def test_power_by_doubling_matches_repeated_product(n):
    w = Word.parse("aBab")
    expected = Word()
    for _ in range(n):
        expected = expected * w
    assert w**n == expected


@pytest.mark.parametrize(
    "text,core,conjugator",
    [("abA", "b", "a"), ("ab", "ab", ""), ("", "", "")],
)
def test_cyclic_reduce_examples(text, core, conjugator):
    assert cyclic_reduce(Word.parse(text)) == (Word.parse(core), Word.parse(conjugator))


def test_cyclic_reduce_reconstructs_word():
    for w in reduced_words(6):
        core, conjugator = cyclic_reduce(w)
        assert conjugator * core * ~conjugator == w
        if len(core) > 1:
            assert core.codes[0] != -core.codes[-1]


def test_parse_and_str_round_the_commutator():
    assert str(COMMUTATOR_AB) == "abAB"
    assert Word.parse("abAB") == COMMUTATOR_AB
    assert Word.parse("aAbB") == Word()


def test_parse_rejects_unknown_symbol():
    with pytest.raises(ValueError, match="'c'"):
        Word.parse("abc")


def test_letter_exponent_must_be_unit():
    with pytest.raises(ValueError, match=r"must be \+1 or -1"):
        Letter(Generator.A, 2)
    with pytest.raises(ValueError, match=r"must be \+1 or -1"):
        Letter(Generator.B, 0)


def test_letter_accepts_generator_symbols():
    assert Letter("b", -1) == B
    assert B.code == -2
    with pytest.raises(ValueError):
        Letter("c", 1)


def test_random_word_is_reduced_with_requested_length():
    rng = np.random.default_rng(3)
    for length in range(12):
        w = random_word(rng, length)
        assert len(w) == length
        assert reduce_codes(w.codes) == w


def test_exponent_sums():
    assert Word.parse("aabAB").exponent_sums() == (1, 0)
    assert COMMUTATOR_AB.exponent_sums() == (0, 0)
