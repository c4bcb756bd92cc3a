import numpy as np
import pytest

from src.fgword import (
    COMMUTATOR_AB,
    CountingQM,
    KernelFactory,
    KernelType,
    Word,
    commutator_value,
    count_subwords,
    cyclic_reduce,
    defect_estimate,
    independence_rank,
    qm_eval,
    random_word,
)

from .test_word import reduced_words

PATTERNS = [
    Word.parse(p) for p in ("a", "ab", "aa", "Ba", "aab", "aaaa", "abab", "abAB", "aBAbab")
]
CODES = (1, -1, 2, -2)


def naive_count(pattern: Word, g: Word) -> int:
    m = len(pattern)
    return sum(1 for i in range(len(g) - m + 1) if g.codes[i : i + m] == pattern.codes)


def naive_linear_value(pattern: Word, g: Word) -> int:
    return naive_count(pattern, g) - naive_count(pattern.inverse(), g)


@pytest.mark.parametrize(
    "pattern,g,expected",
    [("ab", "abab", 2), ("aa", "aaa", 2), ("ab", "ba", 0)],
)
def test_count_subwords_examples(pattern, g, expected):
    assert count_subwords(Word.parse(pattern), Word.parse(g)) == expected


def reduced_code_rows(length: int) -> np.ndarray:
    """All reduced words of exactly ``length`` letters, one per row."""
    rows = np.array([[code] for code in CODES])
    for _ in range(length - 1):
        grown = []
        for code in CODES:
            keep = rows[rows[:, -1] != -code]
            grown.append(np.column_stack([keep, np.full(len(keep), code)]))
        rows = np.vstack(grown)
    return rows


def naive_counts(pattern: Word, rows: np.ndarray) -> np.ndarray:
    m = len(pattern)
    counts = np.zeros(len(rows), dtype=int)
    for i in range(rows.shape[1] - m + 1):
        counts += np.all(rows[:, i : i + m] == pattern.codes, axis=1)
    return counts


@pytest.mark.slow
@pytest.mark.parametrize("length", range(1, 13))
def test_count_subwords_matches_naive_scan_exhaustively(length):
    rows = reduced_code_rows(length)
    assert len(rows) == 4 * 3 ** (length - 1)
    expected = np.column_stack([naive_counts(pattern, rows) for pattern in PATTERNS])
    for row, wants in zip(rows.tolist(), expected.tolist()):
        g = Word(tuple(row))
        assert [count_subwords(pattern, g) for pattern in PATTERNS] == wants


def test_naive_scan_agrees_with_word_scan():
    rows = reduced_code_rows(5)
    for pattern in PATTERNS[:5]:
        counts = naive_counts(pattern, rows)
        assert counts.tolist() == [naive_count(pattern, Word(tuple(r))) for r in rows.tolist()]


def test_cyclic_count_wraps_short_words():
    assert count_subwords(Word.parse("aaa"), Word.parse("a"), cyclic=True) == 1
    assert count_subwords(Word.parse("ab"), Word.parse("ab"), cyclic=True) == 1
    assert count_subwords(Word.parse("ba"), Word.parse("ab"), cyclic=True) == 1


def test_count_subwords_rejects_empty_pattern():
    with pytest.raises(ValueError):
        count_subwords(Word(), Word.parse("ab"))


@pytest.mark.parametrize(
    "kernel,g,expected",
    [("ab", "ab", 1.0), ("ab", "abAB", 1.0), ("aab", "abAB", 0.0)],
)
def test_qm_eval_examples(kernel, g, expected):
    mu = CountingQM.from_pairs(kernel, [(kernel, 1.0)])
    assert qm_eval(mu, Word.parse(g)) == expected


@pytest.mark.slow
@pytest.mark.parametrize("kernel_type", list(KernelType))
def test_qm_eval_is_exactly_homogeneous(kernel_type):
    mu = KernelFactory.create(kernel_type)
    for w in reduced_words(8):
        value = qm_eval(mu, w)
        for n in (2, 3, 5, 8, 13, 32):
            assert qm_eval(mu, w**n) == n * value


@pytest.mark.slow
@pytest.mark.parametrize("kernel_type", list(KernelType))
def test_qm_eval_is_conjugation_invariant(kernel_type):
    mu = KernelFactory.create(kernel_type)
    conjugators = reduced_words(3)
    for w in reduced_words(8):
        value = qm_eval(mu, w)
        for h in conjugators:
            assert qm_eval(mu, h * w * ~h) == value


@pytest.mark.parametrize("kernel_type", list(KernelType))
def test_qm_eval_is_invariant_under_long_conjugators(kernel_type):
    mu = KernelFactory.create(kernel_type)
    rng = np.random.default_rng(17)
    for _ in range(300):
        w = random_word(rng, int(rng.integers(1, 13)))
        h = random_word(rng, int(rng.integers(4, 17)))
        assert qm_eval(mu, h * w * ~h) == qm_eval(mu, w)


def test_qm_eval_agrees_with_brute_force_limit():
    mu = KernelFactory.create(KernelType.AB)
    pattern = mu.terms[0][0]
    rng = np.random.default_rng(5)
    for _ in range(25):
        g = random_word(rng, int(rng.integers(1, 9)))
        bound = 2 * (len(g) + len(pattern))
        for k in range(11):
            n = 2**k
            assert abs(naive_linear_value(pattern, g**n) - n * qm_eval(mu, g)) <= bound


def test_homomorphism_kernel_has_zero_defect():
    mu = KernelFactory.create(KernelType.A)
    assert defect_estimate(mu, budget=500, max_len=32, seed=1) == 0.0


def test_defect_of_ab_kernel_is_positive_and_reproducible():
    mu = KernelFactory.create(KernelType.AB)
    first = defect_estimate(mu, budget=2000, max_len=16, seed=42)
    second = defect_estimate(mu, budget=2000, max_len=16, seed=42)
    assert first > 0.0
    assert first == second


def test_defect_budget_one_is_identity_pair():
    mu = KernelFactory.create(KernelType.AB)
    assert defect_estimate(mu, budget=1, max_len=64, seed=0) == 0.0


def test_defect_budget_must_be_positive():
    with pytest.raises(ValueError):
        defect_estimate(KernelFactory.create(KernelType.AB), budget=0)


def test_library_commutator_values():
    assert commutator_value(KernelFactory.create(KernelType.AB)) == 1.0
    assert commutator_value(KernelFactory.create(KernelType.AAB)) == 0.0
    assert commutator_value(KernelFactory.create(KernelType.ABB)) == 0.0
    assert commutator_value(KernelFactory.create(KernelType.A)) == 0.0


def test_kernel_weight_and_unknown_kernel():
    mu = KernelFactory.create(KernelType.AB, weight=2.0)
    assert qm_eval(mu, COMMUTATOR_AB) == 2.0
    with pytest.raises(ValueError, match="Available kernels"):
        KernelFactory.create("zzz")


def test_kernels_take_independent_values_on_sample_words():
    kernels = [KernelFactory.create(t) for t in (KernelType.AB, KernelType.AAB, KernelType.ABB)]
    words = [Word.parse(text) for text in ("ab", "aab", "abb", "aabb")]
    assert independence_rank(kernels, words) == 3


def test_kernel_rejects_empty_pattern():
    with pytest.raises(ValueError):
        CountingQM.from_pairs("bad", [("aA", 1.0)])


def test_cyclic_core_counting_used_for_conjugates():
    mu = KernelFactory.create(KernelType.AB)
    w = Word.parse("BabAB" "b")
    core, _ = cyclic_reduce(w)
    assert qm_eval(mu, w) == qm_eval(mu, core)
