import numpy as np
import pytest

from src.errors import NearPunctureError, TangentialCrossingError
from src.fgword import COMMUTATOR_AB, KernelFactory, KernelType, Word, cyclic_reduce, qm_eval
from src.punctured import (
    CutSystem,
    PuncturedLoop,
    close_loop,
    dump_failure,
    dump_loop,
    format_loop,
    word_of_loop,
)


def circle(center, radius, start_angle, turns=1.0, n=200):
    angles = start_angle + np.linspace(0.0, 2.0 * np.pi * turns, n)
    return np.column_stack(
        [center[0] + radius * np.cos(angles), center[1] + radius * np.sin(angles)]
    )


def loop_around_puncture(turns: float = 1.0) -> PuncturedLoop:
    """Based loop circling the lattice point (1, 1) with radius 0.05; ccw for turns > 0."""
    return close_loop(circle((1.0, 1.0), 0.05, 1.25 * np.pi, turns))


def straight_loop(m: int, n: int) -> PuncturedLoop:
    start = np.array([0.3, 0.45])
    path = start + np.linspace(0.0, 1.0, 400)[:, None] * np.array([m, n], dtype=float)
    return close_loop(path)


def are_conjugate(u: Word, v: Word) -> bool:
    core_u, _ = cyclic_reduce(u)
    core_v, _ = cyclic_reduce(v)
    if len(core_u) != len(core_v):
        return False
    doubled = core_v.codes * 2
    return any(doubled[i : i + len(core_u)] == core_u.codes for i in range(max(len(core_v), 1)))


def test_constant_loop_is_trivial():
    loop = close_loop(np.tile([0.3, 0.8], (5, 1)))
    assert word_of_loop(loop) == Word()


def test_connector_geometry_is_contractible():
    loop = close_loop(np.array([[0.5, 0.5], [0.9, 0.2], [0.5, 0.5]]))
    assert word_of_loop(loop) == Word()


def test_horizontal_loop_reads_a():
    path = np.column_stack([np.linspace(0.0, 1.0, 50), np.full(50, 0.3)])
    assert word_of_loop(close_loop(path)) == Word.parse("a")


def test_counterclockwise_circle_reads_inverse_commutator():
    word = word_of_loop(loop_around_puncture())
    assert are_conjugate(word, ~COMMUTATOR_AB)
    assert qm_eval(KernelFactory.create(KernelType.AB), word) == -1.0


def test_clockwise_circle_reads_commutator():
    word = word_of_loop(loop_around_puncture(-1.0))
    assert are_conjugate(word, COMMUTATOR_AB)
    assert abs(qm_eval(KernelFactory.create(KernelType.AB), word)) == 1.0


def test_boundary_of_the_cell_reads_the_commutator():
    square = np.array([[-0.5, 0.5], [0.5, 0.5], [0.5, -0.5], [-0.5, -0.5], [-0.5, 0.5]])
    assert word_of_loop(PuncturedLoop(square)) == COMMUTATOR_AB


@pytest.mark.parametrize("m,n", [(1, 0), (0, 1), (2, 1), (-1, 3), (3, -2)])
def test_straight_loops_abelianize_to_their_winding(m, n):
    word = word_of_loop(straight_loop(m, n))
    assert word.exponent_sums() == (m, -n)


def test_reversed_loop_has_inverse_word():
    loop = straight_loop(2, 1).concat(loop_around_puncture())
    assert word_of_loop(loop.reversed()) == ~word_of_loop(loop)


def test_concatenation_multiplies_words():
    rng = np.random.default_rng(4)
    loops = [
        straight_loop(1, 0),
        straight_loop(0, -1),
        loop_around_puncture(),
        loop_around_puncture(-2.0),
    ]
    for _ in range(20):
        first, second = (loops[i] for i in rng.integers(0, len(loops), size=2))
        assert word_of_loop(first.concat(second)) == word_of_loop(first) * word_of_loop(second)


JITTERS = 1000


@pytest.mark.slow
@pytest.mark.parametrize(
    "loop",
    [
        straight_loop(-1, 3).concat(loop_around_puncture(2.0)),
        loop_around_puncture(-3.0),
        straight_loop(2, 1).concat(straight_loop(0, -1)),
    ],
    ids=["mixed", "around", "straight"],
)
def test_small_perturbations_keep_the_word(loop):
    rng = np.random.default_rng(9)
    word = word_of_loop(loop)
    for _ in range(JITTERS):
        jittered = loop.perturbed(rng, loop.min_puncture_dist / 4)
        assert word_of_loop(jittered) == word


def test_perturbation_stays_inside_the_disc():
    loop = loop_around_puncture(2.0)
    amplitude = loop.min_puncture_dist / 4
    jittered = loop.perturbed(np.random.default_rng(2), amplitude)
    shift = np.hypot(*(jittered.points - loop.points).T)
    assert shift[0] == 0.0 and shift[-1] == 0.0
    assert np.all(shift <= amplitude)
    assert shift.max() > amplitude / np.sqrt(2.0)


def test_connectors_are_deterministic_on_cell_boundaries():
    path = np.array([[0.0, 0.5], [0.25, 0.75], [1.0, 0.5]])
    first, second = close_loop(path), close_loop(path)
    np.testing.assert_array_equal(first.points, second.points)
    np.testing.assert_array_equal(first.points[0], [0.5, 0.5])
    np.testing.assert_array_equal(first.points[-1], [1.5, 0.5])


def test_loop_through_the_puncture_is_rejected():
    loop = PuncturedLoop(np.array([[0.5, 0.5], [1.5, 1.5]]))
    with pytest.raises(NearPunctureError):
        word_of_loop(loop)


def test_simultaneous_crossings_are_tangential():
    loop = PuncturedLoop(np.array([[0.5, 0.5], [1.5, 1.5]]), min_puncture_dist=0.0)
    with pytest.raises(TangentialCrossingError):
        word_of_loop(loop)


def test_close_loop_rejects_endpoint_near_puncture():
    with pytest.raises(NearPunctureError):
        close_loop(np.array([[0.9995, 0.0], [0.5, 0.5]]))


def test_loop_endpoints_must_be_basepoint_lifts():
    with pytest.raises(ValueError):
        PuncturedLoop(np.array([[0.5, 0.5], [0.7, 0.5]]))


def test_custom_cut_letters():
    cuts = CutSystem(a_code=2, b_code=1)
    path = np.column_stack([np.linspace(0.0, 1.0, 50), np.full(50, 0.3)])
    loop = close_loop(path)
    assert Word(tuple(c.code for c in cuts.crossings(loop.points))) == Word.parse("b")


def test_dump_lists_vertices_crossings_and_word(tmp_path):
    loop = loop_around_puncture()
    word = word_of_loop(loop)
    target = dump_loop(loop, word, tmp_path / "dumps" / "loop.txt")
    text = target.read_text(encoding="utf-8")
    assert text.startswith("# qmc loop dump")
    assert f"vertices {len(loop)}" in text
    assert "crossings 4" in text
    assert text.rstrip().endswith(f"word {word}")


def test_dump_writes_identity_symbol():
    loop = close_loop(np.tile([0.3, 0.8], (3, 1)))
    assert format_loop(loop, Word()).rstrip().endswith("word e")


def test_tangential_loop_is_dumped_with_its_error(tmp_path):
    loop = PuncturedLoop(np.array([[0.5, 0.5], [1.5, 1.5]]), min_puncture_dist=0.0)
    with pytest.raises(TangentialCrossingError) as info:
        word_of_loop(loop)
    target = dump_failure(loop, info.value, tmp_path)
    assert target.name.startswith("TangentialCrossingError-")
    text = target.read_text(encoding="utf-8")
    assert "note Segment 0 meets both cuts" in text
    assert "crossings unordered" in text
    assert text.rstrip().endswith("word unreadable")
    assert dump_failure(loop, info.value, tmp_path) == target
