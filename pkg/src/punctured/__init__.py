"""Loops in the punctured torus and their words in the free group F(a, b)."""

from .cuts import Crossing, CutSystem
from .dump import dump_failure, dump_loop, format_loop
from .loop import PuncturedLoop, check_puncture_distance, lattice_distance
from .paths import (
    DifferencePath,
    PathOptions,
    cell_basepoint,
    close_loop,
    difference_path,
    pair_word,
    periodic_pair_word,
    radial_pair_word,
    rotation_period,
    segments_resolved,
    word_of_loop,
)
from .types import CutAxis

__all__ = [
    "Crossing",
    "CutAxis",
    "CutSystem",
    "DifferencePath",
    "PathOptions",
    "PuncturedLoop",
    "cell_basepoint",
    "check_puncture_distance",
    "close_loop",
    "difference_path",
    "dump_failure",
    "dump_loop",
    "format_loop",
    "lattice_distance",
    "pair_word",
    "periodic_pair_word",
    "radial_pair_word",
    "rotation_period",
    "segments_resolved",
    "word_of_loop",
]
