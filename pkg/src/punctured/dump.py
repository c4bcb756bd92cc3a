"""Plain-text debug dump of loops and their words."""
from __future__ import annotations

import hashlib
import logging
from pathlib import Path
from typing import Optional

from ..constants import DEFAULT_ENCODING
from ..errors import TangentialCrossingError
from ..fgword import Word
from ..fgword.constants import IDENTITY_STRING
from .constants import DUMP_DIGEST_LENGTH, DUMP_HEADER
from .cuts import CutSystem
from .loop import PuncturedLoop


def format_loop(
    loop: PuncturedLoop,
    word: Optional[Word],
    cuts: Optional[CutSystem] = None,
    note: str = "",
) -> str:
    """Header, lifted vertices, crossing annotations and the reduced word.

    ``word=None`` marks a loop whose word could not be read. Crossings that
    cannot be ordered are reported instead of listed.
    """
    cuts = cuts or CutSystem()
    lines = [DUMP_HEADER]
    if note:
        lines.append(f"note {note}")
    lines.extend(
        [
            f"basepoint {loop.basepoint[0]:.17g} {loop.basepoint[1]:.17g}",
            f"min_puncture_dist {loop.min_puncture_dist:.17g}",
            f"vertices {len(loop.points)}",
        ]
    )
    lines.extend(f"{p:.17g} {q:.17g}" for p, q in loop.points)
    try:
        crossings = cuts.crossings(loop.points)
    except TangentialCrossingError as e:
        lines.append(f"crossings unordered: {e}")
    else:
        lines.append(f"crossings {len(crossings)}")
        lines.extend(
            f"{c.segment} {c.param:.17g} {c.axis.value} {Word((c.code,))}" for c in crossings
        )
    if word is None:
        lines.append("word unreadable")
    else:
        lines.append(f"word {IDENTITY_STRING if word.is_identity() else word}")
    return "\n".join(lines) + "\n"


def dump_loop(
    loop: PuncturedLoop,
    word: Optional[Word],
    path: str | Path,
    cuts: Optional[CutSystem] = None,
    note: str = "",
) -> Path:
    """Write ``format_loop`` output to ``path`` and return the path."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_loop(loop, word, cuts, note), encoding=DEFAULT_ENCODING)
    return path


def dump_failure(loop: PuncturedLoop, error: Exception, directory: str | Path) -> Path:
    """Dump a loop whose word could not be read, named by error type and vertex digest."""
    digest = hashlib.sha256(loop.points.tobytes()).hexdigest()[:DUMP_DIGEST_LENGTH]
    path = Path(directory) / f"{type(error).__name__}-{digest}.txt"
    dump_loop(loop, None, path, note=str(error))
    logging.getLogger().info(f"Dumped unreadable loop to {path}: {error}")
    return path
