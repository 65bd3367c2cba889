"""Logical-to-visual reordering for right-to-left display.

A deliberately small single-level scheme (no nested embeddings, no
directional controls): every character is RTL, LTR or neutral; digits form
LTR runs; a neutral stretch takes its flanking directions when they agree
and the RTL base direction otherwise. Runs are then laid out right to
left, reversing the characters inside RTL runs.

The base paragraph direction is always RTL.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import charset
from .charset import Direction


@dataclass(frozen=True)
class Run:
    start: int
    length: int
    direction: Direction  # RTL or LTR

    @property
    def stop(self) -> int:
        return self.start + self.length


def char_direction(code_point: int) -> Direction:
    """RTL, LTR or NEUTRAL for run segmentation (digits count as LTR)."""
    direction = charset.classify(code_point)[1]
    if direction is Direction.DIGIT:
        return Direction.LTR
    return direction


def segment_runs(line: str) -> list[Run]:
    """Partition a line into maximal same-direction runs.

    With an RTL base, a neutral stretch is LTR only when both flanking
    strong characters exist and are LTR; in every other case (disagreeing
    flanks, line edge, all-neutral line) it resolves RTL.
    """
    if "\n" in line:
        raise ValueError("line must not contain a newline")
    if not line:
        return []

    dirs = [char_direction(ord(ch)) for ch in line]

    resolved: list[Direction] = []
    i = 0
    while i < len(dirs):
        if dirs[i] is not Direction.NEUTRAL:
            resolved.append(dirs[i])
            i += 1
            continue
        j = i
        while j < len(dirs) and dirs[j] is Direction.NEUTRAL:
            j += 1
        left = resolved[-1] if resolved else None
        right = dirs[j] if j < len(dirs) else None
        fill = (
            Direction.LTR
            if left is Direction.LTR and right is Direction.LTR
            else Direction.RTL
        )
        resolved.extend([fill] * (j - i))
        i = j

    runs: list[Run] = []
    start = 0
    for i in range(1, len(resolved) + 1):
        if i == len(resolved) or resolved[i] is not resolved[start]:
            runs.append(Run(start, i - start, resolved[start]))
            start = i
    return runs


def logical_to_visual(line: str) -> list[int]:
    """Permutation mapping each visual position to its logical index.

    Runs are laid out right to left in logical run order; characters
    inside an RTL run are reversed, inside an LTR run preserved.
    """
    order: list[int] = []
    for run in reversed(segment_runs(line)):
        indices = range(run.start, run.stop)
        if run.direction is Direction.RTL:
            indices = reversed(indices)
        order.extend(indices)
    return order


def caret_visual_position(line: str, logical_index: int) -> int:
    """Visual boundary where a caret at the given logical index sits.

    Boundaries count cell edges left to right, 0..len(line). The caret
    attaches to the run holding the previously typed character (the run
    containing the first character when the index is 0), and advances
    leftward through RTL runs, rightward through LTR runs.
    """
    if not 0 <= logical_index <= len(line):
        raise IndexError("logical index %d out of range" % logical_index)
    if not line:
        return 0

    runs = segment_runs(line)
    anchor = logical_index - 1 if logical_index > 0 else 0
    k = next(i for i, run in enumerate(runs) if run.start <= anchor < run.stop)
    run = runs[k]
    left_edge = sum(r.length for r in runs[k + 1 :])
    offset = logical_index - run.start
    if run.direction is Direction.RTL:
        return left_edge + run.length - offset
    return left_edge + offset
