"""Contextual cursive shaper.

Maps a logical code-point sequence to per-character form tags: each letter
comes out isolated, initial, medial or final depending on whether it
connects to its neighbors, and adjacent lam + alif collapse into the
lam-alif ligature. Output is (base code point, abstract form tag) rather
than presentation-form code points, because several Sindhi letters have no
presentation-form encoding; the lam-alif ligature is the one exception,
emitted as its presentation identifier.

Shaping is display-only. The logical input is never reordered or mutated:
concatenating the source spans of a shaped run reproduces it exactly.

Two letters connect when the earlier one joins leftward (it is
dual-joining) and the later one joins rightward (dual- or right-joining).
Transparent marks hang off the preceding base and are skipped when
finding neighbors; any other non-letter breaks the word.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from . import charset
from .charset import JoiningClass


class Form(enum.Enum):
    ISOLATED = "Isolated"
    INITIAL = "Initial"
    MEDIAL = "Medial"
    FINAL = "Final"


@dataclass(frozen=True)
class ShapedGlyph:
    base: int
    form: Form
    source_span: tuple[int, int]
    ligature_of: tuple[int, int] | None = None


LAM = 0x0644
ALIF = 0x0627
LAM_ALIF_ISOLATED = 0xFEFB
LAM_ALIF_FINAL = 0xFEFC

# joining classes that accept a connection from the preceding letter
_JOINS_RIGHTWARD = (JoiningClass.DUAL, JoiningClass.RIGHT_JOINING)


def form_of(has_right_join: bool, has_left_join: bool, joining: JoiningClass) -> Form:
    """Form of a letter given its resolved connections.

    Right-joining letters never connect leftward and non-joining (or
    transparent) characters never connect at all, whatever the flags say.
    """
    if joining is JoiningClass.RIGHT_JOINING:
        has_left_join = False
    elif joining is not JoiningClass.DUAL:
        has_right_join = has_left_join = False
    if has_right_join and has_left_join:
        return Form.MEDIAL
    if has_left_join:
        return Form.INITIAL
    if has_right_join:
        return Form.FINAL
    return Form.ISOLATED


def shape(text: Sequence[str] | str) -> list[ShapedGlyph]:
    """Shape a logical sequence into per-character form-tagged glyphs.

    Single pass: each letter is emitted as isolated or final depending on
    whether the previous letter connects into it; when a later letter
    connects back, the earlier glyph is patched isolated->initial or
    final->medial. Non-letters pass through isolated and break words;
    transparent marks pass through isolated without breaking anything.
    """
    out: list[ShapedGlyph] = []
    prev_index: int | None = None  # position in `out` of the last letter
    prev_joins_leftward = False

    for i, ch in enumerate(text):
        cp = ord(ch)
        joining = charset.joining_class(cp)
        if joining is JoiningClass.TRANSPARENT:
            out.append(ShapedGlyph(cp, Form.ISOLATED, (i, i + 1)))
            continue
        if not charset.is_letter(cp):
            out.append(ShapedGlyph(cp, Form.ISOLATED, (i, i + 1)))
            prev_index = None
            prev_joins_leftward = False
            continue

        joined = prev_joins_leftward and joining in _JOINS_RIGHTWARD
        if joined:
            prev = out[prev_index]
            upgraded = Form.INITIAL if prev.form is Form.ISOLATED else Form.MEDIAL
            out[prev_index] = replace(prev, form=upgraded)
        out.append(
            ShapedGlyph(cp, Form.FINAL if joined else Form.ISOLATED, (i, i + 1))
        )
        prev_index = len(out) - 1
        prev_joins_leftward = joining is JoiningClass.DUAL

    return out


def apply_ligatures(shaped: Sequence[ShapedGlyph]) -> list[ShapedGlyph]:
    """Collapse each adjacent lam+alif glyph pair into the ligature.

    Fires when a leftward-joining lam is immediately followed by its alif
    (contiguous source spans; a mark in between keeps both letters as
    they are). The ligature joins rightward like alif does: final when the
    lam was medial, isolated when it was initial.
    """
    out: list[ShapedGlyph] = []
    i = 0
    while i < len(shaped):
        glyph = shaped[i]
        if (
            glyph.base == LAM
            and glyph.ligature_of is None
            and glyph.form in (Form.INITIAL, Form.MEDIAL)
            and i + 1 < len(shaped)
        ):
            nxt = shaped[i + 1]
            if (
                nxt.base == ALIF
                and nxt.ligature_of is None
                and nxt.source_span[0] == glyph.source_span[1]
            ):
                joined_right = glyph.form is Form.MEDIAL
                out.append(
                    ShapedGlyph(
                        LAM_ALIF_FINAL if joined_right else LAM_ALIF_ISOLATED,
                        Form.FINAL if joined_right else Form.ISOLATED,
                        (glyph.source_span[0], nxt.source_span[1]),
                        ligature_of=(LAM, ALIF),
                    )
                )
                i += 2
                continue
        out.append(glyph)
        i += 1
    return out


def shape_text(text: str) -> list[ShapedGlyph]:
    """shape() plus the ligature pass; the full display pipeline."""
    return apply_ligatures(shape(text))


def unshape(shaped: Iterable[ShapedGlyph]) -> str:
    """Logical text back out of a shaped run (forms dropped, ligatures
    expanded)."""
    parts = []
    for glyph in shaped:
        if glyph.ligature_of is not None:
            parts.extend(chr(cp) for cp in glyph.ligature_of)
        else:
            parts.append(chr(glyph.base))
    return "".join(parts)


def glyph_name(glyph: ShapedGlyph) -> str:
    if glyph.ligature_of == (LAM, ALIF):
        return "lamAlif"
    info = charset.lookup(glyph.base)
    return info.name if info is not None else "-"


def debug_lines(shaped: Iterable[ShapedGlyph], verbose: bool = False) -> list[str]:
    """One line per glyph: U+XXXX<TAB>name<TAB>FORM.

    verbose adds the source span and, for ligatures, the source pair.
    """
    lines = []
    for glyph in shaped:
        fields = [
            charset.format_code_point(glyph.base),
            glyph_name(glyph),
            glyph.form.value,
        ]
        if verbose:
            fields.append("%d..%d" % glyph.source_span)
            if glyph.ligature_of is not None:
                fields.append(
                    "+".join(charset.format_code_point(cp) for cp in glyph.ligature_of)
                )
        lines.append("\t".join(fields))
    return lines
