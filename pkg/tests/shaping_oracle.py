"""Brute-force joining oracle for the shaper tests.

Evaluates the joining definition directly, one character at a time, by
scanning outward for the nearest non-transparent neighbors. Quadratic and
deliberately independent of the engine's single-pass implementation.
"""

from sindhikit import charset
from sindhikit.charset import JoiningClass
from sindhikit.shaping import Form

DUAL = JoiningClass.DUAL
RIGHT = JoiningClass.RIGHT_JOINING


def _nearest_solid(text, start, step):
    """Nearest non-transparent code point from `start` walking by `step`."""
    j = start + step
    while 0 <= j < len(text):
        if not charset.is_transparent(ord(text[j])):
            return ord(text[j])
        j += step
    return None


def oracle_forms(text):
    """Form of each input character per the joining definition."""
    forms = []
    for i, ch in enumerate(text):
        cp = ord(ch)
        cls = charset.joining_class(cp)
        if cls is JoiningClass.TRANSPARENT or not charset.is_letter(cp):
            forms.append(Form.ISOLATED)
            continue
        prev = _nearest_solid(text, i, -1)
        nxt = _nearest_solid(text, i, +1)
        joins_right = (
            prev is not None
            and charset.is_letter(prev)
            and charset.joining_class(prev) is DUAL
        )
        joins_left = (
            cls is DUAL
            and nxt is not None
            and charset.is_letter(nxt)
            and charset.joining_class(nxt) in (DUAL, RIGHT)
        )
        if cls is RIGHT:
            joins_left = False
        if cls not in (DUAL, RIGHT):
            joins_right = joins_left = False
        if joins_right and joins_left:
            forms.append(Form.MEDIAL)
        elif joins_left:
            forms.append(Form.INITIAL)
        elif joins_right:
            forms.append(Form.FINAL)
        else:
            forms.append(Form.ISOLATED)
    return forms


# 12-letter probe set exercising every joining class
PROBE_LETTERS = "بسنيحلادڌروء"


def probe_strings(max_length=3):
    """Every string over the probe set with length 0..max_length."""
    strings = [""]
    frontier = [""]
    for _ in range(max_length):
        frontier = [s + c for s in frontier for c in PROBE_LETTERS]
        strings.extend(frontier)
    return strings
