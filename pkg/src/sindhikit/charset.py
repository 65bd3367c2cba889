"""Sindhi character repertoire and classification.

The standardized Perso-Arabic Sindhi alphabet is carried here as a literal
data table: one row per character with its conventional ASCII identifier,
category, and joining class. The table order is the alphabet order (the
source table reads right column top-down, then left column top-down).
Everything else in the engine — shaping, ordering, layouts, dictionaries —
keys off this module.

Joining classes follow the Unicode ArabicShaping semantics for each code
point and are cross-checked against an extract of that data file by the
test suite.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Category(enum.Enum):
    LETTER = "Letter"
    SIGN = "Sign"
    DIACRITIC = "Diacritic"
    OTHER = "Other"  # anything outside the repertoire


class JoiningClass(enum.Enum):
    DUAL = "Dual"
    RIGHT_JOINING = "RightJoining"
    NON_JOINING = "NonJoining"
    TRANSPARENT = "Transparent"


class Direction(enum.Enum):
    RTL = "RTL"
    LTR = "LTR"
    DIGIT = "Digit"
    NEUTRAL = "Neutral"


@dataclass(frozen=True)
class CharInfo:
    code_point: int
    name: str
    category: Category
    joining: JoiningClass
    direction: Direction


_LET = Category.LETTER
_SIG = Category.SIGN
_DIA = Category.DIACRITIC
_D = JoiningClass.DUAL
_R = JoiningClass.RIGHT_JOINING
_U = JoiningClass.NON_JOINING
_T = JoiningClass.TRANSPARENT

# The 55 alphabet entries, in alphabet order. Letters connect per their
# joining class; the two signs never connect.
_ALPHABET = (
    (0x0622, "alifMadA", _LET, _R),
    (0x0627, "alif", _LET, _R),
    (0x0628, "beh", _LET, _D),
    (0x067B, "beeh", _LET, _D),
    (0x067E, "peh", _LET, _D),
    (0x0680, "beheh", _LET, _D),
    (0x062A, "the", _LET, _D),
    (0x067F, "theh", _LET, _D),
    (0x067D, "mytheey", _LET, _D),
    (0x067A, "ttheeh", _LET, _D),
    (0x062B, "ttay", _LET, _D),
    (0x062C, "jeem", _LET, _D),
    (0x0684, "dyeh", _LET, _D),
    (0x0683, "nyeh", _LET, _D),
    (0x0686, "cheh", _LET, _D),
    (0x0687, "cheheh", _LET, _D),
    (0x062D, "hah", _LET, _D),
    (0x062E, "khay", _LET, _D),
    (0x062F, "dal", _LET, _R),
    (0x068C, "dahal", _LET, _R),
    (0x068F, "dhal", _LET, _R),
    (0x068A, "ddal", _LET, _R),
    (0x068D, "ddahal", _LET, _R),
    (0x0630, "zal", _LET, _R),
    (0x0631, "reh", _LET, _R),
    (0x0699, "rdeh", _LET, _R),
    (0x0632, "zeh", _LET, _R),
    (0x0633, "seen", _LET, _D),
    (0x0634, "sheen", _LET, _D),
    (0x0635, "swad", _LET, _D),
    (0x0636, "dad", _LET, _D),
    (0x0637, "toye", _LET, _D),
    (0x0638, "zoye", _LET, _D),
    (0x0639, "aieen", _LET, _D),
    (0x063A, "ghain", _LET, _D),
    (0x0641, "feh", _LET, _D),
    (0x06A6, "peheh", _LET, _D),
    (0x0642, "qaf", _LET, _D),
    (0x06AA, "kaf", _LET, _D),
    (0x06A9, "keheh", _LET, _D),
    (0x06AF, "gaf", _LET, _D),
    (0x06B3, "geuh", _LET, _D),
    (0x06B1, "ngoeh", _LET, _D),
    (0x0644, "lam", _LET, _D),
    (0x0645, "meem", _LET, _D),
    (0x0646, "noon", _LET, _D),
    (0x06BB, "rnoon", _LET, _D),
    (0x0648, "waw", _LET, _R),
    (0x06BE, "heh", _LET, _D),
    (0x0621, "hamza", _LET, _U),
    (0x064A, "yeh", _LET, _D),
    (0x06C1, "yehSmall", _LET, _D),
    (0x0626, "yehHamza", _LET, _D),
    (0x06FE, "min", _SIG, _U),
    (0x06FD, "sindhiAmpersand", _SIG, _U),
)

# Optional vowel marks (aerab). Transparent: they ride on a base letter and
# are skipped when computing joins.
_DIACRITICS = (
    (0x064B, "fathatan", _DIA, _T),
    (0x064C, "dammatan", _DIA, _T),
    (0x064D, "kasratan", _DIA, _T),
    (0x064E, "fatha", _DIA, _T),
    (0x064F, "damma", _DIA, _T),
    (0x0650, "kasra", _DIA, _T),
    (0x0651, "shadda", _DIA, _T),
    (0x0652, "sukun", _DIA, _T),
)

ALPHABET_SIZE = len(_ALPHABET)

_REPERTOIRE = tuple(
    CharInfo(cp, name, cat, join, Direction.RTL)
    for cp, name, cat, join in _ALPHABET + _DIACRITICS
)

_BY_CODE_POINT = {info.code_point: info for info in _REPERTOIRE}
_BY_NAME = {info.name: info for info in _REPERTOIRE}

# Farsi yeh, accepted as yeh on input and canonicalized to U+064A in storage.
YEH = 0x064A
FARSI_YEH = 0x06CC

_ARABIC_INDIC_DIGITS = range(0x0660, 0x066A)


def repertoire() -> tuple[CharInfo, ...]:
    """All repertoire entries: the 55 alphabet rows in alphabet order,
    then the diacritics."""
    return _REPERTOIRE


def lookup(code_point: int) -> CharInfo | None:
    """Repertoire entry for a code point, or None when outside it."""
    return _BY_CODE_POINT.get(code_point)


def by_name(name: str) -> CharInfo | None:
    """Repertoire entry for a Table identifier such as "dahal"."""
    return _BY_NAME.get(name)


def classify(code_point: int) -> tuple[Category, Direction]:
    """Category and display direction of any scalar value.

    Repertoire entries keep their stored category and are RTL; ASCII
    letters are LTR; ASCII and Arabic-Indic digits are Digit; everything
    else (space, punctuation, unknown scripts) is Neutral.
    """
    info = _BY_CODE_POINT.get(code_point)
    if info is not None:
        return info.category, info.direction
    if 0x41 <= code_point <= 0x5A or 0x61 <= code_point <= 0x7A:
        return Category.OTHER, Direction.LTR
    if 0x30 <= code_point <= 0x39 or code_point in _ARABIC_INDIC_DIGITS:
        return Category.OTHER, Direction.DIGIT
    return Category.OTHER, Direction.NEUTRAL


def joining_class(code_point: int) -> JoiningClass:
    """Joining class of any scalar value; non-repertoire is NonJoining."""
    info = _BY_CODE_POINT.get(code_point)
    if info is None:
        return JoiningClass.NON_JOINING
    return info.joining


def is_letter(code_point: int) -> bool:
    info = _BY_CODE_POINT.get(code_point)
    return info is not None and info.category is Category.LETTER


def is_transparent(code_point: int) -> bool:
    return joining_class(code_point) is JoiningClass.TRANSPARENT


def normalize_yeh(text: str) -> str:
    """Canonicalize Farsi yeh (U+06CC) to the repertoire yeh (U+064A)."""
    return text.replace(chr(FARSI_YEH), chr(YEH))


def format_code_point(code_point: int) -> str:
    return "U+%04X" % code_point


def repertoire_tsv() -> str:
    """Repertoire as UTF-8 TSV text, one row per entry, table order.

    Columns: U+XXXX, name, category, joining, direction.
    """
    rows = [
        "\t".join(
            (
                format_code_point(info.code_point),
                info.name,
                info.category.value,
                info.joining.value,
                info.direction.value,
            )
        )
        for info in _REPERTOIRE
    ]
    return "\n".join(rows) + "\n"
