import re
import unicodedata
from pathlib import Path

import pytest

from sindhikit import charset
from sindhikit.charset import Category, Direction, JoiningClass

SHAPING_EXTRACT = Path(__file__).parent / "data" / "arabic_shaping_extract.txt"


def load_joining_types():
    types = {}
    for line in SHAPING_EXTRACT.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(";")]
        types[int(fields[0], 16)] = fields[2]
    return types


def test_alphabet_has_55_entries():
    # hand count of the source table: 28 rows in the right column,
    # 27 in the left
    assert charset.ALPHABET_SIZE == 55
    non_diacritics = [
        i for i in charset.repertoire() if i.category is not Category.DIACRITIC
    ]
    assert len(non_diacritics) == 55


def test_known_entries_present():
    names = {(i.code_point, i.name) for i in charset.repertoire()}
    assert (0x068C, "dahal") in names
    assert (0x06FD, "sindhiAmpersand") in names
    assert (0x0622, "alifMadA") in names
    assert (0x06AA, "kaf") in names


def test_alphabet_order_starts_with_alif_madda():
    assert charset.repertoire()[0].name == "alifMadA"


def test_lookup():
    assert charset.lookup(0x0633).name == "seen"
    assert charset.lookup(0x0628).name == "beh"
    assert charset.lookup(0x0041) is None


def test_code_points_unique():
    cps = [i.code_point for i in charset.repertoire()]
    assert len(cps) == len(set(cps))


def test_names_unique_and_identifier_shaped():
    names = [i.name for i in charset.repertoire()]
    assert len(names) == len(set(names))
    for name in names:
        assert re.fullmatch(r"[a-z][A-Za-z]*", name), name


def test_name_code_point_bijection():
    for info in charset.repertoire():
        assert charset.lookup(info.code_point).name == info.name
        assert charset.by_name(info.name).code_point == info.code_point


def test_diacritics_are_transparent():
    for info in charset.repertoire():
        if info.category is Category.DIACRITIC:
            assert info.joining is JoiningClass.TRANSPARENT


def test_signs():
    for cp in (0x06FD, 0x06FE):
        info = charset.lookup(cp)
        assert info.category is Category.SIGN
        assert info.joining is JoiningClass.NON_JOINING


def test_classify():
    assert charset.classify(0x0646) == (Category.LETTER, Direction.RTL)
    assert charset.classify(ord("7")) == (Category.OTHER, Direction.DIGIT)
    assert charset.classify(0x0660) == (Category.OTHER, Direction.DIGIT)
    assert charset.classify(ord(" ")) == (Category.OTHER, Direction.NEUTRAL)
    assert charset.classify(ord("A")) == (Category.OTHER, Direction.LTR)
    assert charset.classify(0x2603) == (Category.OTHER, Direction.NEUTRAL)


def test_joining_class():
    assert charset.joining_class(0x0628) is JoiningClass.DUAL
    assert charset.joining_class(0x0627) is JoiningClass.RIGHT_JOINING
    assert charset.joining_class(0x0621) is JoiningClass.NON_JOINING
    assert charset.joining_class(0x064E) is JoiningClass.TRANSPARENT
    # outside the repertoire
    assert charset.joining_class(0x0643) is JoiningClass.NON_JOINING
    assert charset.joining_class(ord("x")) is JoiningClass.NON_JOINING


def test_joining_classes_match_unicode_data():
    # the build-time check promised by the charset design notes: every
    # stored class agrees with the ArabicShaping extract, or with the data
    # file's default rule for unlisted code points
    expected_by_type = {
        "D": JoiningClass.DUAL,
        "R": JoiningClass.RIGHT_JOINING,
        "U": JoiningClass.NON_JOINING,
    }
    listed = load_joining_types()
    for info in charset.repertoire():
        if info.code_point in listed:
            expected = expected_by_type[listed[info.code_point]]
        elif unicodedata.category(chr(info.code_point)) in ("Mn", "Me", "Cf"):
            expected = JoiningClass.TRANSPARENT
        else:
            expected = JoiningClass.NON_JOINING
        assert info.joining is expected, info.name


def test_repertoire_is_rtl_per_unicode_bidi_classes():
    for info in charset.repertoire():
        assert unicodedata.bidirectional(chr(info.code_point)) in ("AL", "NSM")
        assert info.direction is Direction.RTL


def test_normalize_yeh():
    assert charset.normalize_yeh("ی") == "ي"
    assert charset.normalize_yeh("سیس") == "سيس"
    assert charset.normalize_yeh("abc") == "abc"


def test_classify_and_joining_are_stable():
    probe = [i.code_point for i in charset.repertoire()] + [0x41, 0x37, 0x20]
    for cp in probe:
        assert charset.classify(cp) == charset.classify(cp)
        assert charset.joining_class(cp) is charset.joining_class(cp)


def test_tsv_export_round_trips():
    text = charset.repertoire_tsv()
    rows = text.strip("\n").split("\n")
    assert len(rows) == len(charset.repertoire())
    parsed = []
    for row in rows:
        cp, name, cat, join, direction = row.split("\t")
        assert re.fullmatch(r"U\+[0-9A-F]{4}", cp)
        parsed.append(
            charset.CharInfo(
                int(cp[2:], 16),
                name,
                Category(cat),
                JoiningClass(join),
                Direction(direction),
            )
        )
    assert tuple(parsed) == charset.repertoire()


def test_tsv_spot_values():
    lines = charset.repertoire_tsv().splitlines()
    assert "U+0633\tseen\tLetter\tDual\tRTL" in lines
    assert "U+068C\tdahal\tLetter\tRightJoining\tRTL" in lines
