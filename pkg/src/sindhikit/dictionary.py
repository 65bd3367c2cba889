"""Bilingual dictionary loading and lookup.

Dictionaries are UTF-8 TSV files, one `headword<TAB>gloss` entry per line;
duplicate headwords merge their glosses in file order. Lookup is exact
match after normalization: yeh canonicalization on Sindhi headwords, ASCII
case folding on English ones. Headword ordering everywhere is raw
code-point order (there is no agreed collation for Sindhi).

The samples shipped under assets/dict/ are demo content for tests and the
task pane, not an authoritative lexicon.
"""

from __future__ import annotations

import enum
from importlib import resources

from . import charset
from .charset import Category, Direction


class DictionaryDirection(enum.Enum):
    SINDHI_TO_ENGLISH = "SindhiToEnglish"
    ENGLISH_TO_SINDHI = "EnglishToSindhi"


class DictionaryParseError(ValueError):
    def __init__(self, line_number: int, message: str):
        super().__init__("line %d: %s" % (line_number, message))
        self.line_number = line_number


def _fold_ascii(text: str) -> str:
    return "".join(chr(ord(c) + 32) if "A" <= c <= "Z" else c for c in text)


class Dictionary:
    def __init__(self, name: str, direction: DictionaryDirection):
        self.name = name
        self.direction = direction
        self._entries: list[tuple[str, str]] = []  # file order, display forms
        self._glosses: dict[str, list[str]] = {}
        self._display: dict[str, str] = {}

    def _normalize(self, word: str) -> str:
        if self.direction is DictionaryDirection.SINDHI_TO_ENGLISH:
            return charset.normalize_yeh(word)
        return _fold_ascii(word)

    def _add(self, headword: str, gloss: str) -> None:
        self._entries.append((headword, gloss))
        key = self._normalize(headword)
        self._glosses.setdefault(key, []).append(gloss)
        self._display.setdefault(key, headword)

    def __len__(self) -> int:
        return len(self._entries)

    def entries(self) -> tuple[tuple[str, str], ...]:
        """Raw (headword, gloss) pairs in file order."""
        return tuple(self._entries)

    def lookup(self, word: str) -> list[str]:
        """Glosses for an exact (normalized) headword match, file order."""
        return list(self._glosses.get(self._normalize(word), []))

    def prefix_search(self, prefix: str, limit: int) -> list[str]:
        """Headwords starting with prefix, code-point order, at most limit."""
        if limit < 1:
            raise ValueError("limit must be >= 1")
        key = self._normalize(prefix)
        matches = sorted(
            display
            for norm, display in self._display.items()
            if norm.startswith(key)
        )
        return matches[:limit]

    def serialize(self) -> bytes:
        lines = ["%s\t%s" % entry for entry in self._entries]
        return ("\n".join(lines) + "\n" if lines else "").encode("utf-8")


def _validate_sindhi_headword(headword: str, line_number: int) -> None:
    for ch in charset.normalize_yeh(headword):
        category, direction = charset.classify(ord(ch))
        if category is Category.OTHER and direction is not Direction.NEUTRAL:
            raise DictionaryParseError(
                line_number,
                "Sindhi headword contains non-repertoire character %s"
                % charset.format_code_point(ord(ch)),
            )


def load_dictionary(
    name: str, direction: DictionaryDirection, data: bytes
) -> Dictionary:
    """Parse TSV bytes into a Dictionary.

    Blank lines and lines starting with # are skipped. Raises
    UnicodeDecodeError on invalid UTF-8 and DictionaryParseError (with the
    line number) on a line without a tab, an empty headword, or a Sindhi
    headword containing non-repertoire letters.
    """
    text = data.decode("utf-8")
    result = Dictionary(name, direction)
    for line_number, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if "\t" not in line:
            raise DictionaryParseError(line_number, "expected headword<TAB>gloss")
        headword, gloss = line.split("\t", 1)
        if not headword:
            raise DictionaryParseError(line_number, "empty headword")
        if direction is DictionaryDirection.SINDHI_TO_ENGLISH:
            _validate_sindhi_headword(headword, line_number)
        result._add(headword, gloss)
    return result


# the five dictionaries behind the dictionary menu
BUILTIN_DIRECTIONS = {
    "sindhi-english": DictionaryDirection.SINDHI_TO_ENGLISH,
    "english-sindhi": DictionaryDirection.ENGLISH_TO_SINDHI,
    "computer": DictionaryDirection.SINDHI_TO_ENGLISH,
    "medical": DictionaryDirection.SINDHI_TO_ENGLISH,
    "business": DictionaryDirection.SINDHI_TO_ENGLISH,
}


def builtin_names() -> tuple[str, ...]:
    return tuple(BUILTIN_DIRECTIONS)


def load_builtin(name: str) -> Dictionary:
    """One of the shipped sample dictionaries, by menu name."""
    if name not in BUILTIN_DIRECTIONS:
        raise KeyError(name)
    data = (
        resources.files("sindhikit")
        .joinpath("assets/dict/" + name.replace("-", "_") + ".tsv")
        .read_bytes()
    )
    return load_dictionary(name, BUILTIN_DIRECTIONS[name], data)
