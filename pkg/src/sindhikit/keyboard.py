"""Keyboard layouts and key-event translation.

A layout maps (key id, shift) to an inserted code point; a handful of key
ids (Backspace, Delete, Left, Right, Home, End, Enter) are fixed control
bindings that work in every layout and take precedence over file bindings.

Two layouts ship builtin: "sequential" lays the alphabet out in table
order, rows of ten, for hunt-and-peck mouse typing; "standard" is a
phonetic Latin-keyed assignment loaded from a packaged asset. Both give
every repertoire letter exactly one key. Extra layouts load from
`.layout` files (see parse_layout for the format); the service and CLI
search the directory named by SINDHIKIT_LAYOUT_DIR.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import charset
from .charset import Category, Direction


class ControlKey(enum.Enum):
    BACKSPACE = "Backspace"
    DELETE = "Delete"
    LEFT = "Left"
    RIGHT = "Right"
    HOME = "Home"
    END = "End"
    ENTER = "Enter"


@dataclass(frozen=True)
class Insert:
    code_point: int


@dataclass(frozen=True)
class Control:
    key: ControlKey


KeyAction = Insert | Control | None

_CONTROL_BY_ID = {key.value: key for key in ControlKey}


class LayoutError(ValueError):
    def __init__(self, line_number: int, message: str):
        super().__init__("line %d: %s" % (line_number, message))
        self.line_number = line_number


@dataclass(frozen=True, eq=True)
class Layout:
    name: str
    rows: tuple[tuple[str, ...], ...]
    bindings: dict[tuple[str, bool], int]


def translate_key(layout: Layout, key_id: str, shift: bool = False) -> KeyAction:
    """Action for a key press: fixed control binding, mapped insertion,
    or None when unmapped. Total."""
    control = _CONTROL_BY_ID.get(key_id)
    if control is not None:
        return Control(control)
    code_point = layout.bindings.get((key_id, shift))
    if code_point is None:
        return None
    return Insert(code_point)


def _check_insertable(code_point: int, line_number: int) -> None:
    category, direction = charset.classify(code_point)
    if category is Category.OTHER and direction not in (
        Direction.NEUTRAL,
        Direction.DIGIT,
    ):
        raise LayoutError(
            line_number,
            "insertion %s is outside the repertoire and not neutral"
            % charset.format_code_point(code_point),
        )


def _parse_code_point(token: str, line_number: int) -> int:
    if not token.startswith("U+") or len(token) < 6:
        raise LayoutError(line_number, "expected U+XXXX, got %r" % token)
    try:
        value = int(token[2:], 16)
    except ValueError:
        raise LayoutError(line_number, "bad code point %r" % token) from None
    if value > 0x10FFFF or 0xD800 <= value <= 0xDFFF:
        raise LayoutError(line_number, "%s is not a Unicode scalar value" % token)
    return value


def parse_layout(source: str, name: str) -> Layout:
    """Parse the layout file format.

    One binding per line, `key_id<TAB>U+XXXX[<TAB>U+YYYY]` (the second
    code point is the shifted insertion); a line `ROW` starts a new key
    row; `#` starts a comment line. Duplicate key ids, malformed or
    non-scalar code points, and insertions outside repertoire/neutral/digit
    reject the whole file.
    """
    rows: list[tuple[str, ...]] = []
    current: list[str] = []
    bindings: dict[tuple[str, bool], int] = {}
    seen: set[str] = set()
    for line_number, raw in enumerate(source.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if line == "ROW":
            if current:
                rows.append(tuple(current))
                current = []
            continue
        fields = line.split("\t")
        if len(fields) not in (2, 3):
            raise LayoutError(line_number, "expected key_id<TAB>U+XXXX[<TAB>U+YYYY]")
        key_id = fields[0]
        if not key_id or key_id != key_id.strip():
            raise LayoutError(line_number, "bad key id %r" % key_id)
        if key_id in seen:
            raise LayoutError(line_number, "duplicate key id %r" % key_id)
        seen.add(key_id)
        unshifted = _parse_code_point(fields[1], line_number)
        _check_insertable(unshifted, line_number)
        bindings[(key_id, False)] = unshifted
        if len(fields) == 3:
            shifted = _parse_code_point(fields[2], line_number)
            _check_insertable(shifted, line_number)
            bindings[(key_id, True)] = shifted
        current.append(key_id)
    if current:
        rows.append(tuple(current))
    return Layout(name, tuple(rows), bindings)


def serialize_layout(layout: Layout) -> str:
    """Canonical file form of a layout; parse_layout inverts it exactly."""
    chunks: list[str] = []
    for index, row in enumerate(layout.rows):
        if index:
            chunks.append("ROW")
        for key_id in row:
            fields = [key_id, charset.format_code_point(layout.bindings[(key_id, False)])]
            if (key_id, True) in layout.bindings:
                fields.append(charset.format_code_point(layout.bindings[(key_id, True)]))
            chunks.append("\t".join(fields))
    return "\n".join(chunks) + "\n" if chunks else ""


def load_layout(source: str, name: str = "custom") -> Layout:
    return parse_layout(source, name)


def _sequential_layout() -> Layout:
    """All 55 table entries in table order, rows of ten, keyed by name,
    plus a space bar row."""
    entries = [
        info
        for info in charset.repertoire()
        if info.category is not Category.DIACRITIC
    ]
    rows = []
    for start in range(0, len(entries), 10):
        rows.append(tuple(info.name for info in entries[start : start + 10]))
    rows.append(("space",))
    bindings = {(info.name, False): info.code_point for info in entries}
    bindings[("space", False)] = 0x20
    return Layout("sequential", tuple(rows), bindings)


def _standard_layout() -> Layout:
    source = (
        resources.files("sindhikit")
        .joinpath("assets/layouts/standard.layout")
        .read_text(encoding="utf-8")
    )
    return parse_layout(source, "standard")


def builtin_layouts() -> list[Layout]:
    return [_sequential_layout(), _standard_layout()]


def get_layout(name: str, search_dir: str | None = None) -> Layout:
    """Builtin layout by name, or `<name>.layout` from search_dir.

    Raises KeyError when no such layout exists.
    """
    if name == "sequential":
        return _sequential_layout()
    if name == "standard":
        return _standard_layout()
    if search_dir:
        path = Path(search_dir) / (name + ".layout")
        if path.is_file():
            return parse_layout(path.read_text(encoding="utf-8"), name)
    raise KeyError(name)
