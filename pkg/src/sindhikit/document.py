"""Logical-order editing buffer with cursor, undo/redo, find and file I/O.

Text lives here exactly as typed: a list of lines of logical-order code
points, never presentation forms (shaping and reordering are display-time
concerns of other modules). Farsi yeh is canonicalized to the repertoire
yeh on every way in, and Arabic presentation forms are decomposed back to
their logical letters, so the storage-purity rule holds under any input.

Every text change is one undoable Edit; undo and redo restore both the
text and the cursor.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass

from . import charset

Position = tuple[int, int]  # (line, column), both 0-based


class EditKind(enum.Enum):
    INSERT = "insert"
    DELETE = "delete"


@dataclass(frozen=True)
class Edit:
    kind: EditKind
    position: Position
    payload: str  # may contain newlines
    cursor_before: Position  # distinguishes forward from backward deletes


def _is_presentation_form(cp: int) -> bool:
    return 0xFB50 <= cp <= 0xFDFF or 0xFE70 <= cp <= 0xFEFF


def _logicalize(text: str) -> str:
    """Input canonicalization: yeh normalization plus decomposition of any
    Arabic presentation forms into their logical letters."""
    if any(_is_presentation_form(ord(ch)) for ch in text):
        text = "".join(
            unicodedata.normalize("NFKD", ch) if _is_presentation_form(ord(ch)) else ch
            for ch in text
        )
    return charset.normalize_yeh(text)


class Document:
    """A single editable text buffer."""

    def __init__(self, text: str = "", path: str | None = None):
        self.lines: list[str] = _logicalize(text).split("\n")
        self.cursor: Position = (0, 0)
        self.undo_stack: list[Edit] = []
        self.redo_stack: list[Edit] = []
        self.dirty = False
        self.path = path

    # -- content views ----------------------------------------------------

    @property
    def text(self) -> str:
        return "\n".join(self.lines)

    def line(self, index: int) -> str:
        return self.lines[index]

    def position_valid(self, pos: Position) -> bool:
        line, col = pos
        return 0 <= line < len(self.lines) and 0 <= col <= len(self.lines[line])

    # -- primitive splices -------------------------------------------------

    def _splice_in(self, pos: Position, payload: str) -> Position:
        """Insert payload at pos; return the position just past it."""
        line, col = pos
        head, tail = self.lines[line][:col], self.lines[line][col:]
        parts = payload.split("\n")
        if len(parts) == 1:
            self.lines[line] = head + parts[0] + tail
            return (line, col + len(parts[0]))
        self.lines[line] = head + parts[0]
        for offset, part in enumerate(parts[1:-1], start=1):
            self.lines.insert(line + offset, part)
        end_line = line + len(parts) - 1
        self.lines.insert(end_line, parts[-1] + tail)
        return (end_line, len(parts[-1]))

    def _splice_out(self, pos: Position, payload: str) -> None:
        """Remove exactly payload starting at pos."""
        line, col = pos
        parts = payload.split("\n")
        if len(parts) == 1:
            assert self.lines[line][col : col + len(payload)] == payload
            self.lines[line] = (
                self.lines[line][:col] + self.lines[line][col + len(payload) :]
            )
            return
        end_line = line + len(parts) - 1
        assert self.lines[line][col:] == parts[0]
        assert self.lines[end_line][: len(parts[-1])] == parts[-1]
        tail = self.lines[end_line][len(parts[-1]) :]
        self.lines[line] = self.lines[line][:col] + tail
        del self.lines[line + 1 : end_line + 1]

    def _apply(self, edit: Edit) -> None:
        if edit.kind is EditKind.INSERT:
            self.cursor = self._splice_in(edit.position, edit.payload)
        else:
            self._splice_out(edit.position, edit.payload)
            self.cursor = edit.position

    def _invert(self, edit: Edit) -> None:
        if edit.kind is EditKind.INSERT:
            self._splice_out(edit.position, edit.payload)
        else:
            self._splice_in(edit.position, edit.payload)
        self.cursor = edit.cursor_before

    def _record(self, edit: Edit) -> None:
        self._apply(edit)
        self.undo_stack.append(edit)
        self.redo_stack.clear()
        self.dirty = True

    # -- editing operations -------------------------------------------------

    def insert(self, text: str) -> None:
        """Insert at the cursor; newlines split lines; no-op on empty text."""
        if text == "":
            return
        self._record(
            Edit(EditKind.INSERT, self.cursor, _logicalize(text), self.cursor)
        )

    def delete_backward(self) -> None:
        """Remove the code point before the cursor, joining lines across a
        newline; no-op at the start of the buffer."""
        line, col = self.cursor
        if col > 0:
            position, payload = (line, col - 1), self.lines[line][col - 1]
        elif line > 0:
            position, payload = (line - 1, len(self.lines[line - 1])), "\n"
        else:
            return
        self._record(Edit(EditKind.DELETE, position, payload, self.cursor))

    def delete_forward(self) -> None:
        """Remove the code point after the cursor, joining lines across a
        newline; no-op at the end of the buffer."""
        line, col = self.cursor
        if col < len(self.lines[line]):
            payload = self.lines[line][col]
        elif line < len(self.lines) - 1:
            payload = "\n"
        else:
            return
        self._record(Edit(EditKind.DELETE, self.cursor, payload, self.cursor))

    def undo(self) -> None:
        """Invert the most recent edit; no-op on an empty undo stack."""
        if not self.undo_stack:
            return
        edit = self.undo_stack.pop()
        self._invert(edit)
        self.redo_stack.append(edit)
        self.dirty = True

    def redo(self) -> None:
        """Reapply the most recently undone edit; no-op when nothing was
        undone."""
        if not self.redo_stack:
            return
        edit = self.redo_stack.pop()
        self._apply(edit)
        self.undo_stack.append(edit)
        self.dirty = True

    # -- cursor motion -------------------------------------------------------

    def move_to(self, pos: Position) -> None:
        if not self.position_valid(pos):
            raise IndexError("position %r out of range" % (pos,))
        self.cursor = pos

    def move_left(self) -> None:
        line, col = self.cursor
        if col > 0:
            self.cursor = (line, col - 1)
        elif line > 0:
            self.cursor = (line - 1, len(self.lines[line - 1]))

    def move_right(self) -> None:
        line, col = self.cursor
        if col < len(self.lines[line]):
            self.cursor = (line, col + 1)
        elif line < len(self.lines) - 1:
            self.cursor = (line + 1, 0)

    def move_home(self) -> None:
        self.cursor = (self.cursor[0], 0)

    def move_end(self) -> None:
        self.cursor = (self.cursor[0], len(self.lines[self.cursor[0]]))

    # -- search ---------------------------------------------------------------

    def find(self, needle: str, start: Position = (0, 0)) -> Position | None:
        """First occurrence of needle at or after start, scanning line-major.

        Comparison is exact code-point equality after yeh normalization of
        the needle. Needles are single-line.
        """
        if needle == "":
            raise ValueError("needle must be non-empty")
        if "\n" in needle:
            raise ValueError("needle must not contain a newline")
        needle = charset.normalize_yeh(needle)
        line, col = start
        for index in range(max(line, 0), len(self.lines)):
            from_col = col if index == line else 0
            hit = self.lines[index].find(needle, from_col)
            if hit >= 0:
                return (index, hit)
        return None

    # -- file I/O ---------------------------------------------------------------

    def save(self) -> bytes:
        """UTF-8 bytes, \\n separators, no byte-order mark; clears dirty."""
        data = self.text.encode("utf-8")
        self.dirty = False
        return data

    @classmethod
    def load(cls, data: bytes, path: str | None = None) -> "Document":
        """Parse UTF-8 bytes into a fresh document, cursor at the origin.

        Raises UnicodeDecodeError (carrying the byte offset) on invalid
        UTF-8.
        """
        return cls(data.decode("utf-8"), path=path)
