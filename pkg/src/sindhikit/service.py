"""Local editing service: one document, JSON requests, HTTP transport.

A request is {"op": <name>, "args": {...}}; every request yields exactly
one response, {"ok": true, "value": ...} on success or {"ok": false,
"error": {"code", "message", "detail"}} with a code from the closed set
PARSE, RANGE, ENCODING, NOT_FOUND, CONFLICT, INTERNAL. The full protocol
is documented in PROTOCOL.md.

Document views are assembled fresh on every request: the shaped glyphs
and visual permutations are recomputed from the buffer, never cached.
All document mutations are serialized through one lock; pure operations
(shaping, dictionary lookups, layout reads) run unrestricted.

The HTTP transport binds to localhost and accepts one op per POST to
/api. This is a single-user editor backend, not a network service.
"""

from __future__ import annotations

import json
import os
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import charset, dictionary, keyboard, ordering, shaping
from .document import Document
from .keyboard import Control, ControlKey, Insert

PARSE = "PARSE"
RANGE = "RANGE"
ENCODING = "ENCODING"
NOT_FOUND = "NOT_FOUND"
CONFLICT = "CONFLICT"
INTERNAL = "INTERNAL"

ERROR_CODES = (PARSE, RANGE, ENCODING, NOT_FOUND, CONFLICT, INTERNAL)


class ServiceError(Exception):
    def __init__(self, code: str, message: str, detail=None):
        super().__init__(message)
        self.code = code
        self.detail = detail


def _shaped_record(glyph: shaping.ShapedGlyph) -> dict:
    return {
        "base": charset.format_code_point(glyph.base),
        "form": glyph.form.value.lower(),
        "ligature": None
        if glyph.ligature_of is None
        else [charset.format_code_point(cp) for cp in glyph.ligature_of],
    }


def shape_records(text: str) -> list[dict]:
    return [_shaped_record(g) for g in shaping.shape_text(text)]


def doc_view(doc: Document) -> dict:
    """Serializable view of the document; display data recomputed from
    scratch."""
    line, column = doc.cursor
    return {
        "lines": list(doc.lines),
        "cursor": {"line": line, "column": column},
        "dirty": doc.dirty,
        "shaped": [shape_records(text) for text in doc.lines],
        "visual": [ordering.logical_to_visual(text) for text in doc.lines],
        "caretVisual": ordering.caret_visual_position(doc.lines[line], column),
    }


def layout_view(layout: keyboard.Layout) -> dict:
    def key_record(key_id):
        shifted = layout.bindings.get((key_id, True))
        return {
            "key": key_id,
            "unshifted": charset.format_code_point(layout.bindings[(key_id, False)]),
            "shifted": None if shifted is None else charset.format_code_point(shifted),
        }

    return {
        "name": layout.name,
        "rows": [[key_record(k) for k in row] for row in layout.rows],
    }


def _require(args: dict, name: str, kind) -> object:
    if name not in args:
        raise ServiceError(PARSE, "missing argument %r" % name)
    value = args[name]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise ServiceError(PARSE, "argument %r has the wrong type" % name)
    return value


def _position_arg(args: dict, name: str, default=(0, 0)) -> tuple[int, int]:
    if name not in args or args[name] is None:
        return default
    raw = args[name]
    if not isinstance(raw, dict):
        raise ServiceError(PARSE, "argument %r must be a position object" % name)
    line = raw.get("line")
    column = raw.get("column")
    if not isinstance(line, int) or not isinstance(column, int):
        raise ServiceError(PARSE, "position needs integer line and column")
    if line < 0 or column < 0:
        raise ServiceError(RANGE, "position out of range")
    return (line, column)


class EditorService:
    """One document, the builtin dictionaries, and the layout registry."""

    def __init__(self, layout_dir: str | None = None):
        self.doc = Document()
        self.layout_dir = layout_dir
        self.dictionaries = {
            name: dictionary.load_builtin(name) for name in dictionary.builtin_names()
        }
        self._lock = threading.RLock()

    # -- op implementations ---------------------------------------------

    def _layout(self, name: str) -> keyboard.Layout:
        try:
            return keyboard.get_layout(name, self.layout_dir)
        except KeyError:
            raise ServiceError(NOT_FOUND, "no layout named %r" % name) from None

    def _dictionary(self, name: str) -> dictionary.Dictionary:
        try:
            return self.dictionaries[name]
        except KeyError:
            raise ServiceError(NOT_FOUND, "no dictionary named %r" % name) from None

    def _move_visual(self, direction: str) -> None:
        doc = self.doc
        line_index, column = doc.cursor
        text = doc.lines[line_index]
        boundaries = [
            ordering.caret_visual_position(text, i) for i in range(len(text) + 1)
        ]
        current = boundaries[column]
        if direction == "left":
            candidates = [
                (b, i) for i, b in enumerate(boundaries) if b < current
            ]
            target = max(candidates, key=lambda pair: (pair[0], -pair[1]), default=None)
        else:
            candidates = [
                (b, i) for i, b in enumerate(boundaries) if b > current
            ]
            target = min(candidates, key=lambda pair: (pair[0], pair[1]), default=None)
        if target is not None:
            doc.move_to((line_index, target[1]))

    def _move_cursor(self, args: dict) -> None:
        direction = _require(args, "dir", str)
        mode = args.get("mode", "logical")
        if direction not in ("left", "right", "home", "end"):
            raise ServiceError(PARSE, "dir must be left, right, home or end")
        if mode not in ("logical", "visual"):
            raise ServiceError(PARSE, "mode must be logical or visual")
        doc = self.doc
        if direction == "home":
            doc.move_home()
        elif direction == "end":
            doc.move_end()
        elif mode == "logical":
            doc.move_left() if direction == "left" else doc.move_right()
        else:
            self._move_visual(direction)

    def _keypress(self, args: dict) -> None:
        layout = self._layout(_require(args, "name", str))
        key = _require(args, "key", str)
        shift = args.get("shift", False)
        if not isinstance(shift, bool):
            raise ServiceError(PARSE, "shift must be a boolean")
        action = keyboard.translate_key(layout, key, shift)
        doc = self.doc
        if isinstance(action, Insert):
            doc.insert(chr(action.code_point))
        elif isinstance(action, Control):
            handler = {
                ControlKey.BACKSPACE: doc.delete_backward,
                ControlKey.DELETE: doc.delete_forward,
                ControlKey.LEFT: doc.move_left,
                ControlKey.RIGHT: doc.move_right,
                ControlKey.HOME: doc.move_home,
                ControlKey.END: doc.move_end,
                ControlKey.ENTER: lambda: doc.insert("\n"),
            }[action.key]
            handler()

    def _open(self, path: str) -> None:
        try:
            with open(path, "rb") as f:
                data = f.read()
        except FileNotFoundError:
            raise ServiceError(NOT_FOUND, "no such file: %s" % path) from None
        except OSError as exc:
            raise ServiceError(INTERNAL, "cannot read %s: %s" % (path, exc)) from None
        try:
            self.doc = Document.load(data, path=path)
        except UnicodeDecodeError as exc:
            raise ServiceError(
                ENCODING,
                "invalid UTF-8 in %s" % path,
                detail={"byteOffset": exc.start},
            ) from None

    def _save(self, args: dict) -> dict:
        path = args.get("path", self.doc.path)
        if not isinstance(path, str) or not path:
            raise ServiceError(PARSE, "no path to save to")
        data = self.doc.text.encode("utf-8")
        try:
            with open(path, "wb") as f:
                f.write(data)
        except OSError as exc:
            raise ServiceError(INTERNAL, "cannot write %s: %s" % (path, exc)) from None
        self.doc.dirty = False
        self.doc.path = path
        return {"path": path, "bytes": len(data)}

    def _find(self, args: dict):
        needle = _require(args, "needle", str)
        start = _position_arg(args, "from")
        try:
            hit = self.doc.find(needle, start)
        except ValueError as exc:
            raise ServiceError(PARSE, str(exc)) from None
        if hit is None:
            return None
        return {"line": hit[0], "column": hit[1]}

    # -- dispatch ----------------------------------------------------------

    def handle(self, request) -> dict:
        """One response per request; errors come back in-band."""
        try:
            if not isinstance(request, dict):
                raise ServiceError(PARSE, "request must be an object")
            op = request.get("op")
            if not isinstance(op, str):
                raise ServiceError(PARSE, "request needs an op name")
            args = request.get("args", {})
            if not isinstance(args, dict):
                raise ServiceError(PARSE, "args must be an object")
            return {"ok": True, "value": self._dispatch(op, args)}
        except ServiceError as exc:
            return {
                "ok": False,
                "error": {
                    "code": exc.code,
                    "message": str(exc),
                    "detail": exc.detail,
                },
            }
        except Exception as exc:  # last resort: keep the one-response rule
            return {
                "ok": False,
                "error": {"code": INTERNAL, "message": str(exc), "detail": None},
            }

    def _dispatch(self, op: str, args: dict):
        if op.startswith("doc.") or op == "layout.keypress":
            with self._lock:
                return self._dispatch_doc(op, args)
        if op == "shape.text":
            return shape_records(_require(args, "text", str))
        if op == "layout.get":
            return layout_view(self._layout(_require(args, "name", str)))
        if op == "dict.lookup":
            d = self._dictionary(_require(args, "name", str))
            return d.lookup(_require(args, "word", str))
        if op == "dict.prefix":
            d = self._dictionary(_require(args, "name", str))
            prefix = _require(args, "prefix", str)
            limit = _require(args, "limit", int)
            if limit < 1:
                raise ServiceError(RANGE, "limit must be >= 1")
            return d.prefix_search(prefix, limit)
        raise ServiceError(NOT_FOUND, "unknown op %r" % op)

    def _dispatch_doc(self, op: str, args: dict):
        doc = self.doc
        if op == "doc.get":
            pass
        elif op == "doc.insert":
            doc.insert(_require(args, "text", str))
        elif op == "doc.deleteBackward":
            doc.delete_backward()
        elif op == "doc.deleteForward":
            doc.delete_forward()
        elif op == "doc.moveCursor":
            self._move_cursor(args)
        elif op == "doc.undo":
            doc.undo()
        elif op == "doc.redo":
            doc.redo()
        elif op == "doc.find":
            return self._find(args)
        elif op == "doc.open":
            self._open(_require(args, "path", str))
        elif op == "doc.save":
            return self._save(args)
        elif op == "layout.keypress":
            self._keypress(args)
        else:
            raise ServiceError(NOT_FOUND, "unknown op %r" % op)
        return doc_view(self.doc)


# -- HTTP transport ------------------------------------------------------


class _Handler(BaseHTTPRequestHandler):
    service: EditorService  # set by make_server

    def _respond(self, payload: dict, status: int = 200) -> None:
        body = json.dumps(payload, ensure_ascii=False).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_POST(self):
        if self.path != "/api":
            self._respond(
                {
                    "ok": False,
                    "error": {
                        "code": NOT_FOUND,
                        "message": "POST /api is the only endpoint",
                        "detail": None,
                    },
                },
                status=404,
            )
            return
        length = int(self.headers.get("Content-Length", 0))
        body = self.rfile.read(length)
        try:
            request = json.loads(body.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            self._respond(
                {
                    "ok": False,
                    "error": {
                        "code": PARSE,
                        "message": "request body is not valid JSON: %s" % exc,
                        "detail": None,
                    },
                }
            )
            return
        self._respond(self.service.handle(request))

    def log_message(self, fmt, *args):  # keep the test output quiet
        pass


def make_server(
    port: int,
    file: str | None = None,
    layout_dir: str | None = None,
    host: str = "127.0.0.1",
) -> ThreadingHTTPServer:
    """Configured HTTP server (not yet serving); caller runs
    serve_forever()."""
    service = EditorService(layout_dir=layout_dir)
    if file is not None:
        if os.path.exists(file):
            response = service.handle({"op": "doc.open", "args": {"path": file}})
            if not response["ok"]:
                raise SystemExit(
                    "cannot open %s: %s" % (file, response["error"]["message"])
                )
        else:
            service.doc.path = file
    handler = type("BoundHandler", (_Handler,), {"service": service})
    return ThreadingHTTPServer((host, port), handler)


def serve(
    port: int,
    file: str | None = None,
    layout_dir: str | None = None,
    host: str = "127.0.0.1",
) -> None:
    server = make_server(port, file=file, layout_dir=layout_dir, host=host)
    address = "http://%s:%d/api" % (server.server_address[0], server.server_address[1])
    print("sindhikit service listening on %s" % address, flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
