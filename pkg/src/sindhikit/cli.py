"""Command-line front end.

Subcommands:

  shape    print shaped glyphs for a text, one per line
  order    print the visual permutation of a line
  inspect  print code point, name, category and joining class per character
  type     run a key sequence through a layout and print the typed text
  dict     look a word up in one of the builtin dictionaries
  export   write the repertoire TSV and, optionally, the code-point chart
  serve    start the local editing service

Exit codes: 0 success, 1 runtime failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import charset, dictionary, keyboard, ordering, shaping
from .document import Document

LAYOUT_DIR_ENV = "SINDHIKIT_LAYOUT_DIR"


def _layout_dir() -> str | None:
    return os.environ.get(LAYOUT_DIR_ENV)


def _read_text_argument(text: str) -> str:
    if text == "-":
        data = sys.stdin.read()
        return data[:-1] if data.endswith("\n") else data
    return text


def cmd_shape(args) -> int:
    text = _read_text_argument(args.text)
    for line in shaping.debug_lines(shaping.shape_text(text), verbose=args.debug):
        print(line)
    return 0


def cmd_order(args) -> int:
    permutation = ordering.logical_to_visual(args.text)
    if permutation:
        print(" ".join(str(i) for i in permutation))
    return 0


def cmd_inspect(args) -> int:
    for ch in _read_text_argument(args.text):
        cp = ord(ch)
        info = charset.lookup(cp)
        name = info.name if info else "-"
        category = charset.classify(cp)[0].value
        joining = charset.joining_class(cp).value
        print("%s %s %s %s" % (charset.format_code_point(cp), name, category, joining))
    return 0


def _parse_key_token(token: str) -> tuple[str, bool]:
    if token.startswith("+") and len(token) > 1:
        return token[1:], True
    if len(token) == 1 and "A" <= token <= "Z":
        return token.lower(), True
    return token, False


def cmd_type(args) -> int:
    try:
        layout = keyboard.get_layout(args.layout, _layout_dir())
    except KeyError:
        print("no layout named %r" % args.layout, file=sys.stderr)
        return 1
    doc = Document()
    for token in args.keys.split():
        key, shift = _parse_key_token(token)
        action = keyboard.translate_key(layout, key, shift)
        if action is None:
            print("key %r is not mapped in layout %s" % (token, layout.name),
                  file=sys.stderr)
            return 1
        if isinstance(action, keyboard.Insert):
            doc.insert(chr(action.code_point))
        else:
            {
                keyboard.ControlKey.BACKSPACE: doc.delete_backward,
                keyboard.ControlKey.DELETE: doc.delete_forward,
                keyboard.ControlKey.LEFT: doc.move_left,
                keyboard.ControlKey.RIGHT: doc.move_right,
                keyboard.ControlKey.HOME: doc.move_home,
                keyboard.ControlKey.END: doc.move_end,
                keyboard.ControlKey.ENTER: lambda: doc.insert("\n"),
            }[action.key]()
    print(doc.text)
    return 0


def cmd_dict(args) -> int:
    try:
        d = dictionary.load_builtin(args.name)
    except KeyError:
        print(
            "no dictionary named %r (builtin: %s)"
            % (args.name, ", ".join(dictionary.builtin_names())),
            file=sys.stderr,
        )
        return 1
    for gloss in d.lookup(args.word):
        print(gloss)
    return 0


def cmd_export(args) -> int:
    from . import report

    if args.tsv:
        report.write_tsv(args.tsv)
        print("wrote %s" % args.tsv, file=sys.stderr)
    else:
        sys.stdout.write(charset.repertoire_tsv())
    if args.figure:
        report.render_plane_figure(args.figure)
        print("wrote %s" % args.figure, file=sys.stderr)
    return 0


def cmd_serve(args) -> int:
    from . import service

    service.serve(args.port, file=args.file, layout_dir=_layout_dir())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sindhikit",
        description="Unicode Sindhi text engine: shaping, ordering, typing, "
        "dictionaries, and the local editor service.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shape", help="shape text into form-tagged glyphs")
    p.add_argument("text", help="text to shape, or - to read stdin")
    p.add_argument("--debug", action="store_true", help="add span and ligature columns")
    p.set_defaults(func=cmd_shape)

    p = sub.add_parser("order", help="print the visual permutation of a line")
    p.add_argument("text")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("inspect", help="per-character repertoire data")
    p.add_argument("text", help="text to inspect, or - to read stdin")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("type", help="type a key sequence through a layout")
    p.add_argument("--layout", required=True, help="layout name")
    p.add_argument(
        "keys",
        help="whitespace-separated key ids; +k or a capital letter means shifted",
    )
    p.set_defaults(func=cmd_type)

    p = sub.add_parser("dict", help="look a word up in a builtin dictionary")
    p.add_argument("name", help=", ".join(dictionary.builtin_names()))
    p.add_argument("word")
    p.set_defaults(func=cmd_dict)

    p = sub.add_parser("export", help="write the repertoire TSV (and chart)")
    p.add_argument("--tsv", metavar="PATH", help="TSV output file (default: stdout)")
    p.add_argument("--figure", metavar="PATH", help="render the code-point chart")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("serve", help="start the local editing service")
    p.add_argument("--port", type=int, required=True)
    p.add_argument("--file", help="document to open (or create on save)")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 1
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
