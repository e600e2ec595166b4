"""
Command-line front end.

Exit codes: 0 success or verified, 1 verification failure or operand kind
mismatch, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from typing import Optional, Sequence

from .algebra import AlgebraElement, AlgebraKind, verify_presentation, word_to_element
from .cellular import verify_cellularity
from .coxeter import Word, build_graph, canonical_word, enumerate_fc
from .diagram import DECORATED_D, PLAIN_A, Diagram, Mode, diagram_of_word
from .errors import DimensionError, TLDError
from .heap import classify_type, heap_of
from .render import diagram_ascii, diagram_svg, heap_ascii, heap_svg

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class _InputError(Exception):
    pass


def threads() -> int:
    """``TLD_THREADS`` as a non-negative int (0 = auto). Work is single-threaded."""
    raw = os.environ.get("TLD_THREADS", "0").strip() or "0"
    try:
        value = int(raw)
    except ValueError:
        raise _InputError(f"TLD_THREADS must be an integer, got {raw!r}") from None
    if value < 0:
        raise _InputError("TLD_THREADS must be >= 0")
    return value


def write_output(text: str, path: Optional[str]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tld-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc}") from None


def _load_json(path: str) -> dict:
    try:
        data = json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise _InputError(f"{path}: {exc}") from None
    if not isinstance(data, dict):
        raise _InputError(f"{path}: expected a JSON object")
    return data


def cmd_fc_enum(args) -> int:
    graph = build_graph(args.type, args.rank)
    if args.heap_type != "all" and graph.family != "D":
        raise _InputError("--heap-type I/II needs --type D")
    words = enumerate_fc(graph)
    if args.heap_type != "all":
        words = [w for w in words if classify_type(w).value == args.heap_type]
    if args.format == "count":
        write_output(str(len(words)), args.out)
    else:
        payload = [str(canonical_word(w)) for w in words]
        write_output(json.dumps(payload), args.out)
    return EXIT_OK


def _operand(kind: AlgebraKind, path: Optional[str], word: Optional[str]) -> AlgebraElement:
    if path is not None:
        data = _load_json(path)
        if "terms" in data:
            element = AlgebraElement.from_dict(data)
            if element.kind != kind:
                raise DimensionError(f"{path} holds a {element.kind.name}({element.kind.rank}) element")
            return element
        return AlgebraElement.basis(kind, Diagram.from_dict(data, kind.diagram_kind))
    return word_to_element(Word.parse(kind.graph, word or ""), kind)


def cmd_mul(args) -> int:
    kind = AlgebraKind(args.algebra, args.rank)
    lhs = _operand(kind, args.lhs, args.lword)
    rhs = _operand(kind, args.rhs, args.rword)
    write_output((lhs * rhs).to_json(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.what == "cellular":
        if args.algebra not in (None, "lfd-d"):
            raise _InputError("cellularity is checked for lfd-d only")
        build_graph("D", args.rank)
        report = verify_cellularity(args.rank)
        ok = all(report[a] == "pass" for a in ("axiom1", "axiom2", "axiom3"))
    else:
        reports = [verify_presentation(name, args.rank)
                   for name in ([args.algebra] if args.algebra else ["dtl-d", "lfd-d"])]
        report = reports[0] if len(reports) == 1 else {
            "rank": args.rank, "algebras": reports, "pass": all(r["pass"] for r in reports)}
        ok = report["pass"]
    write_output(json.dumps(report), args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_render(args) -> int:
    if args.inp is not None:
        if args.what == "heap":
            raise _InputError("heap rendering needs --word")
        data = _load_json(args.inp)
        target = Diagram.from_dict(data, PLAIN_A if args.type == "A" else DECORATED_D)
        drawer = diagram_svg if args.format == "svg" else diagram_ascii
    else:
        if args.word is None or args.type is None or args.rank is None:
            raise _InputError("give --in FILE or --word W --type T --rank N")
        word = Word.parse(build_graph(args.type, args.rank), args.word)
        if args.what == "diagram":
            scaled = diagram_of_word(word, Mode.DTL)
            target = scaled.diagram
            drawer = diagram_svg if args.format == "svg" else diagram_ascii
        else:
            target = heap_of(word)
            drawer = heap_svg if args.format == "svg" else heap_ascii
    write_output(drawer(target), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tld", description=(
        "Fully commutative elements, heaps and decorated Temperley-Lieb diagrams."))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fc-enum", help="enumerate fully commutative elements")
    p.add_argument("--type", required=True, choices=["A", "D"])
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--heap-type", default="all", choices=["I", "II", "all"])
    p.add_argument("--format", default="json", choices=["count", "json"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_fc_enum)

    p = sub.add_parser("mul", help="multiply two algebra elements")
    p.add_argument("--algebra", required=True, choices=["dtl-a", "dtl-d", "lfd-d"])
    p.add_argument("--rank", required=True, type=int)
    lhs = p.add_mutually_exclusive_group(required=True)
    lhs.add_argument("--lhs", metavar="FILE")
    lhs.add_argument("--lword", metavar="W")
    rhs = p.add_mutually_exclusive_group(required=True)
    rhs.add_argument("--rhs", metavar="FILE")
    rhs.add_argument("--rword", metavar="W")
    p.add_argument("--out")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("verify", help="check relations or cellularity")
    p.add_argument("--what", required=True, choices=["relations", "cellular"])
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--algebra", choices=["dtl-a", "dtl-d", "lfd-d"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a diagram or a heap")
    p.add_argument("--in", dest="inp", metavar="FILE")
    p.add_argument("--word")
    p.add_argument("--type", choices=["A", "D"])
    p.add_argument("--rank", type=int)
    p.add_argument("--what", choices=["diagram", "heap"])
    p.add_argument("--format", default="ascii", choices=["ascii", "svg"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "render" and args.what is None:
        args.what = "diagram" if args.inp is not None else "heap"
    try:
        threads()
        return args.func(args)
    except DimensionError as exc:
        print(f"tld: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (_InputError, TLDError) as exc:
        print(f"tld: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
