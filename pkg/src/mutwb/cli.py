"""Command-line verbs for the workbench.

Verbs: mutate, k0, snf, quiver, typea-flip, typea-path, verify-paper,
serve.  All file I/O uses the JSON forms from :mod:`mutwb.jsonio`; "-"
means stdin/stdout.  Exit codes: 2 for unparseable input, 3 for a bad
vertex index or illegal move, 1 for any other domain failure (including
verify-paper mismatches).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import jsonio
from .errors import IndexOutOfRange, MutwbError, NotADiagonal
from .exchange import fz_mutate, matrix_to_quiver, mutate_via_s, quiver_to_matrix
from .snf import cokernel, snf
from .typea import exchange_matrix_of, flip, flip_path
from .verify import all_passed, run_checks

PARSE_ERROR = 2
INDEX_ERROR = 3

dumps = jsonio.dumps


def _read_json(path: str) -> Any:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return json.loads(text)


def _write(text: str, path: str | None) -> None:
    if path and path != "-":
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_mutate(args: argparse.Namespace) -> int:
    b = jsonio.exchange_from_obj(_read_json(args.input))
    mutated = mutate_via_s(b, args.vertex) if args.via == "s-matrix" else fz_mutate(b, args.vertex)
    _write(dumps(jsonio.exchange_to_obj(mutated)), args.output)
    return 0


def _cmd_k0(args: argparse.Namespace) -> int:
    m = jsonio.matrix_from_obj(_read_json(args.input))
    print(jsonio.group_to_str(cokernel(m)))
    return 0


def _cmd_snf(args: argparse.Namespace) -> int:
    m = jsonio.matrix_from_obj(_read_json(args.input))
    _write(dumps(jsonio.snf_to_obj(snf(m))), args.output)
    return 0


def _cmd_quiver(args: argparse.Namespace) -> int:
    obj = _read_json(args.input)
    if isinstance(obj, dict) and "vertices" in obj:
        out = jsonio.exchange_to_obj(quiver_to_matrix(jsonio.quiver_from_obj(obj)))
    elif isinstance(obj, dict) and "diagonals" in obj:
        tri = jsonio.triangulation_from_obj(obj)
        out = jsonio.exchange_to_obj(exchange_matrix_of(tri))
    else:
        out = jsonio.quiver_to_obj(matrix_to_quiver(jsonio.exchange_from_obj(obj)))
    _write(dumps(out), args.output)
    return 0


def _parse_diagonal(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise jsonio.FormatError(f"--diagonal wants 'a,b', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise jsonio.FormatError(f"--diagonal wants two integers, got {text!r}") from exc


def _cmd_typea_flip(args: argparse.Namespace) -> int:
    tri = jsonio.triangulation_from_obj(_read_json(args.input))
    new_tri, move = flip(tri, _parse_diagonal(args.diagonal))
    out = jsonio.triangulation_to_obj(new_tri)
    out["move"] = jsonio.flip_move_to_obj(move)
    _write(dumps(out), args.output)
    return 0


def _cmd_typea_path(args: argparse.Namespace) -> int:
    tri1 = jsonio.triangulation_from_obj(_read_json(args.input))
    tri2 = jsonio.triangulation_from_obj(_read_json(args.target))
    moves = flip_path(tri1, tri2)
    out = {"length": len(moves), "moves": [jsonio.flip_move_to_obj(mv) for mv in moves]}
    _write(dumps(out), args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_checks()
    if args.json:
        payload = [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]
        _write(dumps({"checks": payload, "all_passed": all_passed(results)}), None)
    else:
        for r in results:
            line = f"{'PASS' if r.passed else 'FAIL'}  {r.name}"
            if r.detail:
                line += f"  ({r.detail})"
            print(line)
    return 0 if all_passed(results) else 1


def _cmd_serve(args: argparse.Namespace) -> int:
    from .service import serve

    serve(host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mutwb",
        description="Exact-arithmetic workbench for quiver mutation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="mutate an exchange matrix at a vertex")
    p.add_argument("input", help="exchange-matrix JSON file, or - for stdin")
    p.add_argument("-k", "--vertex", type=int, required=True, help="0-based vertex index")
    p.add_argument("--via", choices=("formula", "s-matrix"), default="formula",
                   help="mutation route; both give identical output")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=_cmd_mutate)

    p = sub.add_parser("k0", help="invariant factors of Z^n modulo the column span")
    p.add_argument("input")
    p.set_defaults(fn=_cmd_k0)

    p = sub.add_parser("snf", help="Smith normal form U A V = D")
    p.add_argument("input")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=_cmd_snf)

    p = sub.add_parser(
        "quiver",
        help="convert quiver <-> exchange matrix; a triangulation yields its exchange matrix")
    p.add_argument("input")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=_cmd_quiver)

    p = sub.add_parser("typea-flip", help="flip a diagonal of a polygon triangulation")
    p.add_argument("input", help="triangulation JSON file, or - for stdin")
    p.add_argument("--diagonal", required=True, metavar="A,B")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=_cmd_typea_flip)

    p = sub.add_parser("typea-path", help="shortest flip sequence between two triangulations")
    p.add_argument("input")
    p.add_argument("target")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=_cmd_typea_path)

    p = sub.add_parser("verify-paper", help="run the built-in worked-example fixtures")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("serve", help="run the local JSON-over-HTTP session service")
    p.add_argument("--port", type=int, default=8642)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(fn=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (json.JSONDecodeError, jsonio.FormatError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"mutwb: cannot read input: {exc}", file=sys.stderr)
        return PARSE_ERROR
    except (IndexOutOfRange, NotADiagonal) as exc:
        print(f"mutwb: {exc}", file=sys.stderr)
        return INDEX_ERROR
    except MutwbError as exc:
        print(f"mutwb: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
