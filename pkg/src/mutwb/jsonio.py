"""JSON wire forms shared by the CLI and the HTTP service.

Matrices travel as {"rows": r, "cols": c, "data": [[...], ...]}.  Any
entry whose magnitude could lose precision in a 64-bit float (|x| >=
2^53) is emitted as an exact decimal string; parsers accept ints and
decimal strings interchangeably and reject floats.
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from .exchange import ExchangeMatrix, Quiver
from .genmut import ApproxTriangleData
from .intmatrix import IntMatrix
from .snf import AbelianGroupDescriptor, SnfResult
from .typea import FlipMove, Triangulation, validate

SAFE_INT_BOUND = 1 << 53


class FormatError(ValueError):
    """Raised when a JSON payload does not match the expected form."""


def dumps(obj: Any) -> str:
    """The one serializer for CLI output and HTTP bodies: sorted keys,
    two-space indent, trailing newline.  Keeping a single function makes
    byte-identical comparisons across surfaces trivial."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def encode_int(x: int) -> int | str:
    return x if -SAFE_INT_BOUND < x < SAFE_INT_BOUND else str(x)


def decode_int(value: Any, where: str = "entry") -> int:
    if isinstance(value, bool):
        raise FormatError(f"{where}: booleans are not integers")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError as exc:
            raise FormatError(f"{where}: {value!r} is not a decimal integer") from exc
    raise FormatError(f"{where}: expected an integer or decimal string, got {type(value).__name__}")


def _expect_dict(obj: Any, what: str) -> dict:
    if not isinstance(obj, dict):
        raise FormatError(f"expected a JSON object for {what}")
    return obj


def matrix_to_obj(m: IntMatrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "data": [[encode_int(x) for x in row] for row in m.entries],
    }


def matrix_from_obj(obj: Any) -> IntMatrix:
    obj = _expect_dict(obj, "a matrix")
    try:
        rows = decode_int(obj["rows"], "rows")
        cols = decode_int(obj["cols"], "cols")
        data = obj["data"]
    except KeyError as exc:
        raise FormatError(f"matrix object is missing key {exc.args[0]!r}") from exc
    if not isinstance(data, list) or len(data) != rows:
        raise FormatError(f"matrix data must be a list of {rows} rows")
    entries = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise FormatError(f"row {i} must be a list of {cols} entries")
        entries.append(tuple(decode_int(x, f"entry ({i}, {j})") for j, x in enumerate(row)))
    return IntMatrix(rows, cols, tuple(entries))


def exchange_to_obj(b: ExchangeMatrix) -> dict:
    obj = matrix_to_obj(b.b)
    obj["labels"] = list(b.labels)
    return obj


def exchange_from_obj(obj: Any) -> ExchangeMatrix:
    obj = _expect_dict(obj, "an exchange matrix")
    m = matrix_from_obj(obj)
    labels = obj.get("labels")
    if labels is None:
        labels = [str(i) for i in range(m.rows)]
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise FormatError("labels must be a list of strings")
    try:
        return ExchangeMatrix(m, tuple(labels))
    except Exception as exc:
        raise FormatError(str(exc)) from exc


def quiver_to_obj(q: Quiver) -> dict:
    return {
        "vertices": list(q.vertices),
        "arrows": [[src, tgt, encode_int(mult)] for src, tgt, mult in q.arrows],
    }


def quiver_from_obj(obj: Any) -> Quiver:
    obj = _expect_dict(obj, "a quiver")
    vertices = obj.get("vertices")
    arrows = obj.get("arrows", [])
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise FormatError("quiver vertices must be a list of strings")
    if not isinstance(arrows, list):
        raise FormatError("quiver arrows must be a list")
    parsed = []
    for i, arrow in enumerate(arrows):
        if not isinstance(arrow, list) or len(arrow) != 3:
            raise FormatError(f"arrow {i} must be [source, target, multiplicity]")
        src, tgt, mult = arrow
        if not isinstance(src, str) or not isinstance(tgt, str):
            raise FormatError(f"arrow {i} endpoints must be vertex names")
        parsed.append((src, tgt, decode_int(mult, f"arrow {i} multiplicity")))
    try:
        return Quiver(tuple(vertices), tuple(parsed))
    except Exception as exc:
        raise FormatError(str(exc)) from exc


def triangulation_to_obj(tri: Triangulation) -> dict:
    return {"m": tri.m, "diagonals": [list(d) for d in tri.canonical_diagonals()]}


def triangulation_from_obj(obj: Any) -> Triangulation:
    obj = _expect_dict(obj, "a triangulation")
    try:
        m = decode_int(obj["m"], "m")
        diagonals = obj["diagonals"]
    except KeyError as exc:
        raise FormatError(f"triangulation object is missing key {exc.args[0]!r}") from exc
    if not isinstance(diagonals, list):
        raise FormatError("diagonals must be a list of [a, b] pairs")
    pairs = []
    for i, pair in enumerate(diagonals):
        if not isinstance(pair, list) or len(pair) != 2:
            raise FormatError(f"diagonal {i} must be a pair [a, b]")
        pairs.append((decode_int(pair[0], f"diagonal {i}"), decode_int(pair[1], f"diagonal {i}")))
    return validate(m, pairs)


def flip_move_to_obj(move: FlipMove) -> dict:
    return {"removed": list(move.removed), "inserted": list(move.inserted)}


def approx_data_to_obj(d: ApproxTriangleData) -> dict:
    return {
        "new": list(d.new_labels),
        "old": list(d.old_labels),
        "alpha": matrix_to_obj(d.alpha),
        "beta": matrix_to_obj(d.beta),
    }


def approx_data_from_obj(obj: Any) -> ApproxTriangleData:
    obj = _expect_dict(obj, "approximation-triangle data")
    try:
        new_labels = obj["new"]
        old_labels = obj["old"]
        alpha = matrix_from_obj(obj["alpha"])
        beta = matrix_from_obj(obj["beta"])
    except KeyError as exc:
        raise FormatError(f"triangle data is missing key {exc.args[0]!r}") from exc
    for name, labels in (("new", new_labels), ("old", old_labels)):
        if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
            raise FormatError(f"{name} labels must be a list of strings")
    try:
        return ApproxTriangleData(tuple(new_labels), tuple(old_labels), alpha, beta)
    except Exception as exc:
        raise FormatError(str(exc)) from exc


def snf_to_obj(res: SnfResult) -> dict:
    return {"U": matrix_to_obj(res.u), "D": matrix_to_obj(res.d), "V": matrix_to_obj(res.v)}


def group_to_str(g: AbelianGroupDescriptor) -> str:
    """Render as in "Z^2 + Z/2 + Z/6" (with the direct-sum sign), "Z", or "0"."""
    parts = []
    if g.free_rank == 1:
        parts.append("Z")
    elif g.free_rank > 1:
        parts.append(f"Z^{g.free_rank}")
    parts.extend(f"Z/{t}" for t in g.torsion)
    return " ⊕ ".join(parts) if parts else "0"


def group_to_obj(g: AbelianGroupDescriptor) -> dict:
    return {
        "free_rank": g.free_rank,
        "torsion": [encode_int(t) for t in g.torsion],
        "display": group_to_str(g),
    }


def vector_to_obj(v: Sequence[int]) -> list:
    return [encode_int(x) for x in v]
