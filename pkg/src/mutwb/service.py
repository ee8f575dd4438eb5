"""Local JSON-over-HTTP session service.

Sessions hold an initial object (exchange matrix or triangulation) plus a
linear move history; the current state is always recomputed by replaying
the history, so GET responses are deterministic functions of it.  State
lives in memory only -- this is a desk tool, nothing persists across
restarts.

Endpoints:
    POST /session                 {"matrix": {...}} or {"triangulation": {...}}
    POST /session/<id>/mutate     {"k": i}
    POST /session/<id>/flip       {"diagonal": [a, b]}
    POST /session/<id>/undo       {}
    GET  /session/<id>

On a triangulation session, "mutate" at k flips the k-th diagonal in the
current canonical order; "flip" on a matrix session is refused with 409.
Errors: 400 invalid body, 404 unknown session, 409 illegal move.
"""

from __future__ import annotations

import json
import re
import threading
import uuid
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Any

from . import jsonio
from .errors import IndexOutOfRange, MutwbError, NotADiagonal
from .exchange import ExchangeMatrix, fz_mutate, matrix_to_quiver
from .snf import cokernel
from .typea import Triangulation, exchange_matrix_of, flip, quiver_of


class BadRequest(Exception):
    """Maps to HTTP 400."""


class IllegalMove(Exception):
    """Maps to HTTP 409."""


class Session:
    def __init__(self, kind: str, initial: Any):
        self.id = uuid.uuid4().hex[:12]
        self.kind = kind  # "matrix" | "triangulation"
        self.initial = initial
        self.moves: list[dict] = []
        self.lock = threading.Lock()


def _apply_move(kind: str, state: Any, move: dict) -> tuple[Any, dict]:
    """Apply one stored move; returns (new state, enriched history entry)."""
    if move["type"] == "mutate":
        k = move["k"]
        if kind == "matrix":
            try:
                return fz_mutate(state, k), {"type": "mutate", "k": k}
            except IndexOutOfRange as exc:
                raise IllegalMove(str(exc)) from exc
        diagonals = state.canonical_diagonals()
        if not 0 <= k < len(diagonals):
            raise IllegalMove(f"vertex index {k} outside [0, {len(diagonals)})")
        new_state, flipped = flip(state, diagonals[k])
        return new_state, {"type": "mutate", "k": k,
                           "removed": list(flipped.removed),
                           "inserted": list(flipped.inserted)}
    if move["type"] == "flip":
        if kind != "triangulation":
            raise IllegalMove("flip is only valid on a triangulation session")
        try:
            new_state, flipped = flip(state, tuple(move["diagonal"]))
        except NotADiagonal as exc:
            raise IllegalMove(str(exc)) from exc
        return new_state, {"type": "flip",
                           "removed": list(flipped.removed),
                           "inserted": list(flipped.inserted)}
    raise IllegalMove(f"unknown move type {move['type']!r}")


def _replay(session: Session) -> tuple[Any, list[dict]]:
    state = session.initial
    history = []
    for move in session.moves:
        state, entry = _apply_move(session.kind, state, move)
        history.append(entry)
    return state, history


def _state_payload(session: Session) -> dict:
    state, history = _replay(session)
    if session.kind == "matrix":
        b = state
        current = jsonio.exchange_to_obj(state)
    else:
        b = exchange_matrix_of(state)
        current = jsonio.triangulation_to_obj(state)
    return {
        "session_id": session.id,
        "kind": session.kind,
        "current": current,
        "b": jsonio.exchange_to_obj(b),
        "quiver": jsonio.quiver_to_obj(matrix_to_quiver(b) if session.kind == "matrix"
                                       else quiver_of(state)),
        "k0": jsonio.group_to_obj(cokernel(b.b)),
        "history": history,
    }


class SessionStore:
    def __init__(self) -> None:
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, body: Any) -> Session:
        if not isinstance(body, dict):
            raise BadRequest("body must be a JSON object")
        has_matrix = "matrix" in body
        has_tri = "triangulation" in body
        if has_matrix == has_tri:
            raise BadRequest('body must contain exactly one of "matrix" or "triangulation"')
        try:
            if has_matrix:
                session = Session("matrix", jsonio.exchange_from_obj(body["matrix"]))
            else:
                session = Session("triangulation",
                                  jsonio.triangulation_from_obj(body["triangulation"]))
        except (jsonio.FormatError, MutwbError, ValueError) as exc:
            raise BadRequest(str(exc)) from exc
        with self._lock:
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session | None:
        with self._lock:
            return self._sessions.get(session_id)

    def push_move(self, session: Session, move: dict) -> dict:
        """Validate the move against the replayed state, then append it.

        The per-session lock serializes writers, so the observable
        history is always a linear sequence.
        """
        with session.lock:
            state, _ = _replay(session)
            _apply_move(session.kind, state, move)  # raises IllegalMove if invalid
            session.moves.append(move)
            return _state_payload(session)

    def undo(self, session: Session) -> dict:
        with session.lock:
            if not session.moves:
                raise IllegalMove("history is empty, nothing to undo")
            session.moves.pop()
            return _state_payload(session)

    def snapshot(self, session: Session) -> dict:
        with session.lock:
            return _state_payload(session)


_SESSION_RE = re.compile(r"^/session/([0-9a-f]+)$")
_MOVE_RE = re.compile(r"^/session/([0-9a-f]+)/(mutate|flip|undo)$")


def _parse_mutate(body: Any) -> dict:
    if not isinstance(body, dict) or "k" not in body:
        raise BadRequest('mutate body must be {"k": <vertex index>}')
    k = body["k"]
    if isinstance(k, bool) or not isinstance(k, int):
        raise BadRequest('"k" must be an integer')
    return {"type": "mutate", "k": k}


def _parse_flip(body: Any) -> dict:
    if not isinstance(body, dict) or "diagonal" not in body:
        raise BadRequest('flip body must be {"diagonal": [a, b]}')
    diagonal = body["diagonal"]
    if (not isinstance(diagonal, list) or len(diagonal) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in diagonal)):
        raise BadRequest('"diagonal" must be a pair of integers')
    return {"type": "flip", "diagonal": diagonal}


class Handler(BaseHTTPRequestHandler):
    store: SessionStore  # set by make_server
    protocol_version = "HTTP/1.1"

    def log_message(self, fmt: str, *args: Any) -> None:  # quiet by default
        pass

    def _send(self, status: int, payload: dict) -> None:
        body = jsonio.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _read_body(self) -> Any:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            return {}
        try:
            return json.loads(raw)
        except json.JSONDecodeError as exc:
            raise BadRequest(f"invalid JSON body: {exc}") from exc

    def do_OPTIONS(self) -> None:  # CORS preflight for the browser UI
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self) -> None:
        match = _SESSION_RE.match(self.path)
        if not match:
            self._send(404, {"error": "unknown path"})
            return
        session = self.store.get(match.group(1))
        if session is None:
            self._send(404, {"error": "unknown session"})
            return
        self._send(200, self.store.snapshot(session))

    def do_POST(self) -> None:
        try:
            body = self._read_body()
            if self.path == "/session":
                session = self.store.create(body)
                self._send(200, self.store.snapshot(session))
                return
            match = _MOVE_RE.match(self.path)
            if not match:
                self._send(404, {"error": "unknown path"})
                return
            session = self.store.get(match.group(1))
            if session is None:
                self._send(404, {"error": "unknown session"})
                return
            action = match.group(2)
            if action == "undo":
                self._send(200, self.store.undo(session))
            elif action == "mutate":
                self._send(200, self.store.push_move(session, _parse_mutate(body)))
            else:
                self._send(200, self.store.push_move(session, _parse_flip(body)))
        except BadRequest as exc:
            self._send(400, {"error": str(exc)})
        except IllegalMove as exc:
            self._send(409, {"error": str(exc)})


def make_server(host: str = "127.0.0.1", port: int = 0,
                store: SessionStore | None = None) -> ThreadingHTTPServer:
    handler = type("BoundHandler", (Handler,), {"store": store or SessionStore()})
    server = ThreadingHTTPServer((host, port), handler)
    server.daemon_threads = True
    return server


def serve(host: str = "127.0.0.1", port: int = 8642) -> None:
    server = make_server(host, port)
    print(f"mutwb service listening on http://{host}:{server.server_address[1]}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
