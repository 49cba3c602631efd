"""Proxy for out-of-process regression models speaking line-delimited JSON.

Wire protocol, one JSON object per line over the child's stdio:

    server -> {"type": "hello", "n_features": p}          once, on startup
    client -> {"type": "predict", "id": k, "rows": [[...], ...]}
    server -> {"type": "prediction", "id": k, "values": [...]}  same order/length
    client -> {"type": "shutdown"}                        server exits 0

Request ids strictly increase. Any other server line is a protocol error.
"""

import json
import shlex
import subprocess
import threading

import numpy as np

from ..errors import ProtocolError
from ..validation import as_float_matrix, check_n_features

_LINE_PREVIEW = 200


def _preview(line):
    line = line.rstrip("\n")
    if len(line) > _LINE_PREVIEW:
        return line[:_LINE_PREVIEW] + "..."
    return line


class ExternalModel:
    """Regression model served by a child process.

    Satisfies the same predict/n_features_in_ contract as the in-process
    models. Requests are serialized by an internal lock, so one instance can
    be shared across workers; the engine treats it as a serial model.
    """

    serial_predict = True

    def __init__(self, command, expected_features=None):
        argv = shlex.split(command) if isinstance(command, str) else list(command)
        self._command = argv
        self._lock = threading.Lock()
        self._next_id = 0
        self._closed = False
        try:
            self._proc = subprocess.Popen(
                argv,
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                text=True,
                bufsize=1,
            )
        except OSError as exc:
            raise ProtocolError(f"cannot start predict server {argv!r}: {exc}") from None
        hello = self._read_line("hello")
        if hello.get("type") != "hello" or "n_features" not in hello:
            raise ProtocolError(f"expected a hello line, got: {_preview(json.dumps(hello))}")
        width = hello["n_features"]
        if not isinstance(width, int) or width < 1:
            raise ProtocolError(f"invalid n_features in hello: {width!r}")
        if expected_features is not None and width != expected_features:
            raise ProtocolError(
                f"predict server reports {width} features, expected {expected_features}"
            )
        self.n_features_in_ = width

    def _read_line(self, what):
        line = self._proc.stdout.readline()
        if line == "":
            raise ProtocolError(f"predict server exited before sending {what}")
        try:
            message = json.loads(line)
        except ValueError:
            raise ProtocolError(f"malformed server line (expected {what}): {_preview(line)}") from None
        if not isinstance(message, dict):
            raise ProtocolError(f"malformed server line (expected {what}): {_preview(line)}")
        return message

    def _send(self, payload):
        try:
            self._proc.stdin.write(json.dumps(payload) + "\n")
            self._proc.stdin.flush()
        except (BrokenPipeError, OSError):
            raise ProtocolError("predict server closed its input mid-session") from None

    def predict(self, X):
        X = as_float_matrix(X)
        check_n_features(X, self.n_features_in_)
        rows = [[float(v) for v in row] for row in X]
        with self._lock:
            if self._closed:
                raise ProtocolError("predict server connection already closed")
            request_id = self._next_id
            self._next_id += 1
            self._send({"type": "predict", "id": request_id, "rows": rows})
            reply = self._read_line("prediction")
        if reply.get("type") != "prediction":
            raise ProtocolError(f"unexpected server line: {_preview(json.dumps(reply))}")
        if reply.get("id") != request_id:
            raise ProtocolError(
                f"response id {reply.get('id')!r} does not match request id {request_id}"
            )
        values = reply.get("values")
        if not isinstance(values, list) or len(values) != len(rows):
            raise ProtocolError(
                f"prediction carries {len(values) if isinstance(values, list) else 'no'} "
                f"values for {len(rows)} rows"
            )
        for v in values:
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise ProtocolError(f"non-numeric prediction value: {_preview(json.dumps(reply))}")
        return np.asarray(values, dtype=np.float64)

    def close(self):
        with self._lock:
            if self._closed:
                return
            self._closed = True
            if self._proc.poll() is None:
                try:
                    self._send({"type": "shutdown"})
                except ProtocolError:
                    pass
            try:
                self._proc.stdin.close()
            except OSError:
                pass
            try:
                self._proc.wait(timeout=10)
            except subprocess.TimeoutExpired:
                self._proc.kill()
                self._proc.wait()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def connect_external(command, expected_features=None) -> ExternalModel:
    """Spawn a predict server and wrap it as a regression model.

    `command` is a shell-style string or an argv list. When
    `expected_features` is given, the handshake must report exactly that
    feature count.
    """
    return ExternalModel(command, expected_features=expected_features)
