"""Line-delimited JSON service exposing circuits to other processes.

One request object per stdin line, one response per line on stdout, in
request order.  Requests: {"id": ..., "op": ..., "args": {...}}; replies:
{"id": ..., "ok": true, "result": {...}} or {"id": ..., "ok": false,
"error": {"type": ..., "message": ...}} with the original error message.
Amplitude floats serialize via repr, so readers on any IEEE-754 double
runtime recover them bit-for-bit.

Circuits are held behind opaque handles; a freed handle is a usage error,
never a crash.  The service does no amplitude math of its own, it only
delegates to the circuit, state, and sampling APIs.

Run with ``python -m pairsim.rpc``.
"""

from __future__ import annotations

import json
import sys
import time

from . import __version__, config
from .circuit import QuantumCircuit, QuantumRegister
from .gates import Gate, QuantumTransformation
from .sampling import get_samples


def _transformation(spec: dict) -> QuantumTransformation:
    gate = Gate(spec["kind"], tuple(spec.get("params") or ()))
    controls = tuple(int(c) for c in spec.get("controls") or ())
    return QuantumTransformation(gate, int(spec["target"]), controls)


class _Session:
    def __init__(self):
        self._circuits: dict[str, QuantumCircuit] = {}
        self._next = 0

    def _circuit(self, handle: str) -> QuantumCircuit:
        try:
            return self._circuits[handle]
        except KeyError:
            raise ValueError(f"unknown or freed circuit handle {handle!r}") from None

    def op_version(self, args: dict) -> dict:
        return {"version": __version__, "precision": config.get_precision()}

    def op_circuit_new(self, args: dict) -> dict:
        widths = [int(w) for w in args["widths"]]
        registers = [QuantumRegister(w) for w in widths]
        qc = QuantumCircuit(*registers)
        handle = f"c{self._next}"
        self._next += 1
        self._circuits[handle] = qc
        return {"circuit": handle, "registers": [list(r) for r in registers]}

    def op_add(self, args: dict) -> dict:
        qc = self._circuit(args["circuit"])
        qc.add(_transformation(args))
        return {}

    def op_add_many(self, args: dict) -> dict:
        """Queue a whole gate list in one message.

        Clients batch their deferred adds into this to keep per-gate wire
        overhead negligible; each entry is applied exactly like op_add, in
        order, stopping at the first invalid gate.
        """
        qc = self._circuit(args["circuit"])
        added = 0
        for spec in args["gates"]:
            qc.add(_transformation(spec))
            added += 1
        return {"added": added}

    def op_iqft(self, args: dict) -> dict:
        qc = self._circuit(args["circuit"])
        targets = args.get("targets")
        qc.iqft(None if targets is None else [int(t) for t in targets])
        return {}

    def op_execute(self, args: dict) -> dict:
        qc = self._circuit(args["circuit"])
        t0 = time.perf_counter_ns()
        qc.execute()
        return {"elapsed_ns": time.perf_counter_ns() - t0}

    def op_state(self, args: dict) -> dict:
        qc = self._circuit(args["circuit"])
        return {
            "n": qc.n,
            "reals": [float(v) for v in qc.state.reals],
            "imags": [float(v) for v in qc.state.imags],
        }

    def op_probability(self, args: dict) -> dict:
        qc = self._circuit(args["circuit"])
        return {"value": qc.state.probability(int(args["outcome"]))}

    def op_get_samples(self, args: dict) -> dict:
        qc = self._circuit(args["circuit"])
        samples = get_samples(qc.state, int(args["shots"]), int(args["seed"]))
        return {"outcomes": [int(o) for o in samples.outcomes]}

    def op_free(self, args: dict) -> dict:
        handle = args["circuit"]
        self._circuit(handle)
        del self._circuits[handle]
        return {}

    def dispatch(self, request: dict) -> dict:
        rid = request.get("id")
        try:
            op = request["op"]
            handler = getattr(self, f"op_{op}", None)
            if handler is None:
                raise ValueError(f"unknown op {op!r}")
            result = handler(request.get("args") or {})
            return {"id": rid, "ok": True, "result": result}
        except Exception as exc:  # surfaced to the client, never fatal here
            return {"id": rid, "ok": False, "error": {"type": type(exc).__name__, "message": str(exc)}}


def serve(stdin=None, stdout=None) -> None:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    session = _Session()
    for line in stdin:
        line = line.strip()
        if not line:
            continue
        try:
            request = json.loads(line)
        except json.JSONDecodeError as exc:
            response = {"id": None, "ok": False, "error": {"type": "JSONDecodeError", "message": str(exc)}}
        else:
            response = session.dispatch(request)
        stdout.write(json.dumps(response) + "\n")
        stdout.flush()


def main() -> None:
    serve()


if __name__ == "__main__":
    main()
