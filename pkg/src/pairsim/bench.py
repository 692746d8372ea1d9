"""Benchmark workloads and machine-readable timing reports.

Three workloads: per-gate sweeps (apply one gate to every qubit), the
value-encoding circuit, and the layered QCBM random circuit.  Timed
regions cover gate application only; state allocation, circuit building
and RNG draws happen outside the timer, and one warm-up iteration per
point is discarded.  Reports serialize to CSV with the fixed column set
``workload,gate,qubits,iterations,mean_ns,std_ns,precision`` or to JSON
with a metadata header.
"""

from __future__ import annotations

import csv
import io
import json
import math
import platform
import statistics
import sys
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__, config
from .circuit import QuantumCircuit
from .gates import KINDS, Gate, apply
from .state import CapacityError, State

WORKLOADS = ("gate-sweep", "value-encoding", "qcbm")
CSV_COLUMNS = ("workload", "gate", "qubits", "iterations", "mean_ns", "std_ns", "precision")


@dataclass
class BenchConfig:
    workload: str
    gate: str = "h"
    qubit_range: tuple[int, int] = (5, 22)
    iterations: int = 10
    layers: int = 9
    value: float = 2.4
    seed: int = 1234

    def validate(self) -> None:
        if self.workload not in WORKLOADS:
            raise ValueError(f"unknown workload {self.workload!r}")
        if self.gate not in KINDS:
            raise ValueError(f"unknown gate {self.gate!r}")
        lo, hi = self.qubit_range
        if lo < 1 or hi < lo:
            raise ValueError(f"bad qubit range {self.qubit_range}")
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if self.layers < 1:
            raise ValueError("layers must be >= 1")


@dataclass
class BenchRow:
    workload: str
    gate: str
    qubits: int
    iterations: int
    mean_ns: float
    std_ns: float
    precision: str


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)


def _metadata(cfg: BenchConfig) -> dict:
    return {
        "tool": f"pairsim {__version__}",
        "workload": cfg.workload,
        "precision": config.get_precision(),
        "seed": cfg.seed,
        "python": platform.python_version(),
        "platform": platform.platform(),
        "numpy": np.__version__,
        "timestamp_utc": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
    }


def _mean_std(times_ns: list[int]) -> tuple[float, float]:
    mean = statistics.fmean(times_ns)
    std = statistics.stdev(times_ns) if len(times_ns) > 1 else 0.0
    return mean, std


def build_value_encoding(n: int, v: float) -> QuantumCircuit:
    """Circuit that concentrates probability on outcome round(v) mod 2^n.

    A uniform superposition picks up the phase gradient of v (phase
    pi*v/2^j on qubit j), which the inverse QFT folds back into the basis
    state nearest v.
    """
    qc = QuantumCircuit(n)
    for q in range(n):
        qc.h(q)
    for q in range(n):
        qc.p(math.pi * v / (1 << q), q)
    qc.iqft()
    return qc


def build_qcbm(n: int, layers: int = 9, seed: int = 0) -> QuantumCircuit:
    """Layered random circuit: rotation layers separated by CNOT rings.

    First and final layers are Rx,Rz per qubit; layers between two rings
    are Rz,Rx,Rz; every rotation layer except the final one is followed by
    the ring cx(i, (i+1) mod n).  Angles come deterministically from the
    seed, so equal arguments build identical circuits.
    """
    if n < 2:
        raise ValueError(f"qcbm needs at least 2 qubits, got {n}")
    if layers < 1:
        raise ValueError("layers must be >= 1")
    rng = np.random.default_rng(seed)

    def angle() -> float:
        return float(rng.uniform(0.0, 2.0 * math.pi))

    qc = QuantumCircuit(n)
    for q in range(n):
        qc.rx(angle(), q)
        qc.rz(angle(), q)
    for layer in range(1, layers + 1):
        for q in range(n):
            qc.cx(q, (q + 1) % n)
        if layer < layers:
            for q in range(n):
                qc.rz(angle(), q)
                qc.rx(angle(), q)
                qc.rz(angle(), q)
    for q in range(n):
        qc.rx(angle(), q)
        qc.rz(angle(), q)
    return qc


def _sweep_gates(cfg: BenchConfig, n: int, rng) -> list[Gate]:
    n_params = {"p": 1, "rx": 1, "ry": 1, "rz": 1, "u": 3}.get(cfg.gate, 0)
    gates = []
    for _ in range(n):
        params = tuple(float(a) for a in rng.uniform(0.0, 2.0 * math.pi, n_params))
        gates.append(Gate(cfg.gate, params))
    return gates


def run_gate_sweep(cfg: BenchConfig) -> BenchReport:
    """Time applying cfg.gate to every qubit, per qubit count in range."""
    cfg.validate()
    report = BenchReport(metadata=_metadata(cfg))
    rng = np.random.default_rng(cfg.seed)
    lo, hi = cfg.qubit_range
    for n in range(lo, hi + 1):
        gates = _sweep_gates(cfg, n, rng)
        try:
            state = State(n)
        except CapacityError as exc:
            report.failures.append(f"n={n}: {exc}")
            continue
        times = []
        for it in range(cfg.iterations + 1):  # first pass warms up, dropped
            t0 = time.perf_counter_ns()
            for q in range(n):
                apply(gates[q], state, q)
            elapsed = time.perf_counter_ns() - t0
            if it > 0:
                times.append(elapsed)
        mean, std = _mean_std(times)
        report.rows.append(
            BenchRow(cfg.workload, cfg.gate, n, cfg.iterations, mean, std, config.get_precision())
        )
    return report


def _run_circuit_workload(cfg: BenchConfig, build) -> BenchReport:
    cfg.validate()
    report = BenchReport(metadata=_metadata(cfg))
    lo, hi = cfg.qubit_range
    for n in range(lo, hi + 1):
        try:
            times = []
            for it in range(cfg.iterations + 1):
                qc = build(n)
                t0 = time.perf_counter_ns()
                qc.execute()
                elapsed = time.perf_counter_ns() - t0
                if it > 0:
                    times.append(elapsed)
        except CapacityError as exc:
            report.failures.append(f"n={n}: {exc}")
            continue
        mean, std = _mean_std(times)
        report.rows.append(
            BenchRow(cfg.workload, "", n, cfg.iterations, mean, std, config.get_precision())
        )
    return report


def run_value_encoding(cfg: BenchConfig) -> BenchReport:
    return _run_circuit_workload(cfg, lambda n: build_value_encoding(n, cfg.value))


def run_qcbm(cfg: BenchConfig) -> BenchReport:
    if cfg.qubit_range[0] < 2:
        raise ValueError("qcbm needs a qubit range starting at 2 or more")
    return _run_circuit_workload(cfg, lambda n: build_qcbm(n, cfg.layers, cfg.seed))


def run(cfg: BenchConfig) -> BenchReport:
    cfg.validate()
    runner = {
        "gate-sweep": run_gate_sweep,
        "value-encoding": run_value_encoding,
        "qcbm": run_qcbm,
    }[cfg.workload]
    return runner(cfg)


def render_report(report: BenchReport, fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in report.rows:
            writer.writerow([getattr(row, c) for c in CSV_COLUMNS])
        return buf.getvalue()
    if fmt == "json":
        payload = {"metadata": report.metadata, "rows": [asdict(r) for r in report.rows]}
        return json.dumps(payload, indent=2) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")


def emit_report(report: BenchReport, fmt: str, path: str | None) -> None:
    """Write the report as CSV or JSON to a file, or stdout when path is None."""
    text = render_report(report, fmt)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def read_report_rows(path: str) -> list[BenchRow]:
    """Load rows back from an emitted CSV or JSON report."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        rows = json.loads(text)["rows"]
    else:
        rows = list(csv.DictReader(io.StringIO(text)))
    return [
        BenchRow(
            workload=r["workload"],
            gate=r["gate"],
            qubits=int(r["qubits"]),
            iterations=int(r["iterations"]),
            mean_ns=float(r["mean_ns"]),
            std_ns=float(r["std_ns"]),
            precision=r["precision"],
        )
        for r in rows
    ]
