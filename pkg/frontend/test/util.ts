/** Test helpers: run the simulator package directly for reference values. */

import { execFileSync } from "node:child_process";

export const PYTHON = process.env.PAIRSIM_PYTHON ?? "python3";

/** Run a Python snippet against the simulator package, parse stdout JSON. */
export function pythonJson<T>(script: string): T {
  const stdout = execFileSync(PYTHON, ["-c", script], { encoding: "utf-8" });
  return JSON.parse(stdout) as T;
}

/**
 * Deterministic mixed-gate workload used on both sides of parity tests.
 * The i-th step targets i mod n, cycles gate kinds, derives angles from
 * i with plain double arithmetic, and every 10th step is a CNOT.
 */
export const GATE_CYCLE = ["h", "rx", "p", "rz", "x", "ry", "u", "z", "y"] as const;

export function angles(i: number): [number, number, number] {
  return [0.1 * i + 0.25, 0.05 * i - 0.4, 0.02 * i + 1.1];
}

/** Python build loop mirroring applyWorkload; keep the two in lockstep. */
function pythonWorkloadBody(n: number, count: number): string {
  return `
kinds = ["h", "rx", "p", "rz", "x", "ry", "u", "z", "y"]
qc = QuantumCircuit(${n})
for i in range(${count}):
    t = i % ${n}
    a, b, c = 0.1 * i + 0.25, 0.05 * i - 0.4, 0.02 * i + 1.1
    if i % 10 == 9:
        qc.cx(t, (t + 1) % ${n})
        continue
    k = kinds[i % len(kinds)]
    if k == "h": qc.h(t)
    elif k == "rx": qc.rx(a, t)
    elif k == "p": qc.p(a, t)
    elif k == "rz": qc.rz(a, t)
    elif k == "x": qc.x(t)
    elif k == "ry": qc.ry(a, t)
    elif k == "u": qc.u(a, b, c, t)
    elif k == "z": qc.z(t)
    else: qc.y(t)
`;
}

/** Direct run printing the final amplitudes as JSON. */
export function pythonWorkload(n: number, count: number): string {
  return `
import json
from pairsim import QuantumCircuit
${pythonWorkloadBody(n, count)}
qc.execute()
print(json.dumps({"reals": [float(v) for v in qc.state.reals],
                  "imags": [float(v) for v in qc.state.imags]}))
`;
}

/** Direct run printing build+execute wall time in nanoseconds. */
export function pythonWorkloadTimed(n: number, count: number): string {
  return `
import json, time
from pairsim import QuantumCircuit
t0 = time.perf_counter_ns()
${pythonWorkloadBody(n, count)}
qc.execute()
print(json.dumps({"ns": time.perf_counter_ns() - t0}))
`;
}

/** TS half of the parity workload; mirrors pythonWorkload exactly. */
export function applyWorkload(qc: import("../src/index.js").BoundCircuit, n: number, count: number): void {
  for (let i = 0; i < count; i++) {
    const t = i % n;
    const [a, b, c] = angles(i);
    if (i % 10 === 9) {
      qc.cx(t, (t + 1) % n);
      continue;
    }
    const kind = GATE_CYCLE[i % GATE_CYCLE.length]!;
    switch (kind) {
      case "h":
        qc.h(t);
        break;
      case "rx":
        qc.rx(a, t);
        break;
      case "p":
        qc.p(a, t);
        break;
      case "rz":
        qc.rz(a, t);
        break;
      case "x":
        qc.x(t);
        break;
      case "ry":
        qc.ry(a, t);
        break;
      case "u":
        qc.u(a, b, c, t);
        break;
      case "z":
        qc.z(t);
        break;
      case "y":
        qc.y(t);
        break;
    }
  }
}
