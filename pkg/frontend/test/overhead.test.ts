import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { Simulator } from "../src/index.js";
import { applyWorkload, pythonJson, pythonWorkloadTimed } from "./util.js";

const N = 8;
const GATES = 1000;

let sim: Simulator;

beforeAll(async () => {
  sim = await Simulator.start();
});

afterAll(() => {
  sim.close();
});

function directRunMs(): number {
  // in-process reference timing build + execute, the same region the
  // bound measurement covers (adds + execute barrier)
  const timed = pythonJson<{ ns: number }>(pythonWorkloadTimed(N, GATES));
  return timed.ns / 1e6;
}

describe("bound-call overhead", () => {
  it("1000-gate circuit costs at most 10ms over a direct run", async () => {
    const direct: number[] = [];
    for (let rep = 0; rep < 3; rep++) {
      direct.push(directRunMs());
    }
    const directBest = Math.min(...direct);

    const bound: number[] = [];
    for (let rep = 0; rep < 3; rep++) {
      const qc = await sim.circuit([N]);
      const t0 = performance.now();
      applyWorkload(qc, N, GATES);
      await qc.execute();
      bound.push(performance.now() - t0);
      await qc.free();
    }
    const boundBest = Math.min(...bound);

    const overheadMs = boundBest - directBest;
    // eslint-disable-next-line no-console
    console.log(
      `direct ${directBest.toFixed(2)}ms, bound ${boundBest.toFixed(2)}ms, ` +
        `overhead ${overheadMs.toFixed(2)}ms (${((overheadMs * 1000) / GATES).toFixed(2)}us/gate)`,
    );
    expect(overheadMs).toBeLessThanOrEqual(10);
  }, 120_000);
});
