/**
 * pairsim-client: drive the pairsim quantum simulator from Node.
 *
 * ```ts
 * const sim = await Simulator.start();
 * const qc = await sim.circuit([3]);
 * for (let q = 0; q < 3; q++) qc.h(q);
 * qc.cp(0.5, 0, 2);
 * qc.iqft();
 * await qc.execute();
 * const { outcomes } = await qc.getSamples(1000, 42);
 * sim.close();
 * ```
 */

/** Mirrors the simulator package version; sessions check it at handshake. */
export const VERSION = "0.1.0";

export { BoundCircuit, BoundRegister, BoundState, SampleSet, Simulator } from "./circuit.js";
export { Session, type SessionOptions } from "./session.js";
export {
  type CircuitNewResult,
  type ExecuteResult,
  type GateKind,
  type Request,
  type Response,
  type SamplesResult,
  SimulatorError,
  type StateResult,
  type VersionResult,
  type WireError,
} from "./protocol.js";
