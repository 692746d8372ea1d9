/**
 * Wire types for the simulator's line-delimited JSON protocol.
 *
 * One request object per line on the service's stdin, one response per
 * line on its stdout, in request order. Amplitudes travel as shortest
 * round-trip decimal strings, so IEEE-754 doubles survive bit-for-bit.
 */

/** Gate variants accepted by the simulator. */
export type GateKind = "x" | "y" | "z" | "h" | "p" | "rx" | "ry" | "rz" | "u";

export interface Request {
  id: number;
  op: string;
  args?: Record<string, unknown>;
}

export interface WireError {
  type: string;
  message: string;
}

export interface Response {
  id: number | null;
  ok: boolean;
  result?: Record<string, unknown>;
  error?: WireError;
}

export interface VersionResult {
  version: string;
  precision: "single" | "double";
}

export interface CircuitNewResult {
  circuit: string;
  registers: number[][];
}

export interface ExecuteResult {
  /** Time the service spent applying the queued gates, in nanoseconds. */
  elapsed_ns: number;
}

export interface StateResult {
  n: number;
  reals: number[];
  imags: number[];
}

export interface SamplesResult {
  outcomes: number[];
}

/** Raised when the service reports a failed operation. */
export class SimulatorError extends Error {
  readonly remoteType: string;

  constructor(error: WireError) {
    super(error.message);
    this.name = "SimulatorError";
    this.remoteType = error.type;
  }
}
