/**
 * Bound circuit surface: Qiskit-flavoured builders over the simulator
 * service. The client holds no amplitude math at all; every call
 * delegates 1:1 to the corresponding simulator operation.
 *
 * The circuit is deferred on the simulator side, so the client mirrors
 * that: gate adds are validated locally, buffered, and shipped as one
 * batched message at the next barrier (`execute`, `state`, ...). Each
 * buffered entry becomes exactly one queued transformation; a thousand
 * adds cost one wire round trip.
 */

import {
  CircuitNewResult,
  ExecuteResult,
  GateKind,
  SamplesResult,
  StateResult,
  VersionResult,
} from "./protocol.js";
import { Session, SessionOptions } from "./session.js";

/** Immutable view of the qubit index window a register covers. */
export class BoundRegister {
  constructor(readonly indices: readonly number[]) {}

  get width(): number {
    return this.indices.length;
  }

  /** Global state-qubit index of the register's i-th qubit. */
  at(i: number): number {
    const idx = this.indices[i];
    if (idx === undefined) {
      throw new RangeError(`register has ${this.indices.length} qubits, no index ${i}`);
    }
    return idx;
  }
}

/** Copied amplitude readout: parallel real/imaginary component arrays. */
export class BoundState {
  constructor(
    readonly n: number,
    readonly reals: Float64Array,
    readonly imags: Float64Array,
  ) {}

  amplitude(i: number): { re: number; im: number } {
    if (!(i >= 0 && i < this.reals.length)) {
      throw new RangeError(`outcome ${i} out of range for ${this.n} qubits`);
    }
    return { re: this.reals[i]!, im: this.imags[i]! };
  }
}

export class SampleSet {
  constructor(
    readonly shots: number,
    readonly outcomes: readonly number[],
    readonly seed: number,
  ) {}

  counts(): Map<number, number> {
    const counts = new Map<number, number>();
    for (const o of this.outcomes) {
      counts.set(o, (counts.get(o) ?? 0) + 1);
    }
    return counts;
  }
}

interface GateSpec {
  kind: GateKind;
  params: number[];
  target: number;
  controls: number[];
}

export class BoundCircuit {
  readonly registers: readonly BoundRegister[];
  readonly n: number;
  private handle: string;
  private session: Session;
  private addError: Error | null = null;
  private inFlight: Promise<unknown>[] = [];
  private buffered: GateSpec[] = [];
  private freed = false;

  /** @internal use {@link Simulator.circuit} */
  constructor(session: Session, result: CircuitNewResult) {
    this.session = session;
    this.handle = result.circuit;
    this.registers = result.registers.map((idx) => new BoundRegister(idx));
    this.n = result.registers.flat().length;
  }

  private checkQubit(q: number, what = "target"): void {
    if (!Number.isInteger(q) || q < 0 || q >= this.n) {
      throw new RangeError(`${what} ${q} out of range for ${this.n} qubits`);
    }
  }

  private send(op: string, args: Record<string, unknown>): Promise<unknown> {
    if (this.freed) {
      throw new Error("circuit handle was freed");
    }
    const promise = this.session
      .call(op, { circuit: this.handle, ...args })
      .catch((err: Error) => {
        this.addError ??= err;
        return undefined;
      });
    this.inFlight.push(promise);
    return promise;
  }

  /** Ship buffered gate adds as a single batched message. */
  private flushAdds(): void {
    if (this.buffered.length === 0) {
      return;
    }
    const gates = this.buffered;
    this.buffered = [];
    this.send("add_many", { gates });
  }

  /** Wait for all pipelined calls and surface the first failure. */
  private async barrier(): Promise<void> {
    const waiting = this.inFlight;
    this.inFlight = [];
    await Promise.all(waiting);
    if (this.addError) {
      const err = this.addError;
      this.addError = null;
      throw err;
    }
  }

  /** Queue a gate; validated locally now, again by the simulator on flush. */
  add(kind: GateKind, target: number, params: number[] = [], controls: number[] = []): void {
    if (this.freed) {
      throw new Error("circuit handle was freed");
    }
    this.checkQubit(target);
    for (const c of controls) {
      this.checkQubit(c, "control");
    }
    if (controls.includes(target) || new Set(controls).size !== controls.length) {
      throw new RangeError("controls must be distinct and exclude the target");
    }
    this.buffered.push({ kind, params, target, controls });
  }

  x(target: number): void {
    this.add("x", target);
  }

  y(target: number): void {
    this.add("y", target);
  }

  z(target: number): void {
    this.add("z", target);
  }

  h(target: number): void {
    this.add("h", target);
  }

  p(phi: number, target: number): void {
    this.add("p", target, [phi]);
  }

  rx(theta: number, target: number): void {
    this.add("rx", target, [theta]);
  }

  ry(theta: number, target: number): void {
    this.add("ry", target, [theta]);
  }

  rz(lam: number, target: number): void {
    this.add("rz", target, [lam]);
  }

  u(theta: number, phi: number, lam: number, target: number): void {
    this.add("u", target, [theta, phi, lam]);
  }

  cx(control: number, target: number): void {
    this.add("x", target, [], [control]);
  }

  cy(control: number, target: number): void {
    this.add("y", target, [], [control]);
  }

  cz(control: number, target: number): void {
    this.add("z", target, [], [control]);
  }

  ch(control: number, target: number): void {
    this.add("h", target, [], [control]);
  }

  cp(phi: number, control: number, target: number): void {
    this.add("p", target, [phi], [control]);
  }

  crx(theta: number, control: number, target: number): void {
    this.add("rx", target, [theta], [control]);
  }

  cry(theta: number, control: number, target: number): void {
    this.add("ry", target, [theta], [control]);
  }

  crz(lam: number, control: number, target: number): void {
    this.add("rz", target, [lam], [control]);
  }

  cu(theta: number, phi: number, lam: number, control: number, target: number): void {
    this.add("u", target, [theta, phi, lam], [control]);
  }

  mcx(controls: number[], target: number): void {
    this.add("x", target, [], controls);
  }

  mcp(phi: number, controls: number[], target: number): void {
    this.add("p", target, [phi], controls);
  }

  /** Queue the inverse quantum Fourier transform (default: all qubits). */
  iqft(targets?: number[]): void {
    this.flushAdds(); // the service expands iqft in place, keep gate order
    this.send("iqft", { targets: targets ?? null });
  }

  /** Flush queued gates and apply them; resolves once the state is updated. */
  async execute(): Promise<ExecuteResult> {
    this.flushAdds();
    const result = this.send("execute", {});
    await this.barrier();
    return (await result) as ExecuteResult;
  }

  /** Copy the amplitude arrays out of the simulator. */
  async state(): Promise<BoundState> {
    this.flushAdds();
    const pending = this.send("state", {});
    await this.barrier();
    const result = (await pending) as StateResult;
    return new BoundState(result.n, Float64Array.from(result.reals), Float64Array.from(result.imags));
  }

  async probability(outcome: number): Promise<number> {
    this.flushAdds();
    const pending = this.send("probability", { outcome });
    await this.barrier();
    return ((await pending) as { value: number }).value;
  }

  async getSamples(shots: number, seed: number): Promise<SampleSet> {
    this.flushAdds();
    const pending = this.send("get_samples", { shots, seed });
    await this.barrier();
    const result = (await pending) as SamplesResult;
    return new SampleSet(shots, result.outcomes, seed);
  }

  /** Release the simulator-side handle; further use raises. */
  async free(): Promise<void> {
    this.buffered = [];
    this.send("free", {});
    this.freed = true;
    await this.barrier();
  }
}

/** Entry point owning one service process; circuits share the session. */
export class Simulator {
  private constructor(private session: Session) {}

  static async start(options: SessionOptions = {}): Promise<Simulator> {
    return new Simulator(await Session.start(options));
  }

  async version(): Promise<VersionResult> {
    return (await this.session.call("version")) as unknown as VersionResult;
  }

  /** Create a circuit over registers of the given widths. */
  async circuit(widths: number[]): Promise<BoundCircuit> {
    const result = (await this.session.call("circuit_new", { widths })) as unknown as CircuitNewResult;
    return new BoundCircuit(this.session, result);
  }

  close(): void {
    this.session.close();
  }
}
