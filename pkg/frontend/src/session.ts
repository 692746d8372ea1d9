/**
 * Session management: spawns the simulator service and speaks the
 * line-JSON protocol over its stdio.
 *
 * Calls are pipelined: requests go out immediately without waiting for
 * earlier responses, and the service answers strictly in order. Writes
 * issued within one tick are corked into a single pipe write, so a long
 * run of fire-and-forget calls costs one flush, which is what keeps
 * per-call overhead in the microsecond range.
 */

import { type ChildProcessByStdio, spawn } from "node:child_process";
import { createInterface, type Interface } from "node:readline";
import type { Readable, Writable } from "node:stream";

import { Response, SimulatorError, WireError } from "./protocol.js";

export interface SessionOptions {
  /** Python executable used to launch the service (default: $PAIRSIM_PYTHON or python3). */
  pythonPath?: string;
  /** Extra environment variables for the service process. */
  env?: Record<string, string>;
}

interface Pending {
  id: number;
  resolve: (result: Record<string, unknown>) => void;
  reject: (err: Error) => void;
}

export class Session {
  private proc: ChildProcessByStdio<Writable, Readable, null>;
  private reader: Interface;
  private pending: Pending[] = [];
  private nextId = 1;
  private closed = false;
  private corked = false;
  private spawnError: Error | null = null;

  private constructor(options: SessionOptions) {
    const python = options.pythonPath ?? process.env.PAIRSIM_PYTHON ?? "python3";
    this.proc = spawn(python, ["-m", "pairsim.rpc"], {
      stdio: ["pipe", "pipe", "inherit"],
      env: { ...process.env, ...options.env },
    });
    this.proc.on("error", (err) => this.fail(err));
    this.proc.on("exit", (code) => {
      if (!this.closed) {
        this.fail(new Error(`simulator service exited unexpectedly (code ${code})`));
      }
    });
    this.reader = createInterface({ input: this.proc.stdout });
    this.reader.on("line", (line) => this.onLine(line));
  }

  /** Launch the service and wait for a version handshake. */
  static async start(options: SessionOptions = {}): Promise<Session> {
    const session = new Session(options);
    await session.call("version");
    return session;
  }

  private fail(err: Error): void {
    this.spawnError = err;
    const pending = this.pending;
    this.pending = [];
    for (const p of pending) {
      p.reject(err);
    }
  }

  private onLine(line: string): void {
    if (!line.trim()) {
      return;
    }
    const response = JSON.parse(line) as Response;
    const head = this.pending.shift();
    if (!head) {
      return; // response after close; nothing to deliver
    }
    if (response.id !== head.id) {
      head.reject(new Error(`response id ${response.id} does not match request id ${head.id}`));
      return;
    }
    if (response.ok) {
      head.resolve(response.result ?? {});
    } else {
      head.reject(new SimulatorError(response.error as WireError));
    }
  }

  /**
   * Send one request. The returned promise settles when the service
   * answers; callers may keep sending without awaiting.
   */
  call(op: string, args?: Record<string, unknown>): Promise<Record<string, unknown>> {
    if (this.closed) {
      return Promise.reject(new Error("session is closed"));
    }
    if (this.spawnError) {
      return Promise.reject(this.spawnError);
    }
    const id = this.nextId++;
    const promise = new Promise<Record<string, unknown>>((resolve, reject) => {
      this.pending.push({ id, resolve, reject });
    });
    if (!this.corked) {
      this.corked = true;
      this.proc.stdin.cork();
      process.nextTick(() => {
        this.corked = false;
        this.proc.stdin.uncork();
      });
    }
    this.proc.stdin.write(JSON.stringify({ id, op, args }) + "\n");
    return promise;
  }

  /** Terminate the service; outstanding calls are rejected. */
  close(): void {
    if (this.closed) {
      return;
    }
    this.closed = true;
    this.proc.stdin.end();
    this.reader.close();
    this.fail(new Error("session closed"));
  }
}
