/** Session + knob state machine.
 *
 * Contracts:
 *  - knob edits are debounced (150 ms default); an unchanged knob issues
 *    no request at all;
 *  - at most one synthesis request is in flight; further edits are
 *    coalesced and fired once the active request settles;
 *  - responses carry monotonically increasing request ids and only the
 *    latest id is ever rendered (last-write-wins).
 */

import {
  ApiClient,
  SessionView,
  SynthesizeResult,
} from "./api.js";

export type KnobMode = "constant" | "curve";

export interface KnobState {
  kind: string;
  mode: KnobMode;
  /** scalar in [0,1] for constant mode, length-m curve for curve mode */
  value: number | number[];
}

export const clamp01 = (v: number): number => Math.min(1, Math.max(0, v));

export function clampKnob(state: KnobState): KnobState {
  const value =
    typeof state.value === "number"
      ? clamp01(state.value)
      : state.value.map(clamp01);
  return { ...state, value };
}

export function knobsEqual(a: KnobState, b: KnobState): boolean {
  if (a.kind !== b.kind || a.mode !== b.mode) return false;
  if (typeof a.value === "number" || typeof b.value === "number") {
    return a.value === b.value;
  }
  return (
    a.value.length === b.value.length &&
    a.value.every((v, i) => v === (b.value as number[])[i])
  );
}

export const trackMean = (track: number[]): number =>
  track.reduce((s, v) => s + v, 0) / track.length;

export interface RenderedResult {
  requestId: number;
  result: SynthesizeResult;
}

export interface PanelCallbacks {
  onRender?: (rendered: RenderedResult) => void;
  onError?: (err: unknown) => void;
}

export class PanelController {
  private session: SessionView | null = null;
  private knobs = new Map<string, KnobState>();
  private debounceHandle: ReturnType<typeof setTimeout> | null = null;
  private nextRequestId = 0;
  private latestIssuedId = 0;
  private inFlight = false;
  private dirty = false;
  lastRendered: RenderedResult | null = null;

  constructor(
    private readonly api: ApiClient,
    private readonly callbacks: PanelCallbacks = {},
    private readonly debounceMs = 150,
  ) {}

  get sessionView(): SessionView | null {
    return this.session;
  }

  get numFrames(): number {
    if (!this.session) throw new Error("no active session");
    return this.session.num_frames;
  }

  knob(kind: string): KnobState {
    const state = this.knobs.get(kind);
    if (!state) throw new Error(`unknown knob ${kind}`);
    return state;
  }

  /** Upload a source; knobs initialize to the mean of each extracted track. */
  async loadSession(wavBytes: ArrayBuffer | Uint8Array): Promise<SessionView> {
    const session = await this.api.openSession(wavBytes);
    this.session = session;
    this.knobs.clear();
    for (const [kind, track] of Object.entries(session.attribute_tracks)) {
      this.knobs.set(kind, {
        kind,
        mode: "constant",
        value: clamp01(trackMean(track)),
      });
    }
    this.cancelPending();
    this.nextRequestId = 0;
    this.latestIssuedId = 0;
    this.dirty = false;
    this.lastRendered = null;
    return session;
  }

  /** Debounced knob movement; an unchanged state is a no-op. */
  turnKnob(kind: string, state: KnobState): void {
    if (!this.session) throw new Error("no active session");
    if (!this.knobs.has(kind)) throw new Error(`unknown knob ${kind}`);
    const next = clampKnob(state);
    if (
      typeof next.value !== "number" &&
      next.value.length !== this.session.num_frames
    ) {
      throw new Error(
        `curve must have exactly ${this.session.num_frames} points, got ${next.value.length}`,
      );
    }
    if (knobsEqual(this.knob(kind), next)) return; // debounce contract
    this.knobs.set(kind, next);
    this.scheduleSynthesis();
  }

  /** True while a debounce timer or request is pending. */
  get busy(): boolean {
    return this.debounceHandle !== null || this.inFlight || this.dirty;
  }

  private cancelPending(): void {
    if (this.debounceHandle !== null) {
      clearTimeout(this.debounceHandle);
      this.debounceHandle = null;
    }
  }

  private scheduleSynthesis(): void {
    this.cancelPending();
    this.debounceHandle = setTimeout(() => {
      this.debounceHandle = null;
      void this.fireSynthesis();
    }, this.debounceMs);
  }

  private edits(): Record<string, number | number[]> {
    const edits: Record<string, number | number[]> = {};
    for (const [kind, state] of this.knobs) {
      edits[kind] =
        typeof state.value === "number" ? state.value : [...state.value];
    }
    return edits;
  }

  private async fireSynthesis(): Promise<void> {
    if (!this.session) return;
    if (this.inFlight) {
      this.dirty = true; // coalesce: one in-flight request at a time
      return;
    }
    const requestId = ++this.nextRequestId;
    this.latestIssuedId = requestId;
    this.inFlight = true;
    try {
      const result = await this.api.synthesize({
        session_id: this.session.session_id,
        edits: this.edits(),
      });
      if (requestId === this.latestIssuedId) {
        this.lastRendered = { requestId, result };
        this.callbacks.onRender?.(this.lastRendered);
      } // stale responses are dropped
    } catch (err) {
      if (requestId === this.latestIssuedId) this.callbacks.onError?.(err);
    } finally {
      this.inFlight = false;
      if (this.dirty) {
        this.dirty = false;
        void this.fireSynthesis();
      }
    }
  }
}
