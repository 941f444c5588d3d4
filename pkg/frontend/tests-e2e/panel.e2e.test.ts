/** End-to-end checks against a live toy-model service.
 *
 * Skipped unless FADERWAVE_SERVICE_URL points at a running `faderwave serve`
 * instance backed by a trained toy checkpoint, e.g.
 *
 *   faderwave serve --checkpoint runs/acceptance/fader/checkpoint_final.pt --port 8731 &
 *   FADERWAVE_SERVICE_URL=http://127.0.0.1:8731 npm run test:e2e
 */

import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { PanelController, RenderedResult, trackMean } from "../src/state.js";

const SERVICE = process.env.FADERWAVE_SERVICE_URL;
const suite = SERVICE ? describe : describe.skip;

/** Synthesize a one-second 330 Hz test tone as 16-bit PCM WAV bytes. */
function makeWav(sampleRate = 16000, seconds = 1, freq = 330): Uint8Array {
  const n = sampleRate * seconds;
  const buf = new ArrayBuffer(44 + n * 2);
  const view = new DataView(buf);
  const ascii = (off: number, s: string) =>
    [...s].forEach((c, i) => view.setUint8(off + i, c.charCodeAt(0)));
  ascii(0, "RIFF");
  view.setUint32(4, 36 + n * 2, true);
  ascii(8, "WAVE");
  ascii(12, "fmt ");
  view.setUint32(16, 16, true);
  view.setUint16(20, 1, true); // PCM
  view.setUint16(22, 1, true); // mono
  view.setUint32(24, sampleRate, true);
  view.setUint32(28, sampleRate * 2, true);
  view.setUint16(32, 2, true);
  view.setUint16(34, 16, true);
  ascii(36, "data");
  view.setUint32(40, n * 2, true);
  for (let i = 0; i < n; i++) {
    const envelope = Math.min(1, (10 * i) / n, (10 * (n - i)) / n);
    const v = 0.5 * envelope * Math.sin((2 * Math.PI * freq * i) / sampleRate);
    view.setInt16(44 + i * 2, Math.round(v * 32767), true);
  }
  return new Uint8Array(buf);
}

const sleep = (ms: number) => new Promise((r) => setTimeout(r, ms));

suite("control panel against live service", () => {
  it("reports the model's conditioning plan", async () => {
    const api = new ApiClient(SERVICE!);
    const info = await api.modelInfo();
    expect(info.kinds).toContain("rms");
    expect(info.num_bins).toBeGreaterThan(1);
  });

  it(
    "RMS knob sweep 0.1..0.9 yields mostly monotone measured means",
    { timeout: 120_000 },
    async () => {
      const api = new ApiClient(SERVICE!);
      const session = await api.openSession(makeWav());
      const positions = [0.1, 0.3, 0.5, 0.7, 0.9];
      const means: number[] = [];
      for (const value of positions) {
        const result = await api.synthesize({
          session_id: session.session_id,
          edits: { rms: value },
        });
        means.push(trackMean(result.measured_tracks_normalized.rms));
      }
      let ordered = 1; // the first position is trivially in order
      for (let i = 1; i < means.length; i++) {
        if (means[i] > means[i - 1]) ordered += 1;
      }
      expect(ordered).toBeGreaterThanOrEqual(4);
    },
  );

  it(
    "only the latest of 10 rapid knob movements renders",
    { timeout: 120_000 },
    async () => {
      const api = new ApiClient(SERVICE!);
      const rendered: RenderedResult[] = [];
      const controller = new PanelController(
        api,
        { onRender: (r) => rendered.push(r) },
        10, // short debounce so the burst actually issues requests
      );
      await controller.loadSession(makeWav());
      for (let i = 1; i <= 10; i++) {
        controller.turnKnob("rms", {
          kind: "rms",
          mode: "constant",
          value: i / 10,
        });
        await sleep(15); // beats the debounce, overlaps in-flight requests
      }
      while (controller.busy) await sleep(50);
      expect(rendered.length).toBeGreaterThan(0);
      const last = rendered[rendered.length - 1];
      // the final rendered state reflects the final knob position
      expect(trackMean(last.result.target_tracks.rms)).toBeCloseTo(1.0);
      // ids rendered strictly in order: no stale frame ever replaced a newer one
      const ids = rendered.map((r) => r.requestId);
      expect(ids).toEqual([...ids].sort((a, b) => a - b));
    },
  );
});
