/** DOM layer: wires the controller to sliders, a curve canvas, the
 * target-vs-measured overlay plot, and the audio player. */

import { ApiClient, SynthesizeResult } from "./api.js";
import { CurveEditor } from "./curve.js";
import { PanelController, RenderedResult } from "./state.js";

const COLORS = { target: "#2563eb", measured: "#dc2626", wave: "#374151" };

export function base64WavToBlobUrl(b64: string): string {
  const bytes = Uint8Array.from(atob(b64), (c) => c.charCodeAt(0));
  return URL.createObjectURL(new Blob([bytes], { type: "audio/wav" }));
}

function drawTrack(
  ctx: CanvasRenderingContext2D,
  track: number[],
  color: string,
  w: number,
  h: number,
): void {
  ctx.strokeStyle = color;
  ctx.lineWidth = 1.5;
  ctx.beginPath();
  track.forEach((v, i) => {
    const x = (i / Math.max(1, track.length - 1)) * w;
    const y = h - v * h;
    i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y);
  });
  ctx.stroke();
}

export function drawOverlay(
  canvas: HTMLCanvasElement,
  target: number[],
  measured: number[],
): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  drawTrack(ctx, target, COLORS.target, canvas.width, canvas.height);
  drawTrack(ctx, measured, COLORS.measured, canvas.width, canvas.height);
}

export function drawWaveform(canvas: HTMLCanvasElement, samples: Float32Array): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.strokeStyle = COLORS.wave;
  ctx.beginPath();
  const step = Math.max(1, Math.floor(samples.length / canvas.width));
  for (let x = 0; x < canvas.width; x++) {
    const v = samples[Math.min(samples.length - 1, x * step)];
    const y = canvas.height / 2 - v * (canvas.height / 2);
    x === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y);
  }
  ctx.stroke();
}

export function mountPanel(root: HTMLElement, baseUrl: string): PanelController {
  const api = new ApiClient(baseUrl);
  const status = document.createElement("p");
  status.className = "status";
  const fileInput = document.createElement("input");
  fileInput.type = "file";
  fileInput.accept = ".wav,audio/wav";
  const knobArea = document.createElement("div");
  const audio = document.createElement("audio");
  audio.controls = true;
  const overlays = new Map<string, HTMLCanvasElement>();

  const controller = new PanelController(api, {
    onRender: (rendered: RenderedResult) => {
      renderResult(rendered.result);
      status.textContent = `rendered request #${rendered.requestId}`;
    },
    onError: (err) => {
      status.textContent = `service error: ${err instanceof Error ? err.message : err}`;
    },
  });

  function renderResult(result: SynthesizeResult): void {
    audio.src = base64WavToBlobUrl(result.audio_wav_base64);
    void audio.play().catch(() => undefined); // autoplay may be blocked
    for (const [kind, canvas] of overlays) {
      drawOverlay(
        canvas,
        result.target_tracks[kind] ?? [],
        result.measured_tracks_normalized[kind] ?? [],
      );
    }
  }

  function buildKnob(kind: string, m: number): HTMLElement {
    const wrap = document.createElement("fieldset");
    const legend = document.createElement("legend");
    legend.textContent = kind;
    const slider = document.createElement("input");
    slider.type = "range";
    slider.min = "0";
    slider.max = "1";
    slider.step = "0.01";
    slider.value = String(controller.knob(kind).value);
    slider.addEventListener("input", () => {
      controller.turnKnob(kind, {
        kind,
        mode: "constant",
        value: Number(slider.value),
      });
    });
    const curveBtn = document.createElement("button");
    curveBtn.textContent = "apply ramp curve";
    curveBtn.addEventListener("click", () => {
      const editor = new CurveEditor(m);
      editor.drawSegment(0, 0.2, m - 1, 0.9);
      controller.turnKnob(kind, { kind, mode: "curve", value: editor.emit() });
    });
    const canvas = document.createElement("canvas");
    canvas.width = 480;
    canvas.height = 96;
    overlays.set(kind, canvas);
    wrap.append(legend, slider, curveBtn, canvas);
    return wrap;
  }

  fileInput.addEventListener("change", async () => {
    const file = fileInput.files?.[0];
    if (!file) return;
    status.textContent = "uploading…";
    try {
      const session = await controller.loadSession(await file.arrayBuffer());
      knobArea.replaceChildren(
        ...Object.keys(session.attribute_tracks).map((kind) =>
          buildKnob(kind, session.num_frames),
        ),
      );
      status.textContent = `session ${session.session_id} (${session.num_frames} frames)`;
    } catch (err) {
      status.textContent = `upload failed: ${err instanceof Error ? err.message : err}`;
    }
  });

  root.append(fileInput, status, knobArea, audio);
  return controller;
}
