/** Curve editor model: a length-m track of normalized values the user can
 * draw over. The emitted curve always has exactly m points in [0,1]. */

import { clamp01 } from "./state.js";

export class CurveEditor {
  private points: number[];

  constructor(
    public readonly numFrames: number,
    initial?: number[],
  ) {
    if (!Number.isInteger(numFrames) || numFrames < 1) {
      throw new Error(`numFrames must be a positive integer, got ${numFrames}`);
    }
    this.points = initial
      ? resampleTrack(initial, numFrames).map(clamp01)
      : new Array<number>(numFrames).fill(0.5);
  }

  setPoint(index: number, value: number): void {
    if (index < 0 || index >= this.numFrames) {
      throw new Error(`point index ${index} out of range [0, ${this.numFrames})`);
    }
    this.points[index] = clamp01(value);
  }

  /** Linear drag gesture from (i0, v0) to (i1, v1), inclusive. */
  drawSegment(i0: number, v0: number, i1: number, v1: number): void {
    if (i1 < i0) {
      [i0, i1] = [i1, i0];
      [v0, v1] = [v1, v0];
    }
    for (let i = Math.max(0, i0); i <= Math.min(this.numFrames - 1, i1); i++) {
      const t = i1 === i0 ? 0 : (i - i0) / (i1 - i0);
      this.points[i] = clamp01(v0 + t * (v1 - v0));
    }
  }

  fill(value: number): void {
    this.points.fill(clamp01(value));
  }

  /** Exactly numFrames points, each in [0,1]. */
  emit(): number[] {
    return [...this.points];
  }
}

/** Piecewise-linear resampling of a track onto n uniformly spaced points. */
export function resampleTrack(track: number[], n: number): number[] {
  if (track.length === 0) throw new Error("cannot resample an empty track");
  if (track.length === 1) return new Array<number>(n).fill(track[0]);
  if (n === 1) return [track[0]];
  const out = new Array<number>(n);
  for (let i = 0; i < n; i++) {
    const pos = (i / (n - 1)) * (track.length - 1);
    const lo = Math.floor(pos);
    const hi = Math.min(lo + 1, track.length - 1);
    const frac = pos - lo;
    out[i] = track[lo] * (1 - frac) + track[hi] * frac;
  }
  return out;
}
