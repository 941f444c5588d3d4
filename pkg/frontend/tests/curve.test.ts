import { describe, expect, it } from "vitest";

import { CurveEditor, resampleTrack } from "../src/curve.js";

describe("CurveEditor", () => {
  it("always emits exactly m points", () => {
    for (const m of [1, 8, 37, 128]) {
      const editor = new CurveEditor(m);
      expect(editor.emit()).toHaveLength(m);
      editor.drawSegment(0, 0, m - 1, 1);
      expect(editor.emit()).toHaveLength(m);
    }
  });

  it("clamps drawn values to [0,1]", () => {
    const editor = new CurveEditor(4);
    editor.setPoint(0, -3);
    editor.setPoint(1, 7);
    const out = editor.emit();
    expect(out[0]).toBe(0);
    expect(out[1]).toBe(1);
  });

  it("rejects out-of-range point indices", () => {
    const editor = new CurveEditor(4);
    expect(() => editor.setPoint(4, 0.5)).toThrow(/out of range/);
    expect(() => editor.setPoint(-1, 0.5)).toThrow(/out of range/);
  });

  it("rejects a non-positive frame count", () => {
    expect(() => new CurveEditor(0)).toThrow(/positive integer/);
  });

  it("draws linear segments inclusively in either direction", () => {
    const editor = new CurveEditor(5);
    editor.drawSegment(0, 0, 4, 1);
    expect(editor.emit()).toEqual([0, 0.25, 0.5, 0.75, 1]);
    editor.drawSegment(4, 0, 0, 1); // reversed gesture
    expect(editor.emit()).toEqual([1, 0.75, 0.5, 0.25, 0]);
  });

  it("initializes from a source track, resampled to m", () => {
    const editor = new CurveEditor(3, [0, 1]);
    expect(editor.emit()).toEqual([0, 0.5, 1]);
  });

  it("emits a copy, not a live reference", () => {
    const editor = new CurveEditor(2);
    const out = editor.emit();
    out[0] = 123;
    expect(editor.emit()[0]).not.toBe(123);
  });
});

describe("resampleTrack", () => {
  it("is the identity at matching lengths", () => {
    expect(resampleTrack([0.1, 0.5, 0.9], 3)).toEqual([0.1, 0.5, 0.9]);
  });

  it("interpolates endpoints exactly", () => {
    const out = resampleTrack([0.2, 0.8], 5);
    expect(out[0]).toBeCloseTo(0.2);
    expect(out[4]).toBeCloseTo(0.8);
    expect(out).toHaveLength(5);
  });

  it("broadcasts a single value", () => {
    expect(resampleTrack([0.7], 4)).toEqual([0.7, 0.7, 0.7, 0.7]);
  });

  it("throws on an empty track", () => {
    expect(() => resampleTrack([], 3)).toThrow(/empty/);
  });
});
