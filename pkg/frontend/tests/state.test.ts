import { describe, expect, it } from "vitest";

import { HISTORY_LIMIT, SessionView, clamp, deviationFlags, structureSums } from "../src/state.js";
import type { CounterfactualResponse, ManifestInfo } from "../src/types.js";

const VARIABLES = ["CPA", "NCPA", "LA"].flatMap((s) => ["prox", "mid", "dist"].map((r) => `${s}-${r}`));

function manifest(): ManifestInfo {
  return {
    variables: VARIABLES,
    valid_ranges: Object.fromEntries(VARIABLES.map((v) => [v, [1, 11] as [number, number]])),
    regions: ["proximal", "mid", "distal"],
    region_boundaries: [128, 256],
    image_height: 64,
    image_width: 384,
    pixel_size_mm: 0.25,
    num_test_samples: 10,
    checkpoint_hashes: {},
    method: "pos-seg",
  };
}

function attributes(value = 5): Record<string, number> {
  return Object.fromEntries(VARIABLES.map((v) => [v, value]));
}

function response(overrides: Partial<CounterfactualResponse> = {}): CounterfactualResponse {
  const zero = Object.fromEntries(VARIABLES.map((v) => [v, 0]));
  return {
    sample_id: "s000001",
    do: {},
    intervened: [],
    desired: attributes(),
    measured: attributes(),
    errors: zero,
    global_soft_areas: { CPA: 15, NCPA: 15, LA: 15 },
    checkpoint_hashes: {},
    deterministic: true,
    factual_png: "",
    counterfactual_png: "",
    diff_png: "",
    ...overrides,
  };
}

describe("clamp", () => {
  it("clamps to bounds", () => {
    expect(clamp(-5, 0, 10)).toBe(0);
    expect(clamp(15, 0, 10)).toBe(10);
    expect(clamp(5, 0, 10)).toBe(5);
  });
});

describe("SessionView sliders", () => {
  it("initializes nine sliders with server ranges and factual values", () => {
    const view = new SessionView(manifest());
    view.selectSample("s1", attributes(4));
    expect(view.sliders.size).toBe(9);
    for (const slider of view.sliders.values()) {
      expect(slider.min).toBe(1);
      expect(slider.max).toBe(11);
      expect(slider.value).toBe(4);
      expect(slider.intervened).toBe(false);
    }
  });

  it("slider values beyond the range are impossible by construction", () => {
    const view = new SessionView(manifest());
    view.selectSample("s1", attributes());
    const s = view.setSlider("CPA-mid", 9999);
    expect(s.value).toBe(11);
    expect(view.setSlider("CPA-mid", -9999).value).toBe(1);
  });

  it("marks changed sliders as intervened and only sends those", () => {
    const view = new SessionView(manifest());
    view.selectSample("s1", attributes(5));
    view.setSlider("LA-dist", 8);
    expect(view.doMap()).toEqual({ "LA-dist": 8 });
  });

  it("reset restores factual values and clears intervened flags", () => {
    const view = new SessionView(manifest());
    view.selectSample("s1", attributes(5));
    view.setSlider("CPA-prox", 10);
    view.resetToFactual();
    expect(view.doMap()).toEqual({});
    expect(view.sliders.get("CPA-prox")!.value).toBe(5);
  });

  it("unchecking an intervened toggle reverts to the factual value", () => {
    const view = new SessionView(manifest());
    view.selectSample("s1", attributes(5));
    view.setSlider("NCPA-mid", 9);
    view.toggleIntervened("NCPA-mid", false);
    expect(view.sliders.get("NCPA-mid")!.value).toBe(5);
    expect(view.doMap()).toEqual({});
  });

  it("state is reconstructible from (sample id, slider values)", () => {
    const view = new SessionView(manifest());
    view.selectSample("s1", attributes(5));
    view.setSlider("CPA-mid", 7.25);
    const snap = view.snapshot();

    const restored = new SessionView(manifest());
    restored.restore(snap, attributes(5));
    expect(restored.snapshot()).toEqual(snap);
    expect(restored.doMap()).toEqual({ "CPA-mid": 7.25 });
  });
});

describe("request sequencing", () => {
  it("keeps at most one in-flight request and discards stale responses", () => {
    const view = new SessionView(manifest());
    view.selectSample("s1", attributes());
    const first = view.nextSequence();
    expect(view.requestInFlight).toBe(true);
    const second = view.nextSequence();
    // the newer response lands first; the stale one must be discarded
    expect(view.acceptResponse(second, response({ sample_id: "new" }))).toBe(true);
    expect(view.acceptResponse(first, response({ sample_id: "old" }))).toBe(false);
    expect(view.lastResponse!.sample_id).toBe("new");
  });

  it("caps history at five entries", () => {
    const view = new SessionView(manifest());
    view.selectSample("s1", attributes());
    for (let i = 0; i < 8; i += 1) {
      const seq = view.nextSequence();
      view.acceptResponse(seq, response({ sample_id: `s${i}` }));
    }
    expect(view.history.length).toBe(HISTORY_LIMIT);
    expect(view.history[0].sampleId).toBe("s3");
    expect(view.history[4].sampleId).toBe("s7");
  });
});

describe("derived displays", () => {
  it("per-structure sums of measured equal the server's global areas", () => {
    const r = response();
    const sums = structureSums(r.measured);
    for (const structure of ["CPA", "NCPA", "LA"]) {
      expect(sums[structure]).toBeCloseTo(r.global_soft_areas[structure], 10);
    }
  });

  it("flags unintervened deviations above threshold only", () => {
    const r = response({
      intervened: ["CPA-mid"],
      errors: { ...Object.fromEntries(VARIABLES.map((v) => [v, 0])), "CPA-mid": 9, "LA-dist": 3 },
    });
    const flags = deviationFlags(r, 2.0);
    expect(flags["CPA-mid"]).toBe(false); // intervened cells are expected to move
    expect(flags["LA-dist"]).toBe(true);
    expect(flags["CPA-prox"]).toBe(false);
  });
});
