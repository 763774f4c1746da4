import type { CounterfactualResponse, ManifestInfo } from "./types.js";

export interface SliderState {
  variable: string;
  value: number;
  min: number;
  max: number;
  factual: number;
  intervened: boolean;
}

export interface HistoryEntry {
  sampleId: string;
  doMap: Record<string, number>;
  response: CounterfactualResponse;
}

export const HISTORY_LIMIT = 5;

export function clamp(value: number, min: number, max: number): number {
  return Math.min(max, Math.max(min, value));
}

/** Client-side session state; every displayed number comes from server responses. */
export class SessionView {
  sampleId: string | null = null;
  sliders: Map<string, SliderState> = new Map();
  lastResponse: CounterfactualResponse | null = null;
  history: HistoryEntry[] = [];
  requestInFlight = false;
  private sequence = 0;
  private lastAccepted = 0;

  constructor(public manifest: ManifestInfo) {}

  selectSample(sampleId: string, attributes: Record<string, number>): void {
    this.sampleId = sampleId;
    this.lastResponse = null;
    this.sliders = new Map(
      this.manifest.variables.map((variable) => {
        const [min, max] = this.manifest.valid_ranges[variable];
        const factual = clamp(attributes[variable], min, max);
        return [variable, { variable, value: factual, min, max, factual, intervened: false }];
      }),
    );
  }

  setSlider(variable: string, rawValue: number): SliderState {
    const slider = this.sliders.get(variable);
    if (!slider) throw new Error(`unknown variable ${variable}`);
    slider.value = clamp(rawValue, slider.min, slider.max);
    slider.intervened = true;
    return slider;
  }

  toggleIntervened(variable: string, on: boolean): void {
    const slider = this.sliders.get(variable);
    if (!slider) throw new Error(`unknown variable ${variable}`);
    slider.intervened = on;
    if (!on) slider.value = slider.factual;
  }

  resetToFactual(): void {
    for (const slider of this.sliders.values()) {
      slider.value = slider.factual;
      slider.intervened = false;
    }
  }

  /** The do() payload: only intervened variables are sent. */
  doMap(): Record<string, number> {
    const out: Record<string, number> = {};
    for (const slider of this.sliders.values()) {
      if (slider.intervened) out[slider.variable] = slider.value;
    }
    return out;
  }

  /** Full UI state is reconstructible from (sample id, slider values). */
  snapshot(): { sampleId: string | null; values: Record<string, number>; intervened: string[] } {
    const values: Record<string, number> = {};
    const intervened: string[] = [];
    for (const slider of this.sliders.values()) {
      values[slider.variable] = slider.value;
      if (slider.intervened) intervened.push(slider.variable);
    }
    return { sampleId: this.sampleId, values, intervened };
  }

  restore(snapshot: { sampleId: string | null; values: Record<string, number>; intervened: string[] },
          attributes: Record<string, number>): void {
    if (snapshot.sampleId === null) return;
    this.selectSample(snapshot.sampleId, attributes);
    for (const variable of snapshot.intervened) {
      this.setSlider(variable, snapshot.values[variable]);
    }
  }

  nextSequence(): number {
    this.requestInFlight = true;
    return ++this.sequence;
  }

  /** Returns false for stale responses (superseded by a newer request). */
  acceptResponse(sequence: number, response: CounterfactualResponse): boolean {
    if (sequence <= this.lastAccepted) return false;
    this.lastAccepted = sequence;
    this.requestInFlight = sequence !== this.sequence ? this.requestInFlight : false;
    this.lastResponse = response;
    this.pushHistory({ sampleId: response.sample_id, doMap: response.do, response });
    return true;
  }

  failRequest(sequence: number): void {
    if (sequence === this.sequence) this.requestInFlight = false;
  }

  private pushHistory(entry: HistoryEntry): void {
    this.history.push(entry);
    if (this.history.length > HISTORY_LIMIT) {
      this.history = this.history.slice(this.history.length - HISTORY_LIMIT);
    }
  }
}

/** Per-structure sums of the measured table; must equal the server's global areas. */
export function structureSums(measured: Record<string, number>): Record<string, number> {
  const sums: Record<string, number> = {};
  for (const [key, value] of Object.entries(measured)) {
    const structure = key.split("-")[0];
    sums[structure] = (sums[structure] ?? 0) + value;
  }
  return sums;
}

export function deviationFlags(response: CounterfactualResponse, thresholdMm2: number): Record<string, boolean> {
  const flags: Record<string, boolean> = {};
  for (const [variable, err] of Object.entries(response.errors)) {
    flags[variable] = !response.intervened.includes(variable) && err > thresholdMm2;
  }
  return flags;
}
