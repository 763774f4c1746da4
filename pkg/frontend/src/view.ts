import { deviationFlags, structureSums } from "./state.js";
import type { SessionView, SliderState } from "./state.js";
import type { CounterfactualResponse, ManifestInfo, SampleSummary } from "./types.js";

const STRUCTURES = ["CPA", "NCPA", "LA"] as const;
const REGIONS = ["prox", "mid", "dist"] as const;
const DEVIATION_THRESHOLD_MM2 = 2.0;

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K, className?: string, text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderSampleList(container: HTMLElement, samples: SampleSummary[],
                                 selected: string | null,
                                 onSelect: (s: SampleSummary) => void): void {
  container.replaceChildren();
  for (const sample of samples) {
    const item = el("div", "sample-item" + (sample.id === selected ? " selected" : ""));
    const img = el("img");
    img.src = `data:image/png;base64,${sample.thumbnail_png}`;
    img.alt = sample.id;
    item.append(img, el("span", "sample-id", sample.id));
    item.addEventListener("click", () => onSelect(sample));
    container.append(item);
  }
}

export function renderSliderGrid(container: HTMLElement, session: SessionView,
                                 onChange: () => void): void {
  container.replaceChildren();
  const grid = el("div", "slider-grid");
  grid.append(el("div", "grid-corner", ""));
  for (const region of REGIONS) {
    grid.append(el("div", "grid-head", region));
  }
  for (const structure of STRUCTURES) {
    grid.append(el("div", "grid-head row-head", structure));
    for (const region of REGIONS) {
      const variable = `${structure}-${region}`;
      const slider = session.sliders.get(variable);
      if (!slider) continue;
      grid.append(sliderCell(session, slider, onChange));
    }
  }
  container.append(grid);
}

function sliderCell(session: SessionView, slider: SliderState, onChange: () => void): HTMLElement {
  const cell = el("div", "slider-cell" + (slider.intervened ? " intervened" : ""));
  const top = el("div", "slider-top");
  const toggle = el("input") as HTMLInputElement;
  toggle.type = "checkbox";
  toggle.checked = slider.intervened;
  toggle.title = `mark ${slider.variable} as intervened`;
  const label = el("span", "slider-value", `${slider.value.toFixed(2)} mm²`);
  top.append(toggle, label);

  const range = el("input") as HTMLInputElement;
  range.type = "range";
  range.min = String(slider.min);
  range.max = String(slider.max);
  range.step = "0.01";
  range.value = String(slider.value);

  range.addEventListener("input", () => {
    session.setSlider(slider.variable, Number(range.value));
    label.textContent = `${slider.value.toFixed(2)} mm²`;
    toggle.checked = true;
    cell.classList.add("intervened");
    onChange();
  });
  toggle.addEventListener("change", () => {
    session.toggleIntervened(slider.variable, toggle.checked);
    range.value = String(slider.value);
    label.textContent = `${slider.value.toFixed(2)} mm²`;
    cell.classList.toggle("intervened", toggle.checked);
    onChange();
  });

  const bounds = el("div", "slider-bounds",
                    `[${slider.min.toFixed(1)}, ${slider.max.toFixed(1)}]  factual ${slider.factual.toFixed(2)}`);
  cell.append(top, range, bounds);
  return cell;
}

function panel(title: string, png: string, manifest: ManifestInfo): HTMLElement {
  const wrap = el("figure", "panel");
  const frame = el("div", "panel-frame");
  const img = el("img");
  img.src = `data:image/png;base64,${png}`;
  img.alt = title;
  frame.append(img);
  for (const column of manifest.region_boundaries) {
    const line = el("div", "boundary-line");
    line.style.left = `${(100 * column) / manifest.image_width}%`;
    frame.append(line);
  }
  wrap.append(frame, el("figcaption", "panel-caption", title));
  return wrap;
}

export function renderResult(container: HTMLElement, response: CounterfactualResponse,
                             manifest: ManifestInfo): void {
  container.replaceChildren();
  const panels = el("div", "panels");
  panels.append(
    panel("factual (reconstruction)", response.factual_png, manifest),
    panel("counterfactual", response.counterfactual_png, manifest),
    panel("difference", response.diff_png, manifest),
  );
  container.append(panels, measurementTable(response));
}

function measurementTable(response: CounterfactualResponse): HTMLElement {
  const flags = deviationFlags(response, DEVIATION_THRESHOLD_MM2);
  const sums = structureSums(response.measured);
  const table = el("table", "measure-table");
  const head = el("tr");
  for (const title of ["variable", "desired", "measured", "|error|", ""]) {
    head.append(el("th", undefined, title));
  }
  table.append(head);
  for (const structure of STRUCTURES) {
    for (const region of REGIONS) {
      const variable = `${structure}-${region}`;
      const row = el("tr", response.intervened.includes(variable) ? "intervened-row" : undefined);
      row.append(
        el("td", undefined, variable),
        el("td", undefined, response.desired[variable].toFixed(2)),
        el("td", undefined, response.measured[variable].toFixed(2)),
        el("td", undefined, response.errors[variable].toFixed(2)),
        el("td", flags[variable] ? "flag" : undefined, flags[variable] ? "off-target" : ""),
      );
      table.append(row);
    }
    const sumRow = el("tr", "sum-row");
    const serverGlobal = response.global_soft_areas[structure];
    sumRow.append(
      el("td", undefined, `${structure} total`),
      el("td"),
      el("td", undefined, `${sums[structure].toFixed(2)} (server: ${serverGlobal.toFixed(2)})`),
      el("td"), el("td"),
    );
    table.append(sumRow);
  }
  return table;
}

export function renderHistory(container: HTMLElement, session: SessionView,
                              onPick: (index: number) => void): void {
  container.replaceChildren();
  session.history.forEach((entry, index) => {
    const item = el("div", "history-item");
    const img = el("img");
    img.src = `data:image/png;base64,${entry.response.counterfactual_png}`;
    img.alt = `history ${index}`;
    const keys = Object.keys(entry.doMap);
    item.append(img, el("span", "history-label",
                        keys.length ? keys.map((k) => `${k}=${entry.doMap[k].toFixed(1)}`).join(", ") : "null"));
    item.addEventListener("click", () => onPick(index));
    container.append(item);
  });
}

export function renderError(container: HTMLElement, detail: unknown): void {
  container.replaceChildren();
  const box = el("div", "error-box");
  if (detail && typeof detail === "object" && "min" in (detail as object)) {
    const d = detail as { error: string; variable: string; min: number; max: number };
    box.textContent = `${d.error} — ${d.variable} must lie in [${d.min.toFixed(2)}, ${d.max.toFixed(2)}]`;
  } else {
    box.textContent = typeof detail === "string" ? detail : JSON.stringify(detail);
  }
  container.append(box);
}

export function clearError(container: HTMLElement): void {
  container.replaceChildren();
}
