import { ApiClient } from "./api.js";
import { SessionView } from "./state.js";
import { ApiError } from "./types.js";
import type { SampleSummary } from "./types.js";
import { clearError, renderError, renderHistory, renderResult, renderSampleList,
         renderSliderGrid } from "./view.js";

const api = new ApiClient();

function byId(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

async function bootstrap(): Promise<void> {
  const manifest = await api.manifest();
  const session = new SessionView(manifest);
  byId("method-label").textContent =
    `${manifest.method || "model"} · ${manifest.image_width}×${manifest.image_height} px · ` +
    `${manifest.pixel_size_mm} mm/px`;

  let samples: SampleSummary[] = [];
  let offset = 0;
  const pageSize = 12;

  const refreshSliders = () => renderSliderGrid(byId("sliders"), session, () => updateGenerateState());
  const updateGenerateState = () => {
    const button = byId("generate") as HTMLButtonElement;
    button.disabled = session.sampleId === null || session.requestInFlight;
  };

  async function loadSamples(): Promise<void> {
    const page = await api.samples(offset, pageSize);
    samples = page.items;
    byId("page-label").textContent =
      `${offset + 1}–${Math.min(offset + pageSize, page.total)} of ${page.total}`;
    renderSampleList(byId("samples"), samples, session.sampleId, (sample) => {
      session.selectSample(sample.id, sample.attributes);
      refreshSliders();
      updateGenerateState();
      clearError(byId("errors"));
    });
  }

  byId("prev-page").addEventListener("click", async () => {
    offset = Math.max(0, offset - pageSize);
    await loadSamples();
  });
  byId("next-page").addEventListener("click", async () => {
    offset += pageSize;
    await loadSamples();
  });

  byId("reset").addEventListener("click", () => {
    session.resetToFactual();
    refreshSliders();
  });

  byId("generate").addEventListener("click", async () => {
    if (session.sampleId === null || session.requestInFlight) return;
    const sequence = session.nextSequence();
    updateGenerateState();
    clearError(byId("errors"));
    try {
      const response = await api.counterfactual(session.sampleId, session.doMap());
      if (session.acceptResponse(sequence, response)) {
        renderResult(byId("result"), response, manifest);
        renderHistory(byId("history"), session, (index) => {
          const entry = session.history[index];
          renderResult(byId("result"), entry.response, manifest);
        });
      }
    } catch (err) {
      session.failRequest(sequence);
      renderError(byId("errors"), err instanceof ApiError ? err.detail : String(err));
    } finally {
      updateGenerateState();
    }
  });

  await loadSamples();
  updateGenerateState();
}

void bootstrap().catch((err) => {
  renderError(byId("errors"), String(err));
});
