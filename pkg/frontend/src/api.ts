import { ApiError } from "./types.js";
import type { CounterfactualResponse, ManifestInfo, SamplePage } from "./types.js";

async function asJson<T>(resp: Response): Promise<T> {
  if (!resp.ok) {
    let detail: unknown = null;
    try {
      detail = (await resp.json()).detail;
    } catch {
      detail = await resp.text();
    }
    throw new ApiError(resp.status, detail);
  }
  return (await resp.json()) as T;
}

export class ApiClient {
  constructor(private baseUrl: string = "", private fetchFn: typeof fetch = fetch) {}

  async manifest(): Promise<ManifestInfo> {
    return asJson(await this.fetchFn(`${this.baseUrl}/api/manifest`));
  }

  async samples(offset = 0, limit = 12): Promise<SamplePage> {
    return asJson(await this.fetchFn(`${this.baseUrl}/api/samples?offset=${offset}&limit=${limit}`));
  }

  async counterfactual(sampleId: string, doMap: Record<string, number>): Promise<CounterfactualResponse> {
    const resp = await this.fetchFn(`${this.baseUrl}/api/counterfactual`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ sample_id: sampleId, do: doMap }),
    });
    return asJson(resp);
  }
}
