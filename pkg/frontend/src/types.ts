export interface ManifestInfo {
  variables: string[];
  valid_ranges: Record<string, [number, number]>;
  regions: string[];
  region_boundaries: number[];
  image_height: number;
  image_width: number;
  pixel_size_mm: number;
  num_test_samples: number;
  checkpoint_hashes: Record<string, string>;
  method: string;
}

export interface SampleSummary {
  id: string;
  attributes: Record<string, number>;
  thumbnail_png: string;
}

export interface SamplePage {
  total: number;
  offset: number;
  items: SampleSummary[];
}

export interface CounterfactualResponse {
  sample_id: string;
  do: Record<string, number>;
  intervened: string[];
  desired: Record<string, number>;
  measured: Record<string, number>;
  errors: Record<string, number>;
  global_soft_areas: Record<string, number>;
  checkpoint_hashes: Record<string, string>;
  deterministic: boolean;
  factual_png: string;
  counterfactual_png: string;
  diff_png: string;
}

export interface RangeErrorDetail {
  error: string;
  variable?: string;
  min?: number;
  max?: number;
}

export class ApiError extends Error {
  constructor(public status: number, public detail: unknown) {
    super(`API error ${status}`);
  }
}
