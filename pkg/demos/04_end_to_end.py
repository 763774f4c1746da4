"""Walkthrough: the full workbench on a small scale.

Runs the cached pipeline at the smoke scale (reduced resolution and budgets),
then uses the trained artifacts to answer a what-if: raise one region's
calcified-plaque area and compare the three fine-tuning regimes on how well
the independently-measured area hits the target.

First run trains for a few minutes; later runs reuse the cache.

Run:  python3 demos/04_end_to_end.py [out_dir]
"""

import sys
from pathlib import Path

from vesselcf.pipeline import ExperimentConfig, run_pipeline
from vesselcf.render import PanelSpec, render_panel
from vesselcf.scm import InterventionSpec
from vesselcf.session import InferenceSession
from vesselcf.util import read_json

out = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/demo_smoke")
result = run_pipeline(ExperimentConfig.smoke(out))
report = result["report_dir"]

print("\n=== effectiveness (per-region |measured - desired|, mm^2) ===")
print((report / "effectiveness.md").read_text())

loc = read_json(report / "localization.json")
print("=== localization ratios (in-region vs off-region change) ===")
for method, ratios in loc["ratios"].items():
    print(f"  {method:8s} " + "  ".join(f"{k}={v:6.2f}" for k, v in sorted(ratios.items())))

# A single what-if, end to end, through the same session the service uses.
ck = result["checkpoints"]
session = InferenceSession.load(result["dataset"], ck / "cft_pos-seg", ck / "flows.json",
                                ck / "seg_eval.bin", method_label="pos-seg")
sample_id = session.sample_ids("test")[0]
factual = session.attributes(sample_id)
lo, hi = session.manifest.valid_ranges["CPA-mid"]
target = min(factual["CPA-mid"] + 2.0, hi)

outputs = session.counterfactual_outputs(sample_id, {"CPA-mid": target})
print(f"\nwhat-if on {sample_id}: CPA-mid {factual['CPA-mid']:.2f} -> {target:.2f} mm^2")
print(f"  measured back from the counterfactual: {outputs['measured'].values['CPA-mid']:.2f} mm^2")
print(f"  off-target errors: " + "  ".join(
    f"{k}={v:.2f}" for k, v in outputs["errors"].items() if k != "CPA-mid"))

panel_path = out / "what_if_panel.png"
render_panel(session, PanelSpec(sample_id=sample_id,
                                intervention=InterventionSpec({"CPA-mid": target}),
                                method_label="pos-seg"), panel_path)
print("panel ->", panel_path)
print("\nexplore interactively:  vesselcf serve --run", out,
      "--static frontend/dist  (then open http://127.0.0.1:8000)")
