#!/usr/bin/env python3
"""The whole loop at toy scale, offline: describe the accident type, sample
reward candidates, train and select, build the preference gate, retrain, and
summarize. Uses the scripted offline responder (no network, no fixtures).

Run: python demos/07_full_pipeline.py   (about a minute)

For the shipped desk-scale scenario, run instead:
  faultline run-all --config configs/smoke_left_sparse.json
and browse it with:
  faultline serve --runs-root runs & open frontend/index.html
"""

import json
import tempfile
from pathlib import Path

from faultline.llmgen import FixtureStore, RecordingClient, ScriptedClient, reference_handler
from faultline.pipeline import PipelineConfig, RunManifest, run_all, stage_descriptions, stage_generate

workdir = Path(tempfile.mkdtemp(prefix="faultline_demo_"))
config = PipelineConfig.from_dict({
    "seed": 3,
    "run_dir": str(workdir / "run"),
    "subtypes": ["left_sparse"],
    "k": 2,
    "refinement_iterations": 1,
    "eval_episodes": 20,
    "candidate_train_steps": 4000,
    "gate_retrain_steps": 4000,
    "env": {
        "kind": "highway", "lane_count": 4, "background_count": 2, "adversary_count": 2,
        "tested_policy": "rule_based", "background_policy": "rule_based",
        "background_params": {"target_speed": 10.0},
        "spawn_back": -18.0, "spawn_ahead": 25.0, "seed": 3,
    },
    "trainer": {"total_steps": 4000, "rollout_steps": 1000, "ppo_epochs": 6, "workers": 1, "seed": 3},
    "llm": {"mode": "fixture", "fixture_dir": str(workdir / "fixtures")},
    "pref": {"n_pairs": 80, "epochs": 12},
})

# Record the exchanges once with the offline responder, then the pipeline
# replays them in fixture mode -- the same flow a live run would follow.
recorder = RecordingClient(ScriptedClient(reference_handler), FixtureStore(config.llm.fixture_dir))
manifest = RunManifest(config.run_dir)
descriptions = stage_descriptions(config, manifest, recorder)
stage_generate(config, manifest, recorder, descriptions, iteration=0)
print(f"recorded fixtures under {config.llm.fixture_dir}")

summary = run_all(config)
print("\npipeline summary:")
print(json.dumps(summary, indent=2, sort_keys=True))
print(f"\nartifacts in {config.run_dir}")
for path in sorted(Path(config.run_dir).rglob("*"))[:18]:
    if path.is_file():
        print("  ", path.relative_to(config.run_dir))
