#!/usr/bin/env python3
"""Train adversarial vehicles against the fixed policy with a dense
approach-and-collide reward, then compare to a uniform-random baseline.

Run: python demos/05_adversarial_training.py          (about 2 minutes)
     python demos/05_adversarial_training.py --quick  (smaller, noisier)
"""

import sys
import time

import numpy as np

from faultline.dsl import parse
from faultline.marl import TrainerConfig, build_actor, evaluate_policy, train
from faultline.sim import EnvConfig

quick = "--quick" in sys.argv
steps = 20_000 if quick else 100_000

env = EnvConfig(kind="highway", background_count=0, adversary_count=2, seed=5,
                tested_policy="rule_based", spawn_back=-30.0, spawn_ahead=-12.0)
program = parse(
    "reward = if ego_hit_tested() then 100 else "
    "(if collided() then 20 else -0.05 * gap_to_tested())",
    name="approach_and_collide",
)

uniform = build_actor(25, 5, 64, seed=0)
uniform.set_flat(np.zeros(uniform.n_params))  # zero weights: uniform policy
baseline_evals = evaluate_policy(uniform, env, 100, seed=21, max_steps=40)
baseline = sum(1 for t in baseline_evals if t.collision) / len(baseline_evals)
print(f"uniform-random baseline collision rate: {baseline:.0%}")

config = TrainerConfig(total_steps=steps, rollout_steps=4000, ppo_epochs=15, workers=1, seed=3)
started = time.time()
result = train(env, program, None, config)
print(f"trained {steps} env steps in {time.time() - started:.0f}s")
for row in result.curve[:: max(len(result.curve) // 5, 1)]:
    print(f"  step {row['step']:>7} collision rate {row['collision_rate']:.0%} "
          f"mean return {row['mean_return']:7.1f} entropy {row['entropy']:.2f}")

evals = evaluate_policy(result.actor, env, 100, seed=21, max_steps=40)
trained = sum(1 for t in evals if t.collision) / len(evals)
print(f"trained collision rate: {trained:.0%} ({trained / max(baseline, 1e-9):.1f}x the baseline)")
