#!/usr/bin/env python3
"""Preference pairs, the trajectory scorer, threshold calibration, gating.

Run: python demos/06_preference_gating.py
"""

import math

import numpy as np

from faultline.pref import (
    PrefTrainConfig,
    PreferencePair,
    build_pairs,
    calibrate_threshold,
    gated_reward,
    preference_prob,
    ranking_accuracy,
    train_reward_model,
)

# The pairwise model: the probability that the first trajectory is the
# intended accident type rises logistically in the score difference.
print("preference probability at score gaps:")
for gap in (0.0, math.log(3.0), 3.0, -3.0):
    print(f"  S1 - S2 = {gap:+.3f} -> {preference_prob(gap, 0.0):.3f}")

# Synthetic separable pools: positive sequences carry +1 in one feature.
rng = np.random.default_rng(0)
def pool(sign, n=50, t=6, dim=8):
    out = []
    for _ in range(n):
        seq = rng.normal(scale=0.1, size=(t, dim))
        seq[:, 0] += sign
        out.append(seq)
    return out

positives, negatives = pool(+1.0), pool(-1.0)
pairs = build_pairs(positives[:30], negatives[:30], 150, seed=1)
model, curve = train_reward_model(pairs, PrefTrainConfig(epochs=25, seed=2))
print(f"\ntrained on {len(pairs)} pairs; loss {curve[0]['loss']:.3f} -> {curve[-1]['loss']:.3f}")

held = [PreferencePair(p, n) for p in positives[30:] for n in negatives[30:]]
print(f"held-out ranking accuracy: {ranking_accuracy(model, held):.3f}")

pos_scores = [model.score(p) for p in positives[30:40]]
neg_scores = [model.score(n) for n in negatives[30:40]]
calibration = calibrate_threshold(pos_scores, neg_scores)
print(f"threshold = midpoint of validation means: {calibration.theta:.2f} "
      f"(pos {calibration.pos_mean:.2f}, neg {calibration.neg_mean:.2f})")

# During retraining the threshold gates the generated program's terminal
# reward: episodes scoring below it earn exactly zero.
for score in (calibration.theta - 1.0, calibration.theta, calibration.theta + 1.0):
    print(f"  program reward 25 at score {score:6.2f} -> {gated_reward(25.0, score, calibration.theta)}")
