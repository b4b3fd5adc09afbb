#!/usr/bin/env python3
"""The two fixed driving policies under test, probed on hand-built situations.

Run: python demos/02_tested_policies.py
"""

import numpy as np

from faultline.policies import (
    GridSpec,
    PlanView,
    RuleBasedParams,
    act_rule_based,
    act_value_iteration,
    solve_finite_horizon,
)

ACTIONS = ["left", "idle", "right", "faster", "slower"]


def obs_rows(*rows):
    obs = np.zeros((5, 5))
    for i, row in enumerate(rows):
        obs[i] = row
    return obs


# The gap-keeping rule set: brake under the safe gap, overtake slow leads.
params = RuleBasedParams(target_speed=24.0)
cases = {
    "empty road, below target speed": (obs_rows(), 15.0),
    "lead 6 m ahead closing fast": (obs_rows([1, 6.0, 0.0, -5.0, 0.0]), 20.0),
    "slow lead, left lane clear": (obs_rows([1, 15.0, 0.0, -6.0, 0.0]), 20.0),
    "slow lead, both lanes blocked": (
        obs_rows([1, 15.0, 0.0, -6.0, 0.0], [1, 2.0, -4.0, 0.0, 0.0], [1, 1.0, 4.0, 0.0, 0.0]),
        20.0,
    ),
}
print("rule-based policy:")
for name, (obs, speed) in cases.items():
    print(f"  {name:<34} -> {ACTIONS[act_rule_based(obs, speed, params)]}")

# The value-iteration planner works on a (lane, longitudinal bin, speed bin)
# grid with neighbors rolled forward at constant speed.
print("\nvalue iteration on a world view:")
view = PlanView(ego_lane=1, ego_speed=15.0, lane_count=4, v_min=0.0, v_max=30.0,
                others=((20.0, 1, 0.0),))  # stalled car 20 m ahead, same lane
action = act_value_iteration(view, GridSpec(), horizon=8, gamma=0.9)
print(f"  stalled lead ahead -> {ACTIONS[action]}")

empty = PlanView(ego_lane=1, ego_speed=10.0, lane_count=4, v_min=0.0, v_max=30.0, others=())
print(f"  empty road         -> {ACTIONS[act_value_iteration(empty, GridSpec(), 8, 0.9)]}")

# The underlying solver is a plain finite-horizon backward induction; ties
# break toward the lowest action index.
next_state = np.zeros((1, 5), dtype=int)
rewards = np.ones((1, 5))
values, greedy = solve_finite_horizon(next_state, rewards, horizon=3, gamma=0.9)
print(f"\nsingle-cell MDP, all actions equal: greedy action {greedy[0]}, value {values[0]:.3f}")
