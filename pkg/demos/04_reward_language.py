#!/usr/bin/env python3
"""Parse, print, and evaluate reward programs over recorded episodes.

Run: python demos/04_reward_language.py
"""

from faultline.corpus import cut_in_ineffective_a, left_sparse_a
from faultline.dsl import DslError, contexts_from_trajectory, evaluate, parse, print_program

source = """
# pay out only when the crash is a left lane change the tested car owns
let bonus = 10
reward = if collided() and tested_changed_lane_left(5) and adversaries_passive(5)
         then bonus
         else 0.0
"""
program = parse(source, name="left_change_bonus")
print("canonical form:")
print(print_program(program))

# Evaluate per step from an adversary's point of view on two known episodes.
owned = left_sparse_a().trajectory          # tested car sideswipes while changing left
not_owned = cut_in_ineffective_a().trajectory  # adversary cut in; not the tested car's fault
for name, traj in (("tested-at-fault episode", owned), ("cut-in episode", not_owned)):
    rewards = [evaluate(program, ctx) for ctx in contexts_from_trajectory(traj, ego_id=1)]
    print(f"{name}: per-step rewards {rewards}")

# Generated code cannot escape the catalog, and arithmetic cannot crash
# training: bad identifiers fail at parse time with a structured diagnostic,
# and division by zero evaluates to 0.0 with a logged note.
try:
    parse("reward = read_file(1)")
except DslError as err:
    print("\nrejected program:", err.to_dict())

diags = []
guarded = parse("reward = 10 / (gap_to_tested() * 0)")
ctx = contexts_from_trajectory(owned, ego_id=1)[0]
print("guarded division ->", evaluate(guarded, ctx, diags), "| diagnostics:", diags)
