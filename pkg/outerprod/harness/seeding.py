"""Counter-based per-trial seeding.

Each trial's stream depends only on (seed, trial_index), so trials can run in
any order or process and still draw identical numbers.
"""

from __future__ import annotations

import numpy as np

MAX_SEED = 2**64 - 1


def derive_sub_seed(seed: int, trial_index: int) -> int:
  """64-bit sub-seed for one trial, mixed by a ``SeedSequence`` spawned at ``trial_index``."""
  if not 0 <= seed <= MAX_SEED:
    raise ValueError(f'seed must be an unsigned 64-bit integer, got {seed!r}')
  if trial_index < 0:
    raise ValueError(f'trial_index must be non-negative, got {trial_index!r}')
  state = np.random.SeedSequence(seed, spawn_key=(trial_index,)).generate_state(1, np.uint64)
  return int(state[0])


def trial_rng(sub_seed: int) -> np.random.Generator:
  """Philox generator keyed by the sub-seed."""
  return np.random.Generator(np.random.Philox(key=sub_seed))
