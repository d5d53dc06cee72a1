"""Seeded fuzz campaigns over admissible pairs."""

from .campaign import CampaignReport, QuadratureStats, fuzz_campaign, margin_statistics, run_trials
from .campaign_config import CampaignConfig
from .report_writer import (
  load_fixture,
  read_report_json,
  replay_fixture,
  replay_record,
  write_counterexample_fixtures,
  write_report_json,
  write_trials_csv,
)
from .sampler import MAX_CONSECUTIVE_REJECTIONS, SampleOutcome, sample_admissible_pair
from .seeding import derive_sub_seed, trial_rng
from .trial import QuadratureCheck, TrialRecord, evaluate_all_sides, run_trial, sides_key

__all__ = [
  'MAX_CONSECUTIVE_REJECTIONS',
  'CampaignConfig',
  'CampaignReport',
  'QuadratureCheck',
  'QuadratureStats',
  'SampleOutcome',
  'TrialRecord',
  'derive_sub_seed',
  'evaluate_all_sides',
  'fuzz_campaign',
  'load_fixture',
  'margin_statistics',
  'read_report_json',
  'replay_fixture',
  'replay_record',
  'run_trial',
  'run_trials',
  'sample_admissible_pair',
  'sides_key',
  'trial_rng',
  'write_counterexample_fixtures',
  'write_report_json',
  'write_trials_csv',
]
