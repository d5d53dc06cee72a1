"""Tests for the campaign driver and report aggregation."""

import math

import pytest

from outerprod.harness.campaign import (
  CampaignReport,
  QuadratureStats,
  fuzz_campaign,
  margin_statistics,
  run_trials,
)
from outerprod.harness.campaign_config import CampaignConfig
from outerprod.harness.trial import run_trial
from outerprod.spectrum import SpectrumMode


class TestMarginStatistics:
  """Test suite for margin_statistics."""

  def test_empty(self):
    assert margin_statistics([]) is None

  def test_values(self):
    stats = margin_statistics([float(x) for x in range(101)])
    assert stats['count'] == 101
    assert (stats['min'], stats['max'], stats['mean']) == (0.0, 100.0, 50.0)
    assert stats['p01'] == pytest.approx(1.0)
    assert stats['p50'] == pytest.approx(50.0)
    assert stats['p99'] == pytest.approx(99.0)


class TestCampaignReport:
  """Aggregation of trial records."""

  def test_totals_cover_every_status(self, small_config):
    report = fuzz_campaign(small_config)
    assert set(report.totals) == {
      f'{statement}:{mode}'
      for statement in ('prop_key', 'theorem1', 'theorem2')
      for mode in ('multiset', 'set')
    }
    for counts in report.totals.values():
      assert set(counts) == {'holds', 'fails', 'degenerate_lhs_neg_inf', 'rhs_undefined'}
      assert sum(counts.values()) == small_config.trials
      assert counts['rhs_undefined'] == 0

  def test_counterexamples_in_trial_order(self, small_config):
    report = fuzz_campaign(small_config)
    indices = [record.trial_index for record in report.counterexamples]
    assert indices == sorted(indices)
    assert report.fails == len(indices)
    assert all(record.has_failure for record in report.counterexamples)

  def test_quadrature_schedule(self, small_config):
    report = fuzz_campaign(small_config)
    assert report.quadrature.checks == 4
    assert report.quadrature.failures <= report.quadrature.checks

  def test_rejection_rate(self, small_config):
    report = fuzz_campaign(small_config)
    assert report.draws == small_config.trials + report.rejection_count
    assert 0.0 <= report.rejection_rate < 1.0

  def test_fold_is_order_independent(self, small_config):
    records = run_trials(small_config)
    forward = CampaignReport.from_records(small_config, records)
    backward = CampaignReport.from_records(small_config, list(reversed(records)))
    assert forward.to_dict() == backward.to_dict()

  def test_margins_skip_infinite_values(self, singular_pair, fixture_pair):
    cfg = CampaignConfig(trials=2, modes=(SpectrumMode.MULTISET,))
    records = [run_trial(cfg, 0, pair=fixture_pair), run_trial(cfg, 1, pair=singular_pair)]
    report = CampaignReport.from_records(cfg, records)
    assert report.totals['theorem1:multiset']['degenerate_lhs_neg_inf'] == 1
    assert report.margins['theorem1:multiset']['count'] == 1
    assert math.isfinite(report.margins['theorem1:multiset']['max'])

  def test_dict_round_trip(self, small_config):
    report = fuzz_campaign(small_config)
    assert CampaignReport.from_dict(report.to_dict()).to_dict() == report.to_dict()

  def test_quadrature_stats_round_trip(self):
    stats = QuadratureStats(checks=3, failures=1, singular_checks=1)
    assert QuadratureStats.from_dict(stats.to_dict()) == stats


class TestRunTrials:
  """Test suite for run_trials."""

  def test_progress_callback(self, small_config):
    seen = []
    run_trials(small_config, progress=lambda done, total: seen.append((done, total)))
    assert seen[0] == (1, 20)
    assert seen[-1] == (20, 20)

  def test_rejects_zero_workers(self, small_config):
    with pytest.raises(ValueError):
      run_trials(small_config, workers=0)

  def test_reproducible(self, small_config):
    assert fuzz_campaign(small_config).to_dict() == fuzz_campaign(small_config).to_dict()
