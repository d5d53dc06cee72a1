"""Campaign driver and the aggregated report."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any

import numpy as np

from outerprod.bounds.inequality_sides import CAMPAIGN_STATEMENTS, SideStatus

from .campaign_config import CampaignConfig
from .trial import TrialRecord, run_trial, sides_key

logger = logging.getLogger(__name__)

QUANTILES = {'p01': 0.01, 'p25': 0.25, 'p50': 0.50, 'p75': 0.75, 'p99': 0.99}
NONSINGULAR_DISCREPANCY_LIMIT = 1e-6

ProgressCallback = Callable[[int, int], None]


def margin_statistics(margins: Sequence[float]) -> dict[str, float] | None:
  """min, max, mean and the 1/25/50/75/99% quantiles of the finite margins."""
  if not margins:
    return None
  values = np.asarray(margins, dtype=float)
  stats = {
    'count': len(values),
    'min': float(values.min()),
    'max': float(values.max()),
    'mean': math.fsum(margins) / len(values),
  }
  stats.update({name: float(np.quantile(values, q)) for name, q in QUANTILES.items()})
  return stats


@dataclass(frozen=True)
class QuadratureStats:
  """Aggregate of the quadrature spot checks of a campaign."""

  checks: int = 0
  failures: int = 0
  singular_checks: int = 0
  max_nonsingular_discrepancy: float = 0.0
  nonsingular_over_limit: int = 0

  @classmethod
  def from_records(cls, records: Sequence[TrialRecord]) -> QuadratureStats:
    checks = [record.quadrature_check for record in records if record.quadrature_check]
    nonsingular = [
      check.discrepancy
      for check in checks
      if not check.singular and check.discrepancy is not None
    ]
    return cls(
      checks=len(checks),
      failures=sum(1 for check in checks if check.failed),
      singular_checks=sum(1 for check in checks if check.singular),
      max_nonsingular_discrepancy=max(nonsingular, default=0.0),
      nonsingular_over_limit=sum(1 for d in nonsingular if d > NONSINGULAR_DISCREPANCY_LIMIT),
    )

  def to_dict(self) -> dict[str, Any]:
    return {
      'checks': self.checks,
      'failures': self.failures,
      'singular_checks': self.singular_checks,
      'max_nonsingular_discrepancy': self.max_nonsingular_discrepancy,
      'nonsingular_over_limit': self.nonsingular_over_limit,
    }

  @classmethod
  def from_dict(cls, data: dict[str, Any]) -> QuadratureStats:
    return cls(**data)


@dataclass(frozen=True)
class CampaignReport:
  """Aggregated outcome of a campaign.

  ``totals`` and ``margins`` are keyed by ``statement:mode``. Margin
  statistics cover finite margins only; degenerate trials (margin +inf) and
  undefined right-hand sides are counted in ``totals`` alone.
  """

  config: CampaignConfig
  totals: dict[str, dict[str, int]]
  margins: dict[str, dict[str, float] | None]
  counterexamples: list[TrialRecord]
  rejection_count: int
  quadrature: QuadratureStats = field(default_factory=QuadratureStats)
  outside_hypotheses: int = 0

  @property
  def fails(self) -> int:
    """Number of trials with at least one failing statement."""
    return len(self.counterexamples)

  @property
  def draws(self) -> int:
    return self.config.trials + self.rejection_count

  @property
  def rejection_rate(self) -> float:
    return self.rejection_count / self.draws

  @classmethod
  def from_records(cls, cfg: CampaignConfig, records: Sequence[TrialRecord]) -> CampaignReport:
    """Fold trial records, in trial order, into a report."""
    keys = [sides_key(statement, mode) for statement in CAMPAIGN_STATEMENTS for mode in cfg.modes]
    totals = {key: {status.value: 0 for status in SideStatus} for key in keys}
    finite_margins: dict[str, list[float]] = {key: [] for key in keys}

    ordered = sorted(records, key=lambda r: r.trial_index)
    for record in ordered:
      for key, sides in record.sides.items():
        totals[key][sides.status.value] += 1
        if sides.margin is not None and sides.margin.is_finite:
          finite_margins[key].append(sides.margin.value)

    return cls(
      config=cfg,
      totals=totals,
      margins={key: margin_statistics(values) for key, values in finite_margins.items()},
      counterexamples=[record for record in ordered if record.has_failure],
      rejection_count=sum(record.rejections for record in ordered),
      quadrature=QuadratureStats.from_records(ordered),
      outside_hypotheses=sum(1 for record in ordered if record.admissibility.outside_hypotheses),
    )

  def to_dict(self) -> dict[str, Any]:
    """JSON-friendly representation; contains no timings."""
    return {
      'config': self.config.to_dict(),
      'totals': self.totals,
      'margins': self.margins,
      'counterexamples': [record.to_dict() for record in self.counterexamples],
      'rejection_count': self.rejection_count,
      'rejection_rate': self.rejection_rate,
      'quadrature': self.quadrature.to_dict(),
      'outside_hypotheses': self.outside_hypotheses,
    }

  @classmethod
  def from_dict(cls, data: dict[str, Any]) -> CampaignReport:
    """Inverse of ``to_dict``."""
    return cls(
      config=CampaignConfig.from_dict(data['config']),
      totals=data['totals'],
      margins=data['margins'],
      counterexamples=[TrialRecord.from_dict(record) for record in data['counterexamples']],
      rejection_count=data['rejection_count'],
      quadrature=QuadratureStats.from_dict(data['quadrature']),
      outside_hypotheses=data.get('outside_hypotheses', 0),
    )


def run_trials(
  cfg: CampaignConfig, workers: int = 1, progress: ProgressCallback | None = None
) -> list[TrialRecord]:
  """Run every trial of a campaign and return the records in trial order.

  :param workers: Process count; 1 runs in-process. Results do not depend on it.
  :param progress: Called with (completed, total) after each trial
  """
  if workers < 1:
    raise ValueError(f'workers must be at least 1, got {workers!r}')

  logger.info('campaign: %d trials, seed=%d, workers=%d', cfg.trials, cfg.seed, workers)
  indices = range(cfg.trials)
  records: list[TrialRecord] = []

  if workers == 1:
    results = map(partial(run_trial, cfg), indices)
    executor = None
  else:
    executor = ProcessPoolExecutor(max_workers=workers)
    chunksize = max(1, cfg.trials // (workers * 8))
    results = executor.map(partial(run_trial, cfg), indices, chunksize=chunksize)

  try:
    for record in results:
      records.append(record)
      if progress is not None:
        progress(len(records), cfg.trials)
  finally:
    if executor is not None:
      executor.shutdown(cancel_futures=True)

  return records


def fuzz_campaign(
  cfg: CampaignConfig, workers: int = 1, progress: ProgressCallback | None = None
) -> CampaignReport:
  """Run a campaign and aggregate it.

  The report is a pure function of ``cfg``: per-trial seeds derive from
  (seed, trial_index) and the fold is ordered by trial index.
  """
  report = CampaignReport.from_records(cfg, run_trials(cfg, workers, progress))
  logger.info(
    'campaign done: %d counterexamples, %d rejections, %d quadrature failures',
    report.fails,
    report.rejection_count,
    report.quadrature.failures,
  )
  return report
