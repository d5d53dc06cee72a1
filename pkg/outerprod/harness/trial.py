"""One campaign trial: sample a pair, evaluate every statement, spot-check quadrature."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Any

from outerprod.bounds.inequality_sides import (
  CAMPAIGN_STATEMENTS,
  InequalitySides,
  SideStatus,
  Statement,
)
from outerprod.bounds.statements import evaluate_statement
from outerprod.core.admissibility import AdmissibilityReport, check_admissible
from outerprod.core.norm_kind import NormKind, norm
from outerprod.core.vector import Vector
from outerprod.errors import QuadratureError, describe
from outerprod.integrals.outer_product import outer_product
from outerprod.integrals.quadrature import logdet_quadrature, roots_near_interval
from outerprod.spectrum.rank_one import SpectrumMode

from .campaign_config import CampaignConfig
from .sampler import sample_admissible_pair
from .seeding import derive_sub_seed

logger = logging.getLogger(__name__)


def sides_key(statement: Statement, mode: SpectrumMode) -> str:
  """Key of one statement/mode evaluation inside a record, e.g. ``theorem2:multiset``."""
  return f'{statement.value}:{mode.value}'


@dataclass(frozen=True)
class QuadratureCheck:
  """Outcome of comparing the closed form with the log-determinant quadrature."""

  closed_form: float
  quadrature: float | None
  discrepancy: float | None
  singular: bool
  error: dict[str, str] | None = None

  @property
  def failed(self) -> bool:
    return self.error is not None

  def to_dict(self) -> dict[str, Any]:
    return {
      'closed_form': self.closed_form,
      'quadrature': self.quadrature,
      'discrepancy': self.discrepancy,
      'singular': self.singular,
      'error': self.error,
    }

  @classmethod
  def from_dict(cls, data: dict[str, Any]) -> QuadratureCheck:
    return cls(**data)


@dataclass(frozen=True)
class TrialRecord:
  """Everything needed to reproduce and audit one trial.

  ``wall_time`` is excluded from equality and serialization so records stay
  reproducible bit for bit.
  """

  trial_index: int
  sub_seed: int
  a: Vector
  b: Vector
  admissibility: AdmissibilityReport
  sides: dict[str, InequalitySides]
  rejections: int = 0
  quadrature_check: QuadratureCheck | None = None
  wall_time: float = field(default=0.0, compare=False)

  @property
  def dim(self) -> int:
    return self.a.dim

  @property
  def quadrature_checked(self) -> bool:
    return self.quadrature_check is not None

  @property
  def failing_keys(self) -> list[str]:
    """Keys of every statement/mode whose status is ``fails``."""
    return [key for key, sides in self.sides.items() if sides.status is SideStatus.FAILS]

  @property
  def has_failure(self) -> bool:
    return bool(self.failing_keys)

  def to_dict(self) -> dict[str, Any]:
    """JSON-friendly representation (timing excluded)."""
    return {
      'trial_index': self.trial_index,
      'sub_seed': self.sub_seed,
      'a': self.a.to_list(),
      'b': self.b.to_list(),
      'admissibility': self.admissibility.to_dict(),
      'sides': {key: sides.to_dict() for key, sides in self.sides.items()},
      'rejections': self.rejections,
      'quadrature_checked': self.quadrature_checked,
      'quadrature_check': (
        None if self.quadrature_check is None else self.quadrature_check.to_dict()
      ),
    }

  @classmethod
  def from_dict(cls, data: dict[str, Any]) -> TrialRecord:
    """Inverse of ``to_dict``."""
    check = data.get('quadrature_check')
    return cls(
      trial_index=data['trial_index'],
      sub_seed=data['sub_seed'],
      a=Vector.from_iterable(data['a']),
      b=Vector.from_iterable(data['b']),
      admissibility=AdmissibilityReport.from_dict(data['admissibility']),
      sides={key: InequalitySides.from_dict(value) for key, value in data['sides'].items()},
      rejections=data.get('rejections', 0),
      quadrature_check=None if check is None else QuadratureCheck.from_dict(check),
    )


def evaluate_all_sides(
  a: Vector,
  b: Vector,
  kind: NormKind | None,
  modes: tuple[SpectrumMode, ...],
  relax_norm_floor: bool = False,
) -> dict[str, InequalitySides]:
  """Evaluate every campaign statement under every mode, in a fixed key order."""
  return {
    sides_key(statement, mode): evaluate_statement(statement, a, b, kind, mode, relax_norm_floor)
    for statement in CAMPAIGN_STATEMENTS
    for mode in modes
  }


def spot_check_quadrature(a: Vector, b: Vector, cfg: CampaignConfig) -> QuadratureCheck:
  """Compare the multiset outer product with the quadrature oracle, recording failures."""
  closed_form = outer_product(a, b, cfg.norm_kind, SpectrumMode.MULTISET)
  try:
    result = logdet_quadrature(a, b, cfg.norm_kind, cfg.quadrature)
  except QuadratureError as e:
    logger.warning('quadrature spot check failed: %s', e)
    alpha, beta = norm(a, cfg.norm_kind), norm(b, cfg.norm_kind)
    singular = bool(roots_near_interval(a, b, alpha, beta, cfg.quadrature.singularity_margin))
    check = QuadratureCheck(closed_form, None, None, singular=singular, error=describe(e))
  else:
    check = QuadratureCheck(
      closed_form, result.value, abs(result.value - closed_form), singular=result.singular
    )
  return check


def run_trial(
  cfg: CampaignConfig, trial_index: int, pair: tuple[Vector, Vector] | None = None
) -> TrialRecord:
  """Run one trial.

  :param cfg: Campaign configuration
  :param trial_index: Position in the campaign; with ``cfg.seed`` it fixes the sample
  :param pair: Evaluate this pair instead of sampling one
  :raises HypothesisError: If an injected pair is not admissible
  """
  started = time.perf_counter()
  sub_seed = derive_sub_seed(cfg.seed, trial_index)

  if pair is None:
    outcome = sample_admissible_pair(
      sub_seed, cfg.dims, cfg.coord_scale, cfg.norm_kind, cfg.relax_norm_floor
    )
    a, b, rejections = outcome.a, outcome.b, outcome.rejections
  else:
    (a, b), rejections = pair, 0

  sides = evaluate_all_sides(a, b, cfg.norm_kind, cfg.modes, cfg.relax_norm_floor)
  check = None
  if trial_index % cfg.check_quadrature_every == 0:
    check = spot_check_quadrature(a, b, cfg)

  record = TrialRecord(
    trial_index=trial_index,
    sub_seed=sub_seed,
    a=a,
    b=b,
    admissibility=check_admissible(a, b, cfg.norm_kind),
    sides=sides,
    rejections=rejections,
    quadrature_check=check,
    wall_time=time.perf_counter() - started,
  )
  if record.has_failure:
    logger.info('trial %d fails %s', trial_index, ', '.join(record.failing_keys))
  return record
