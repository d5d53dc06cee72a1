"""Both sides of an inequality statement, its margin, and its classification."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any

from outerprod.errors import ConfigurationError
from outerprod.spectrum.rank_one import SpectrumMode

from .extended_real import ExtendedKind, ExtendedReal


class Statement(Enum):
  """Inequality statements that can be evaluated on a pair (a, b)."""

  PROP_KEY = 'prop_key'
  THEOREM1 = 'theorem1'
  THEOREM2 = 'theorem2'
  JENSEN_STEP = 'jensen_step'


CAMPAIGN_STATEMENTS = (Statement.PROP_KEY, Statement.THEOREM1, Statement.THEOREM2)


class SideStatus(Enum):
  """Outcome of comparing lhs against rhs."""

  HOLDS = 'holds'
  FAILS = 'fails'
  DEGENERATE_LHS_NEG_INF = 'degenerate_lhs_neg_inf'
  RHS_UNDEFINED = 'rhs_undefined'


@dataclass(frozen=True)
class InequalitySides:
  """lhs <= rhs evaluated on one pair under one spectrum mode.

  ``margin`` is rhs - lhs in natural-log units; a degenerate lhs of -inf gives
  a margin of +inf and counts as holding.
  """

  statement: Statement
  mode: SpectrumMode
  lhs: ExtendedReal
  rhs: float | None
  margin: ExtendedReal | None
  status: SideStatus
  count_multiset: int
  count_set: int
  outside_hypotheses: bool = False

  @classmethod
  def classify(
    cls,
    statement: Statement,
    mode: SpectrumMode,
    lhs: ExtendedReal,
    rhs: float | None,
    counts: dict[str, int],
    outside_hypotheses: bool = False,
  ) -> InequalitySides:
    """Compute margin and status from the two sides."""
    margin: ExtendedReal | None = None
    if rhs is None:
      status = SideStatus.RHS_UNDEFINED
    else:
      margin = rhs - lhs
      if lhs.kind is ExtendedKind.NEG_INFINITY:
        status = SideStatus.DEGENERATE_LHS_NEG_INF
      elif lhs <= rhs:
        status = SideStatus.HOLDS
      else:
        status = SideStatus.FAILS

    return cls(
      statement=statement,
      mode=mode,
      lhs=lhs,
      rhs=rhs,
      margin=margin,
      status=status,
      count_multiset=counts[SpectrumMode.MULTISET.value],
      count_set=counts[SpectrumMode.SET.value],
      outside_hypotheses=outside_hypotheses,
    )

  @property
  def holds(self) -> bool:
    """True for ``holds`` and for the vacuous ``degenerate_lhs_neg_inf`` case."""
    return self.status in (SideStatus.HOLDS, SideStatus.DEGENERATE_LHS_NEG_INF)

  def in_log_base(self, base: float) -> InequalitySides:
    """Re-express both sides and the margin with logarithms in ``base``.

    Every term is linear in the logarithm and the scale 1/ln(base) is
    positive for base > 1, so the status is unchanged.
    """
    if not (math.isfinite(base) and base > 1):
      raise ConfigurationError(f'must be finite and > 1, got {base!r}', 'log_base')
    scale = 1.0 / math.log(base)

    def rescale(value: ExtendedReal) -> ExtendedReal:
      return ExtendedReal.finite(value.value * scale) if value.is_finite else value

    return InequalitySides(
      statement=self.statement,
      mode=self.mode,
      lhs=rescale(self.lhs),
      rhs=None if self.rhs is None else self.rhs * scale,
      margin=None if self.margin is None else rescale(self.margin),
      status=self.status,
      count_multiset=self.count_multiset,
      count_set=self.count_set,
      outside_hypotheses=self.outside_hypotheses,
    )

  def to_dict(self) -> dict[str, Any]:
    """JSON-friendly representation."""
    return {
      'statement': self.statement.value,
      'mode': self.mode.value,
      'lhs': self.lhs.to_json(),
      'rhs': self.rhs,
      'margin': None if self.margin is None else self.margin.to_json(),
      'status': self.status.value,
      'count_multiset': self.count_multiset,
      'count_set': self.count_set,
      'outside_hypotheses': self.outside_hypotheses,
    }

  @classmethod
  def from_dict(cls, data: dict[str, Any]) -> InequalitySides:
    """Inverse of ``to_dict``."""
    return cls(
      statement=Statement(data['statement']),
      mode=SpectrumMode(data['mode']),
      lhs=ExtendedReal.from_json(data['lhs']),
      rhs=data['rhs'],
      margin=None if data['margin'] is None else ExtendedReal.from_json(data['margin']),
      status=SideStatus(data['status']),
      count_multiset=data['count_multiset'],
      count_set=data['count_set'],
      outside_hypotheses=data.get('outside_hypotheses', False),
    )
