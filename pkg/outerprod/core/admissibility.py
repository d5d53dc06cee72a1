"""Standing hypotheses of the bound statements: ||b|| > ||a|| > 1 and the spectrum bound."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from outerprod.spectrum.rank_one import SpectrumMode, rank_one_spectrum

from .norm_kind import NormKind, norm
from .vector import Vector, require_same_dim


class Hypothesis(Enum):
  """Individually checkable hypotheses."""

  NORM_ORDER = 'NormOrder'
  NORM_FLOOR = 'NormFloor'
  SPECTRUM_BOUND = 'SpectrumBound'


@dataclass(frozen=True)
class AdmissibilityReport:
  """Norms, spectrum maximum, and the list of violated hypotheses.

  All comparisons are strict and exact; equality counts as a failure.
  """

  norm_a: float
  norm_b: float
  max_spec: float
  failures: tuple[Hypothesis, ...] = field(default_factory=tuple)

  @property
  def midpoint(self) -> float:
    """(||a|| + ||b||) / 2."""
    return (self.norm_a + self.norm_b) / 2

  def admissible(self, relax_norm_floor: bool = False) -> bool:
    """True when no hypothesis fails (NormFloor ignored when relaxed)."""
    ignored = {Hypothesis.NORM_FLOOR} if relax_norm_floor else set()
    return not [failure for failure in self.failures if failure not in ignored]

  @property
  def outside_hypotheses(self) -> bool:
    """Whether only a relaxed evaluation could accept this pair."""
    return Hypothesis.NORM_FLOOR in self.failures

  def to_dict(self) -> dict[str, Any]:
    """JSON-friendly representation."""
    return {
      'norm_a': self.norm_a,
      'norm_b': self.norm_b,
      'midpoint': self.midpoint,
      'max_spec': self.max_spec,
      'failures': [failure.value for failure in self.failures],
      'admissible': self.admissible(),
    }

  @classmethod
  def from_dict(cls, data: dict[str, Any]) -> AdmissibilityReport:
    """Inverse of ``to_dict``."""
    return cls(
      norm_a=data['norm_a'],
      norm_b=data['norm_b'],
      max_spec=data['max_spec'],
      failures=tuple(Hypothesis(name) for name in data['failures']),
    )


def check_admissible(a: Vector, b: Vector, kind: NormKind | None = None) -> AdmissibilityReport:
  """Evaluate every hypothesis and report all violations.

  :param a: Vector whose norm is the lower integration limit
  :param b: Vector whose norm is the upper integration limit
  :param kind: Norm to use (euclidean by default)
  :raises InputError: If the dimensions differ
  """
  require_same_dim(a, b)
  norm_a, norm_b = norm(a, kind), norm(b, kind)
  max_spec = rank_one_spectrum(a, b, SpectrumMode.MULTISET).max_eigenvalue
  failures = []

  if not norm_b > norm_a:
    failures.append(Hypothesis.NORM_ORDER)
  if not norm_a > 1:
    failures.append(Hypothesis.NORM_FLOOR)
  if not (norm_a + norm_b) / 2 > abs(max_spec):
    failures.append(Hypothesis.SPECTRUM_BOUND)

  return AdmissibilityReport(norm_a, norm_b, max_spec, tuple(failures))
