"""The outer product (a; b): summed log-distance integrals over the spectrum of a b^T."""

from __future__ import annotations

import math
from dataclasses import dataclass

from outerprod.core.norm_kind import NormKind, norm
from outerprod.core.vector import Vector, require_same_dim
from outerprod.spectrum.rank_one import SpectrumMode, SpectrumMultiset, rank_one_spectrum

from .log_integral import LogIntegralResult, integral_log_abs


@dataclass(frozen=True)
class OrientedInterval:
  """Integration limits [lo, hi] with the orientation sign of ||a|| -> ||b||."""

  norm_a: float
  norm_b: float

  @property
  def lo(self) -> float:
    return min(self.norm_a, self.norm_b)

  @property
  def hi(self) -> float:
    return max(self.norm_a, self.norm_b)

  @property
  def sign(self) -> float:
    """+1 when ||a|| < ||b||, -1 when ||a|| > ||b||, 0 when equal."""
    return float((self.norm_b > self.norm_a) - (self.norm_b < self.norm_a))

  @classmethod
  def of(cls, a: Vector, b: Vector, kind: NormKind | None = None) -> OrientedInterval:
    return cls(norm(a, kind), norm(b, kind))


def outer_product_terms(
  spectrum: SpectrumMultiset, interval: OrientedInterval
) -> list[tuple[float, int, LogIntegralResult]]:
  """Unsigned per-eigenvalue integrals over [lo, hi]: (eigenvalue, multiplicity, integral)."""
  return [
    (lam, multiplicity, integral_log_abs(interval.lo, interval.hi, lam))
    for lam, multiplicity in spectrum.entries
  ]


def outer_product(
  a: Vector,
  b: Vector,
  kind: NormKind | None = None,
  mode: SpectrumMode = SpectrumMode.MULTISET,
) -> float:
  """(a; b) = sum over Spec(a b^T) of the integral of log|t - lam| from ||a|| to ||b||.

  The integral is oriented: swapping the limits negates it, so
  (a; b) + (b; a) == 0 holds exactly, and (a; a) == 0.

  :raises InputError: If the dimensions differ
  """
  require_same_dim(a, b)
  interval = OrientedInterval.of(a, b, kind)
  result = 0.0

  if interval.sign != 0.0:
    terms = outer_product_terms(rank_one_spectrum(a, b, mode), interval)
    result = interval.sign * math.fsum(mult * integral.value for _, mult, integral in terms)

  return result
