"""Analytic spectrum of the rank-1 matrix a b^T."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any

from outerprod.core.vector import Vector, require_same_dim


class SpectrumMode(Enum):
  """How eigenvalues are counted: with algebraic multiplicity, or as distinct values."""

  MULTISET = 'multiset'
  SET = 'set'


@dataclass(frozen=True)
class SpectrumMultiset:
  """Eigenvalues with multiplicities.

  In set mode every multiplicity is 1, so ``count`` is the number of distinct
  eigenvalues; in multiset mode ``count`` is the matrix dimension.
  """

  entries: tuple[tuple[float, int], ...]
  mode: SpectrumMode = SpectrumMode.MULTISET

  @property
  def count(self) -> int:
    """The #Spec used by the bound statements under this mode."""
    return sum(multiplicity for _, multiplicity in self.entries)

  @property
  def max_eigenvalue(self) -> float:
    """Largest eigenvalue."""
    return max(value for value, _ in self.entries)

  def eigenvalues(self) -> list[float]:
    """Eigenvalues expanded by multiplicity."""
    return [value for value, multiplicity in self.entries for _ in range(multiplicity)]

  def to_dict(self) -> dict[str, Any]:
    """JSON-friendly representation."""
    return {
      'mode': self.mode.value,
      'count': self.count,
      'entries': [{'eigenvalue': value, 'multiplicity': mult} for value, mult in self.entries],
    }

  @classmethod
  def from_dict(cls, data: dict[str, Any]) -> SpectrumMultiset:
    """Inverse of ``to_dict``."""
    entries = tuple((entry['eigenvalue'], entry['multiplicity']) for entry in data['entries'])
    return cls(entries, SpectrumMode(data['mode']))


def rank_one_spectrum(
  a: Vector, b: Vector, mode: SpectrumMode = SpectrumMode.MULTISET
) -> SpectrumMultiset:
  """Spectrum of a b^T: {<a,b>} plus 0 with multiplicity n-1.

  A zero inner product is only collapsed onto the zero eigenvalue when it is
  exactly 0.0 in floating point.

  :param a: Left factor
  :param b: Right factor
  :param mode: Count with multiplicity or as a set
  :raises InputError: If the dimensions differ
  """
  n = require_same_dim(a, b)
  inner = a.dot(b)
  entries: list[tuple[float, int]]

  if inner == 0.0:
    entries = [(0.0, n)]
  elif n == 1:
    entries = [(inner, 1)]
  else:
    entries = [(inner, 1), (0.0, n - 1)]

  if mode is SpectrumMode.SET:
    entries = [(value, 1) for value, _ in entries]

  return SpectrumMultiset(tuple(entries), mode)


def spectrum_counts(dim: int, inner: float) -> dict[str, int]:
  """#Spec under both modes for a rank-1 product of dimension ``dim``."""
  distinct = 1 if inner == 0.0 or dim == 1 else 2
  return {SpectrumMode.MULTISET.value: dim, SpectrumMode.SET.value: distinct}
