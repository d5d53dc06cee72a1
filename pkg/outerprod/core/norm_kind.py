"""Norm selection and evaluation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from outerprod.errors import ConfigurationError

from .vector import Vector


class NormTag(Enum):
  """Supported norm families."""

  EUCLIDEAN = 'l2'
  ONE = 'l1'
  INFINITY = 'linf'
  P = 'lp'


@dataclass(frozen=True)
class NormKind:
  """A vector norm: euclidean, one, infinity, or a general p-norm with p > 1."""

  tag: NormTag = NormTag.EUCLIDEAN
  p: float | None = None

  def __post_init__(self):
    """Validate the p parameter against the tag."""
    if self.tag is NormTag.P:
      if self.p is None or not math.isfinite(self.p) or self.p <= 1:
        raise ConfigurationError(f'p-norm requires finite p > 1, got {self.p!r}', 'norm')
    elif self.p is not None:
      raise ConfigurationError(f'{self.tag.value} norm takes no p parameter', 'norm')

  @classmethod
  def euclidean(cls) -> NormKind:
    """The default norm."""
    return cls(NormTag.EUCLIDEAN)

  @classmethod
  def parse(cls, text: str) -> NormKind:
    """Parse ``l2``, ``l1``, ``linf`` or ``lp:<p>``.

    :raises ConfigurationError: On unknown tags or an invalid p
    """
    label = text.strip().lower()
    result: NormKind

    if label.startswith('lp:'):
      try:
        p = float(label[3:])
      except ValueError as e:
        raise ConfigurationError(f'invalid p in {text!r}', 'norm') from e
      result = cls(NormTag.P, p)
    elif label in ('l2', 'l1', 'linf'):
      result = cls(NormTag(label))
    else:
      raise ConfigurationError(f"unknown norm {text!r} (choose l2, l1, linf or lp:<p>)", 'norm')

    return result

  @property
  def order(self) -> float:
    """The ``ord`` argument understood by ``numpy.linalg.norm``."""
    orders = {NormTag.EUCLIDEAN: 2.0, NormTag.ONE: 1.0, NormTag.INFINITY: math.inf}
    return orders.get(self.tag, self.p if self.p is not None else 2.0)

  @property
  def label(self) -> str:
    """Wire representation, inverse of ``parse``."""
    return f'lp:{self.p!r}' if self.tag is NormTag.P else self.tag.value

  def __str__(self) -> str:
    return self.label


def norm(v: Vector, kind: NormKind | None = None) -> float:
  """Return the requested norm of v (euclidean by default).

  Coordinates are divided by the largest magnitude before the power sum, so
  any finite p is safe. The result is 0 only for the zero vector.
  """
  kind = kind or NormKind.euclidean()
  coords = v.as_array()
  largest = float(np.max(np.abs(coords)))
  if largest == 0.0 or kind.tag is NormTag.INFINITY:
    return largest
  return largest * float(np.linalg.norm(coords / largest, ord=kind.order))
