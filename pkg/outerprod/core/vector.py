"""Finite-dimensional real coordinate vectors."""

from __future__ import annotations

import json
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from outerprod.errors import InputError


@dataclass(frozen=True)
class Vector:
  """Ordered, finite real coordinates.

  Vectors are immutable; arithmetic helpers return new instances.
  """

  coords: tuple[float, ...]

  def __post_init__(self):
    """Normalize coordinates to floats and reject empty or non-finite input."""
    try:
      coords = tuple(float(value) for value in self.coords)
    except OverflowError as e:
      raise InputError('vector coordinate too large for a binary64 float') from e
    if not coords:
      raise InputError('vector must have at least one coordinate')
    if not all(math.isfinite(value) for value in coords):
      raise InputError(f'vector coordinates must be finite, got {list(coords)!r}')
    object.__setattr__(self, 'coords', coords)

  @classmethod
  def of(cls, *values: float) -> Vector:
    """Build a vector from positional coordinates."""
    return cls(tuple(values))

  @classmethod
  def from_iterable(cls, values: Iterable[float]) -> Vector:
    """Build a vector from any iterable of numbers (lists, numpy arrays)."""
    return cls(tuple(values))

  @classmethod
  def from_json(cls, text: str, argument: str = 'vector') -> Vector:
    """Parse a JSON array of numbers.

    :param text: JSON text such as ``"[2, 0]"``
    :param argument: Argument name reported in error messages
    :raises InputError: If the text is not a non-empty array of finite numbers
    """
    try:
      payload = json.loads(text)
    except json.JSONDecodeError as e:
      raise InputError(f'malformed JSON array {text!r} ({e.msg})', argument) from e

    if not isinstance(payload, list) or not all(
      isinstance(value, int | float) and not isinstance(value, bool) for value in payload
    ):
      raise InputError(f'expected a JSON array of numbers, got {text!r}', argument)

    try:
      result = cls.from_iterable(payload)
    except InputError as e:
      raise InputError(str(e), argument) from e

    return result

  @classmethod
  def basis(cls, index: int, dim: int) -> Vector:
    """Return the standard basis vector e_index in dimension dim."""
    return cls(tuple(1.0 if i == index else 0.0 for i in range(dim)))

  @property
  def dim(self) -> int:
    """Number of coordinates."""
    return len(self.coords)

  def as_array(self) -> np.ndarray:
    """Return the coordinates as a float64 numpy array."""
    return np.asarray(self.coords, dtype=np.float64)

  def scaled(self, factor: float) -> Vector:
    """Return factor * self."""
    return Vector(tuple(factor * value for value in self.coords))

  def permuted(self, order: Sequence[int]) -> Vector:
    """Return the vector with coordinates reordered by ``order``."""
    return Vector(tuple(self.coords[i] for i in order))

  def dot(self, other: Vector) -> float:
    """Inner product with compensated summation of the coordinate products.

    :raises InputError: If the dimensions differ
    """
    require_same_dim(self, other)
    return math.fsum(x * y for x, y in zip(self.coords, other.coords, strict=True))

  def to_list(self) -> list[float]:
    """JSON-friendly coordinate list."""
    return list(self.coords)


def require_same_dim(a: Vector, b: Vector) -> int:
  """Return the shared dimension of a and b.

  :raises InputError: If the dimensions differ
  """
  if a.dim != b.dim:
    raise InputError(f'dimension mismatch: a has {a.dim} coordinates, b has {b.dim}')
  return a.dim
