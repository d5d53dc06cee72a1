"""Extended reals: finite values plus the two infinities, with total ordering."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import total_ordering


class ExtendedKind(Enum):
  """Which part of the extended real line a value lives on."""

  NEG_INFINITY = 'neg_infinity'
  FINITE = 'finite'
  POS_INFINITY = 'pos_infinity'


_RANK = {ExtendedKind.NEG_INFINITY: -1, ExtendedKind.FINITE: 0, ExtendedKind.POS_INFINITY: 1}
_WIRE = {ExtendedKind.NEG_INFINITY: '-inf', ExtendedKind.POS_INFINITY: 'inf'}


@total_ordering
@dataclass(frozen=True)
class ExtendedReal:
  """A real number or +/- infinity.

  -inf is below every finite value and absorbs finite addition; (-inf) + (+inf)
  is undefined and raises ``ArithmeticError``.
  """

  kind: ExtendedKind
  value: float = 0.0

  @classmethod
  def finite(cls, value: float) -> ExtendedReal:
    if not math.isfinite(value):
      raise ValueError(f'finite() requires a finite float, got {value!r}')
    return cls(ExtendedKind.FINITE, float(value))

  @classmethod
  def neg_infinity(cls) -> ExtendedReal:
    return cls(ExtendedKind.NEG_INFINITY)

  @classmethod
  def pos_infinity(cls) -> ExtendedReal:
    return cls(ExtendedKind.POS_INFINITY)

  @classmethod
  def from_float(cls, value: float) -> ExtendedReal:
    """Map a float (possibly +/-inf) onto the extended reals; NaN is rejected."""
    if math.isnan(value):
      raise ValueError('NaN has no extended-real representation')
    if math.isfinite(value):
      result = cls.finite(value)
    else:
      result = cls.pos_infinity() if value > 0 else cls.neg_infinity()
    return result

  @property
  def is_finite(self) -> bool:
    return self.kind is ExtendedKind.FINITE

  def to_float(self) -> float:
    """The equivalent IEEE value (+/-inf for the infinite kinds)."""
    infinities = {ExtendedKind.NEG_INFINITY: -math.inf, ExtendedKind.POS_INFINITY: math.inf}
    return infinities.get(self.kind, self.value)

  def _coerce(self, other: ExtendedReal | float | int) -> ExtendedReal:
    return other if isinstance(other, ExtendedReal) else ExtendedReal.from_float(float(other))

  def __add__(self, other: ExtendedReal | float | int) -> ExtendedReal:
    rhs = self._coerce(other)
    if self.is_finite and rhs.is_finite:
      result = ExtendedReal.finite(self.value + rhs.value)
    elif {self.kind, rhs.kind} == {ExtendedKind.NEG_INFINITY, ExtendedKind.POS_INFINITY}:
      raise ArithmeticError('(-inf) + (+inf) is undefined')
    else:
      result = self if not self.is_finite else rhs
    return result

  __radd__ = __add__

  def __neg__(self) -> ExtendedReal:
    flipped = {
      ExtendedKind.NEG_INFINITY: ExtendedKind.POS_INFINITY,
      ExtendedKind.POS_INFINITY: ExtendedKind.NEG_INFINITY,
      ExtendedKind.FINITE: ExtendedKind.FINITE,
    }
    return ExtendedReal(flipped[self.kind], -self.value if self.is_finite else 0.0)

  def __sub__(self, other: ExtendedReal | float | int) -> ExtendedReal:
    return self + (-self._coerce(other))

  def __rsub__(self, other: ExtendedReal | float | int) -> ExtendedReal:
    return self._coerce(other) + (-self)

  def __lt__(self, other: object) -> bool:
    if not isinstance(other, ExtendedReal | float | int):
      return NotImplemented
    rhs = self._coerce(other)
    if self.is_finite and rhs.is_finite:
      result = self.value < rhs.value
    else:
      result = _RANK[self.kind] < _RANK[rhs.kind]
    return result

  def __eq__(self, other: object) -> bool:
    if not isinstance(other, ExtendedReal | float | int):
      return NotImplemented
    rhs = self._coerce(other)
    return self.kind is rhs.kind and (not self.is_finite or self.value == rhs.value)

  def __hash__(self) -> int:
    return hash(self.to_float())

  def __repr__(self) -> str:
    return repr(self.value) if self.is_finite else _WIRE[self.kind]

  def to_json(self) -> float | str:
    """Finite values as numbers, infinities as ``"-inf"`` / ``"inf"``."""
    return self.value if self.is_finite else _WIRE[self.kind]

  @classmethod
  def from_json(cls, data: float | int | str) -> ExtendedReal:
    """Inverse of ``to_json``."""
    if isinstance(data, str):
      lookup = {wire: kind for kind, wire in _WIRE.items()}
      if data not in lookup:
        raise ValueError(f'unknown extended-real literal {data!r}')
      result = cls(lookup[data])
    else:
      result = cls.finite(float(data))
    return result
