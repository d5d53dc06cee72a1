"""Adaptive Simpson quadrature, used as an independent oracle for the closed forms."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass, fields
from itertools import pairwise
from typing import Any

from outerprod.core.norm_kind import NormKind, norm
from outerprod.core.vector import Vector, require_same_dim
from outerprod.errors import ConfigurationError, InputError, QuadratureError
from outerprod.spectrum.determinant import MAX_ELIMINATION_DIM, det_rank_one_shift

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadratureConfig:
  """Tolerances and recursion budget for adaptive Simpson quadrature."""

  abs_tol: float = 1e-10
  rel_tol: float = 1e-10
  max_depth: int = 50
  singularity_margin: float = 1e-12

  def __post_init__(self):
    """Reject non-positive tolerances and shallow depth budgets."""
    for name in ('abs_tol', 'rel_tol', 'singularity_margin'):
      value = getattr(self, name)
      if not (math.isfinite(value) and value > 0):
        raise ConfigurationError(f'must be a positive finite number, got {value!r}', name)
    if self.max_depth < 10:
      raise ConfigurationError(f'must be at least 10, got {self.max_depth!r}', 'max_depth')

  @classmethod
  def from_kwargs(cls, **kwargs) -> QuadratureConfig:
    """Build from keyword arguments, ignoring unknown keys and None values."""
    names = {f.name for f in fields(cls)}
    return cls(**{k: v for k, v in kwargs.items() if k in names and v is not None})

  def to_dict(self) -> dict[str, Any]:
    """JSON-friendly representation."""
    return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class QuadratureResult:
  """Quadrature estimate with its accumulated error bound."""

  value: float
  error_bound: float
  evaluations: int = 0
  singular: bool = False


def adaptive_simpson(
  f: Callable[[float], float], a: float, b: float, cfg: QuadratureConfig | None = None
) -> QuadratureResult:
  """Integrate f over [a, b] with recursive Simpson subdivision.

  A sub-interval is accepted when its Richardson error estimate is within
  max(local absolute tolerance, rel_tol * |local estimate|); the absolute
  tolerance halves at each level.

  :raises QuadratureError: If some branch reaches max_depth unconverged
  """
  cfg = cfg or QuadratureConfig()
  if a == b:
    return QuadratureResult(0.0, 0.0)
  if a > b:
    flipped = adaptive_simpson(f, b, a, cfg)
    return QuadratureResult(-flipped.value, flipped.error_bound, flipped.evaluations)

  state = {'evaluations': 0, 'exhausted': False}

  def evaluate(t: float) -> float:
    state['evaluations'] += 1
    return f(t)

  def simpson(fa: float, fm: float, fb: float, width: float) -> float:
    return width / 6.0 * (fa + 4.0 * fm + fb)

  def refine(
    lo: float, hi: float, flo: float, fmid: float, fhi: float, whole: float, tol: float, depth: int
  ) -> tuple[float, float]:
    mid = (lo + hi) / 2.0
    flm = evaluate((lo + mid) / 2.0)
    frm = evaluate((mid + hi) / 2.0)
    left = simpson(flo, flm, fmid, mid - lo)
    right = simpson(fmid, frm, fhi, hi - mid)
    combined = left + right
    delta = (combined - whole) / 15.0

    if abs(delta) <= max(tol, cfg.rel_tol * abs(combined)):
      result = (combined + delta, abs(delta))
    elif depth >= cfg.max_depth:
      state['exhausted'] = True
      result = (combined + delta, abs(delta))
    else:
      left_value, left_err = refine(lo, mid, flo, flm, fmid, left, tol / 2.0, depth + 1)
      right_value, right_err = refine(mid, hi, fmid, frm, fhi, right, tol / 2.0, depth + 1)
      result = (left_value + right_value, left_err + right_err)

    return result

  fa, fm, fb = evaluate(a), evaluate((a + b) / 2.0), evaluate(b)
  value, error = refine(a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), cfg.abs_tol, 0)

  if state['exhausted']:
    raise QuadratureError(value, error, cfg.max_depth)

  return QuadratureResult(value, error, state['evaluations'])


def integrate_with_singular_ends(
  f: Callable[[float], float],
  lo: float,
  hi: float,
  left_singular: bool,
  right_singular: bool,
  cfg: QuadratureConfig,
) -> QuadratureResult:
  """Integrate f over [lo, hi] where f may have a log singularity at either end.

  A singular end is moved inward by ``singularity_margin`` and the remaining
  interval is mapped through t = end + L s^2, which turns the log singularity
  into an s log s behavior Simpson can resolve. The excised window is dropped.
  """
  margin = cfg.singularity_margin
  result: QuadratureResult

  if left_singular and right_singular:
    middle = (lo + hi) / 2.0
    first = integrate_with_singular_ends(f, lo, middle, True, False, cfg)
    second = integrate_with_singular_ends(f, middle, hi, False, True, cfg)
    result = QuadratureResult(
      first.value + second.value,
      first.error_bound + second.error_bound,
      first.evaluations + second.evaluations,
      singular=True,
    )
  elif left_singular or right_singular:
    length = hi - lo - margin
    if length <= 0:
      result = QuadratureResult(0.0, 0.0, singular=True)
    else:
      start = lo + margin if left_singular else hi - margin
      direction = 1.0 if left_singular else -1.0

      def mapped(s: float) -> float:
        return 2.0 * length * s * f(start + direction * length * s * s)

      inner = adaptive_simpson(mapped, 0.0, 1.0, cfg)
      result = QuadratureResult(inner.value, inner.error_bound, inner.evaluations, singular=True)
  else:
    result = adaptive_simpson(f, lo, hi, cfg)

  return result


def roots_near_interval(
  a: Vector, b: Vector, alpha: float, beta: float, margin: float
) -> list[float]:
  """Roots of det(a b^T - t I) within ``margin`` of [alpha, beta], clamped into it."""
  roots = {a.dot(b)} | ({0.0} if a.dim > 1 else set())
  return sorted(
    min(max(root, alpha), beta) for root in roots if alpha - margin <= root <= beta + margin
  )


def logdet_quadrature(
  a: Vector, b: Vector, kind: NormKind | None = None, cfg: QuadratureConfig | None = None
) -> QuadratureResult:
  """Quadrature of t -> log|det(a b^T - t I)| over [||a||, ||b||].

  The interval is pre-split at every root of the determinant (0 and <a,b>)
  lying within ``singularity_margin`` of [||a||, ||b||].

  :raises InputError: If ||a|| >= ||b|| or the dimension exceeds 16
  :raises QuadratureError: If any piece fails to converge
  """
  cfg = cfg or QuadratureConfig()
  n = require_same_dim(a, b)
  if n > MAX_ELIMINATION_DIM:
    raise InputError(f'dimension {n} exceeds quadrature limit {MAX_ELIMINATION_DIM}')

  alpha, beta = norm(a, kind), norm(b, kind)
  if not alpha < beta:
    raise InputError(f'expected ||a|| < ||b||, got {alpha!r} and {beta!r}')

  near = roots_near_interval(a, b, alpha, beta, cfg.singularity_margin)
  points = sorted({alpha, beta, *near})

  def integrand(t: float) -> float:
    return math.log(abs(det_rank_one_shift(a, b, t)))

  value, error, evaluations, singular = 0.0, 0.0, 0, bool(near)
  failed: QuadratureError | None = None
  for lo, hi in pairwise(points):
    try:
      piece = integrate_with_singular_ends(integrand, lo, hi, lo in near, hi in near, cfg)
    except QuadratureError as e:
      failed = e
      piece = QuadratureResult(e.estimate, e.error_bound)
    value += piece.value
    error += piece.error_bound
    evaluations += piece.evaluations

  if failed is not None:
    logger.warning('log-determinant quadrature did not converge on [%r, %r]', alpha, beta)
    raise QuadratureError(value, error, cfg.max_depth)

  logger.debug('log-determinant quadrature used %d evaluations', evaluations)
  return QuadratureResult(value, error, evaluations, singular)


def adaptive_logdet_integral(
  a: Vector, b: Vector, kind: NormKind | None = None, cfg: QuadratureConfig | None = None
) -> float:
  """Value of ``logdet_quadrature``."""
  return logdet_quadrature(a, b, kind, cfg).value
