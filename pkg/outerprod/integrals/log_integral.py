"""Closed-form integrals of log|t - lam| over real intervals."""

from __future__ import annotations

import math
from dataclasses import dataclass

from outerprod.errors import InputError


@dataclass(frozen=True)
class LogIntegralResult:
  """Value of the integral of log|t - lam| over [alpha, beta] and its pieces.

  ``pieces`` holds one contribution per sub-interval: a single piece when lam
  lies outside the interval, the two halves split at lam otherwise.
  """

  value: float
  singular_interior: bool
  pieces: tuple[float, ...]


def log_abs_primitive(t: float, lam: float) -> float:
  """Antiderivative (t - lam)(log|t - lam| - 1), with value 0 at t = lam."""
  x = t - lam
  return 0.0 if x == 0.0 else x * (math.log(abs(x)) - 1.0)


def integral_log_abs(alpha: float, beta: float, lam: float) -> LogIntegralResult:
  """Exact integral of log|t - lam| for t from alpha to beta (alpha <= beta).

  When lam lies in [alpha, beta] the improper integral is split at lam; each
  half evaluates the primitive at lam through its limit value 0.

  :raises InputError: On non-finite arguments or alpha > beta
  """
  if not all(math.isfinite(value) for value in (alpha, beta, lam)):
    raise InputError(f'endpoints and eigenvalue must be finite, got {(alpha, beta, lam)!r}')
  if alpha > beta:
    raise InputError(f'expected alpha <= beta, got alpha={alpha!r}, beta={beta!r}')

  pieces: tuple[float, ...]
  if alpha <= lam <= beta:
    pieces = (
      log_abs_primitive(lam, lam) - log_abs_primitive(alpha, lam),
      log_abs_primitive(beta, lam) - log_abs_primitive(lam, lam),
    )
  else:
    pieces = (log_abs_primitive(beta, lam) - log_abs_primitive(alpha, lam),)

  return LogIntegralResult(
    value=math.fsum(pieces),
    singular_interior=alpha < lam < beta,
    pieces=pieces,
  )


def integral_abs(alpha: float, beta: float, lam: float) -> float:
  """Exact integral of |t - lam| for t from alpha to beta (alpha <= beta)."""
  if lam <= alpha:
    result = ((beta - lam) ** 2 - (alpha - lam) ** 2) / 2
  elif lam >= beta:
    result = ((lam - alpha) ** 2 - (lam - beta) ** 2) / 2
  else:
    result = ((lam - alpha) ** 2 + (beta - lam) ** 2) / 2
  return result
