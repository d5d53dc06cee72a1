"""Left- and right-hand sides of the outer-product inequality statements."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from outerprod.core.admissibility import AdmissibilityReport, check_admissible
from outerprod.core.norm_kind import NormKind
from outerprod.core.vector import Vector
from outerprod.errors import HypothesisError, InputError, OracleMismatchError, RhsUndefinedError
from outerprod.integrals.log_integral import integral_abs
from outerprod.integrals.outer_product import outer_product
from outerprod.integrals.quadrature import QuadratureConfig, logdet_quadrature
from outerprod.spectrum.rank_one import (
  SpectrumMode,
  SpectrumMultiset,
  rank_one_spectrum,
  spectrum_counts,
)

from .extended_real import ExtendedReal
from .inequality_sides import InequalitySides, Statement

logger = logging.getLogger(__name__)

NONSINGULAR_ORACLE_RTOL = 1e-8
SINGULAR_ORACLE_ATOL = 1e-4


def min_log_distance(lam: float, alpha: float, beta: float) -> ExtendedReal:
  """Minimum of log|t - lam| over t in [alpha, beta]; -inf when lam lies in the interval.

  :raises InputError: If alpha >= beta
  """
  if not alpha < beta:
    raise InputError(f'expected alpha < beta, got alpha={alpha!r}, beta={beta!r}')

  if alpha <= lam <= beta:
    result = ExtendedReal.neg_infinity()
  else:
    result = ExtendedReal.finite(math.log(min(abs(lam - alpha), abs(lam - beta))))
  return result


def rhs_correction_sum(spec: SpectrumMultiset, s: float) -> float:
  """Sum over the spectrum of log(1 - 2 lam / s), multiplicities per the spectrum's mode.

  :param spec: Spectrum of a b^T
  :param s: ||a|| + ||b||
  :raises RhsUndefinedError: If some log argument is not positive
  """
  terms = []
  for lam, multiplicity in spec.entries:
    argument = 1.0 - 2.0 * lam / s
    if not argument > 0:
      raise RhsUndefinedError(lam, argument)
    terms.append(multiplicity * math.log(argument))
  return math.fsum(terms)


def integrated_rhs(spec: SpectrumMultiset, alpha: float, beta: float) -> float:
  """#Spec (beta - alpha) log((alpha + beta) / 2) + correction sum.

  Shared right-hand side of the key proposition and the determinant theorem.
  """
  s = alpha + beta
  return spec.count * (beta - alpha) * math.log(s / 2) + rhs_correction_sum(spec, s)


def pointwise_rhs(spec: SpectrumMultiset, alpha: float, beta: float) -> float:
  """#Spec log((alpha + beta) / 2) + correction sum / (beta - alpha)."""
  s = alpha + beta
  return spec.count * math.log(s / 2) + rhs_correction_sum(spec, s) / (beta - alpha)


def summed_min_log_distance(spec: SpectrumMultiset, alpha: float, beta: float) -> ExtendedReal:
  """Sum of min_log_distance over the spectrum, weighted by multiplicity."""
  result = ExtendedReal.finite(0.0)
  for lam, multiplicity in spec.entries:
    distance = min_log_distance(lam, alpha, beta)
    result = result + (distance if not distance.is_finite else multiplicity * distance.value)
  return result


def integrated_min_bound(spec: SpectrumMultiset, alpha: float, beta: float) -> ExtendedReal:
  """(beta - alpha) times the summed minimum log distance: a lower bound for (a; b)."""
  summed = summed_min_log_distance(spec, alpha, beta)
  return ExtendedReal.finite((beta - alpha) * summed.value) if summed.is_finite else summed


def mean_abs_distance(lam: float, alpha: float, beta: float) -> float:
  """Average of |t - lam| over [alpha, beta]."""
  return integral_abs(alpha, beta, lam) / (beta - alpha)


@dataclass(frozen=True)
class PairContext:
  """Everything a statement needs about an admissible pair."""

  a: Vector
  b: Vector
  kind: NormKind | None
  mode: SpectrumMode
  report: AdmissibilityReport
  spectrum: SpectrumMultiset
  counts: dict[str, int]

  @property
  def alpha(self) -> float:
    return self.report.norm_a

  @property
  def beta(self) -> float:
    return self.report.norm_b

  @classmethod
  def prepare(
    cls,
    a: Vector,
    b: Vector,
    kind: NormKind | None,
    mode: SpectrumMode,
    relax_norm_floor: bool = False,
  ) -> PairContext:
    """Check admissibility and compute the spectrum.

    :raises HypothesisError: If the pair is not admissible
    """
    report = check_admissible(a, b, kind)
    if not report.admissible(relax_norm_floor):
      raise HypothesisError(report)
    return cls(
      a=a,
      b=b,
      kind=kind,
      mode=mode,
      report=report,
      spectrum=rank_one_spectrum(a, b, mode),
      counts=spectrum_counts(a.dim, a.dot(b)),
    )

  def sides(self, statement: Statement, lhs: ExtendedReal, rhs: float | None) -> InequalitySides:
    return InequalitySides.classify(
      statement, self.mode, lhs, rhs, self.counts, self.report.outside_hypotheses
    )


def _guarded(rhs_of) -> float | None:
  """Evaluate a right-hand side, mapping an undefined log argument to None."""
  try:
    result = rhs_of()
  except RhsUndefinedError as e:
    logger.warning('right-hand side undefined: %s', e)
    result = None
  return result


def theorem1_sides(
  a: Vector,
  b: Vector,
  kind: NormKind | None = None,
  mode: SpectrumMode = SpectrumMode.MULTISET,
  relax_norm_floor: bool = False,
) -> InequalitySides:
  """Summed minimum log distance against the pointwise bound.

  :raises HypothesisError: If the pair is not admissible
  """
  ctx = PairContext.prepare(a, b, kind, mode, relax_norm_floor)
  lhs = summed_min_log_distance(ctx.spectrum, ctx.alpha, ctx.beta)
  rhs = _guarded(lambda: pointwise_rhs(ctx.spectrum, ctx.alpha, ctx.beta))
  return ctx.sides(Statement.THEOREM1, lhs, rhs)


def prop_key_sides(
  a: Vector,
  b: Vector,
  kind: NormKind | None = None,
  mode: SpectrumMode = SpectrumMode.MULTISET,
  relax_norm_floor: bool = False,
) -> InequalitySides:
  """The outer product under ``mode`` against the integrated bound.

  :raises HypothesisError: If the pair is not admissible
  """
  ctx = PairContext.prepare(a, b, kind, mode, relax_norm_floor)
  lhs = ExtendedReal.finite(outer_product(a, b, kind, mode))
  rhs = _guarded(lambda: integrated_rhs(ctx.spectrum, ctx.alpha, ctx.beta))
  return ctx.sides(Statement.PROP_KEY, lhs, rhs)


def theorem2_sides(
  a: Vector,
  b: Vector,
  kind: NormKind | None = None,
  mode: SpectrumMode = SpectrumMode.MULTISET,
  relax_norm_floor: bool = False,
  cross_check: QuadratureConfig | None = None,
) -> InequalitySides:
  """Integral of log|det(a b^T - t I)| against the integrated bound.

  The determinant counts every eigenvalue with multiplicity, so the lhs is the
  multiset outer product whatever ``mode`` is; ``mode`` only selects #Spec in
  the rhs. The quadrature cross-check is opt-in: it runs only when
  ``cross_check`` is given. Campaigns spot-check every
  ``check_quadrature_every`` trials, and the ``bounds`` command checks every
  call with dim <= 16.

  :raises HypothesisError: If the pair is not admissible
  :raises QuadratureError: If the cross-check quadrature fails
  :raises OracleMismatchError: If the cross-check disagrees beyond tolerance
  """
  ctx = PairContext.prepare(a, b, kind, mode, relax_norm_floor)
  closed_form = outer_product(a, b, kind, SpectrumMode.MULTISET)

  if cross_check is not None:
    check_logdet_oracle(a, b, kind, cross_check, closed_form)

  rhs = _guarded(lambda: integrated_rhs(ctx.spectrum, ctx.alpha, ctx.beta))
  return ctx.sides(Statement.THEOREM2, ExtendedReal.finite(closed_form), rhs)


def jensen_step_sides(
  a: Vector,
  b: Vector,
  kind: NormKind | None = None,
  mode: SpectrumMode = SpectrumMode.MULTISET,
  relax_norm_floor: bool = False,
) -> InequalitySides:
  """The outer product against (beta - alpha) * sum of log(mean |t - lam|).

  This is the concavity step that precedes the key proposition; unlike the
  stated bounds it holds on every admissible pair.

  :raises HypothesisError: If the pair is not admissible
  """
  ctx = PairContext.prepare(a, b, kind, mode, relax_norm_floor)
  alpha, beta = ctx.alpha, ctx.beta
  lhs = ExtendedReal.finite(outer_product(a, b, kind, mode))
  rhs = (beta - alpha) * math.fsum(
    multiplicity * math.log(mean_abs_distance(lam, alpha, beta))
    for lam, multiplicity in ctx.spectrum.entries
  )
  return ctx.sides(Statement.JENSEN_STEP, lhs, rhs)


def check_logdet_oracle(
  a: Vector,
  b: Vector,
  kind: NormKind | None,
  cfg: QuadratureConfig,
  closed_form: float | None = None,
) -> float:
  """Compare the multiset outer product with the log-determinant quadrature.

  :return: The absolute discrepancy
  :raises OracleMismatchError: If it exceeds the singular or non-singular tolerance
  """
  if closed_form is None:
    closed_form = outer_product(a, b, kind, SpectrumMode.MULTISET)
  quadrature = logdet_quadrature(a, b, kind, cfg)
  discrepancy = abs(quadrature.value - closed_form)
  tolerance = (
    SINGULAR_ORACLE_ATOL
    if quadrature.singular
    else NONSINGULAR_ORACLE_RTOL * (1.0 + abs(closed_form))
  )
  if discrepancy > tolerance:
    raise OracleMismatchError(closed_form, quadrature.value, tolerance)
  return discrepancy


STATEMENT_BUILDERS = {
  Statement.PROP_KEY: prop_key_sides,
  Statement.THEOREM1: theorem1_sides,
  Statement.THEOREM2: theorem2_sides,
  Statement.JENSEN_STEP: jensen_step_sides,
}


def evaluate_statement(
  statement: Statement,
  a: Vector,
  b: Vector,
  kind: NormKind | None = None,
  mode: SpectrumMode = SpectrumMode.MULTISET,
  relax_norm_floor: bool = False,
) -> InequalitySides:
  """Dispatch to the builder for ``statement``."""
  return STATEMENT_BUILDERS[statement](a, b, kind, mode, relax_norm_floor)
